"""Exact arithmetic in the integral group ring of a finite group.

Ring elements are dense integer coefficient vectors indexed by group
elements.  Coefficients are plain Python integers, so nothing here ever
overflows; the compiled kernel is used transparently when safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import backend
from .exactla import bareiss_determinant, solve_exact
from .groups import FiniteGroup, GroupElement


class VerificationError(RuntimeError):
    """An internal consistency check failed; this always indicates a bug."""


@dataclass(frozen=True, eq=False)
class RingElement:
    """An element of Z[G]: one integer coefficient per group element."""

    group: FiniteGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError("coefficient vector length must equal the group order")

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.group, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.group, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> RingElement:
        return RingElement(self.group, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, RingElement):
            self._check(other)
            return RingElement(self.group, backend.mul_coeffs(self.group, self.coeffs, other.coeffs))
        if isinstance(other, int):
            return RingElement(self.group, tuple(other * x for x in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return RingElement(self.group, tuple(other * x for x in self.coeffs))
        return NotImplemented

    def __pow__(self, m: int) -> RingElement:
        if m < 0:
            raise ValueError("negative powers need a certified inverse")
        acc = one(self.group)
        base = self
        while m:
            if m & 1:
                acc = acc * base
            base = base * base if m > 1 else base
            m >>= 1
        return acc

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElement)
            and self.coeffs == other.coeffs
            and self.group.compatible(other.group)
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return canonical_text(self)

    def __repr__(self) -> str:
        return f"RingElement({canonical_text(self)})"

    def _check(self, other: RingElement) -> None:
        if not self.group.compatible(other.group):
            raise ValueError("ring elements belong to different group rings")


def zero(group: FiniteGroup) -> RingElement:
    return RingElement(group, (0,) * group.order)


def one(group: FiniteGroup) -> RingElement:
    return RingElement(group, (1,) + (0,) * (group.order - 1))


def embed(g: GroupElement) -> RingElement:
    """The group element g as a ring element with coefficient 1."""
    c = [0] * g.group.order
    c[g.index] = 1
    return RingElement(g.group, tuple(c))


def add(w1: RingElement, w2: RingElement) -> RingElement:
    return w1 + w2


def neg(w: RingElement) -> RingElement:
    return -w


def scalar_mul(c: int, w: RingElement) -> RingElement:
    return c * w


def mul(w1: RingElement, w2: RingElement) -> RingElement:
    return w1 * w2


def star(w: RingElement) -> RingElement:
    """The involution sending each group element to its inverse, extended linearly."""
    inv = w.group.inverse_table
    out = [0] * w.group.order
    for i, c in enumerate(w.coeffs):
        out[inv[i]] = c
    return RingElement(w.group, tuple(out))


def augmentation(w: RingElement) -> int:
    """Sum of coefficients; a ring homomorphism onto the integers."""
    return sum(w.coeffs)


def hat(x: GroupElement) -> RingElement:
    """Sum of all distinct powers of x, each with coefficient 1."""
    group = x.group
    out = [0] * group.order
    acc = 0
    while True:
        out[acc] = 1
        acc = group.table[acc][x.index]
        if acc == 0:
            break
    return RingElement(group, tuple(out))


def regular_matrix(w: RingElement) -> list[list[int]]:
    """Matrix of left multiplication by w on Z[G]; column j is w * g_j."""
    n = w.group.order
    table = w.group.table
    mat = [[0] * n for _ in range(n)]
    for i, c in enumerate(w.coeffs):
        if c:
            row = table[i]
            for j in range(n):
                mat[row[j]][j] = c
    return mat


@dataclass(frozen=True)
class UnitCertificate:
    """A ring element together with its verified two-sided inverse."""

    unit: RingElement
    inverse: RingElement

    def __post_init__(self):
        ident = one(self.unit.group)
        if self.unit * self.inverse != ident or self.inverse * self.unit != ident:
            raise VerificationError("certificate products are not the identity")


def try_inverse(w: RingElement) -> UnitCertificate | None:
    """Certify w as a unit of Z[G], or return None.

    The determinant of the left-multiplication matrix is computed by
    fraction-free elimination; a unit must have determinant +-1, in which
    case the inverse is recovered by exact solve and checked on both sides.
    """
    n = w.group.order
    rhs = [1] + [0] * (n - 1)
    det, x = solve_exact(regular_matrix(w), rhs)
    if det not in (1, -1):
        return None
    assert x is not None
    coeffs = []
    for f in x:
        if f.denominator != 1:
            raise VerificationError("unimodular system produced a non-integer solution")
        coeffs.append(int(f))
    inv = RingElement(w.group, tuple(coeffs))
    return UnitCertificate(w, inv)  # the certificate re-verifies both products


def is_symmetric(w: RingElement) -> bool:
    return star(w) == w


def is_unitary(cert: UnitCertificate) -> bool:
    """Whether the certified unit u satisfies u * star(u) = 1."""
    return cert.unit * star(cert.unit) == one(cert.unit.group)


def is_central(w: RingElement) -> bool:
    group = w.group
    for i in range(1, group.order):
        g = embed(group.element(i))
        if w * g != g * w:
            return False
    return True


def is_trivial_unit(w: RingElement) -> bool:
    """Whether w is +-g for a single group element g."""
    sup = w.support()
    return len(sup) == 1 and w.coeffs[sup[0]] in (1, -1)


def commutator_nonzero(w1: RingElement, w2: RingElement) -> bool:
    return w1 * w2 != w2 * w1


def trivial_unit_certificate(g: GroupElement, sign: int = 1) -> UnitCertificate:
    """Certificate for +-g (inverse is +-g^-1)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return UnitCertificate(sign * embed(g), sign * embed(g.inverse()))


def certificate_product(c1: UnitCertificate, c2: UnitCertificate) -> UnitCertificate:
    return UnitCertificate(c1.unit * c2.unit, c2.inverse * c1.inverse)


def certificate_star(cert: UnitCertificate) -> UnitCertificate:
    # (u*)^-1 = (u^-1)* because star is an anti-automorphism.
    return UnitCertificate(star(cert.unit), star(cert.inverse))


def canonical_text(w: RingElement) -> str:
    """Render a ring element in the canonical text form used by the CLI.

    Terms appear in element-index order as "c·name" with coefficient 1
    elided and the identity element rendered as a bare coefficient; terms
    are joined with " + " or " - ".
    """
    parts = []
    for i, c in enumerate(w.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif mag == 1:
            body = w.group.names[i]
        else:
            body = f"{mag}·{w.group.names[i]}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts) if parts else "0"


def determinant_of_regular_matrix(w: RingElement) -> int:
    """Determinant of the left-multiplication matrix (pure fraction-free path)."""
    return bareiss_determinant(regular_matrix(w))
