"""Constructions of explicit units in integral group rings.

Three families live here:

* bicyclic units 1 + (1-x) y x^, together with their symmetric products
  u u* and u* u;
* Hoechsmann units built from two geometric partial sums on a cyclic
  subgroup plus an integer multiple of the full cyclic sum;
* the standard noncommuting pair of symmetric units in Z[Q8 x Cp] for an
  odd prime p, with the intermediate elements of that computation exposed
  for inspection.

Everything claimed about a constructed unit (unit-hood, symmetry,
noncommutation) is verified at construction time, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .groups import (
    FiniteGroup,
    GroupElement,
    cyclic,
    cyclic_subgroup,
    direct_product,
    element_order,
    quaternion8,
)
from .ring import (
    RingElement,
    UnitCertificate,
    VerificationError,
    canonical_text,
    certificate_product,
    commutator_nonzero,
    embed,
    hat,
    is_symmetric,
    one,
    star,
    trivial_unit_certificate,
    try_inverse,
)

MAX_PAIR_PRIME = 13


@dataclass(frozen=True)
class HoechsmannParams:
    """Parameters (x, i, j, k) with i and j invertible mod n = o(x) and ik = 1 mod n."""

    x: GroupElement
    n: int
    i: int
    j: int
    k: int

    def __post_init__(self):
        n = self.n
        if n != element_order(self.x):
            raise ValueError("n must be the order of x")
        for v in (self.i, self.j, self.k):
            if not 1 <= v < n:
                raise ValueError("i, j, k must lie in 1..n-1")
        if math.gcd(self.i, n) != 1 or math.gcd(self.j, n) != 1:
            raise ValueError("i and j must be coprime to n")
        if (self.i * self.k) % n != 1:
            raise ValueError("k must invert i modulo n")

    @property
    def scalar(self) -> int:
        return (1 - self.i * self.k) // self.n


def bicyclic(x: GroupElement, y: GroupElement) -> UnitCertificate:
    """The bicyclic unit u = 1 + (1-x) y x^ with inverse 2 - u.

    The generator (1-x) y x^ squares to zero because x^ (1-x) = 0, so the
    inverse is immediate.  u equals 1 exactly when conjugating x by y
    stays inside the cyclic subgroup generated by x.
    """
    if not x.group.compatible(y.group):
        raise ValueError("elements belong to different groups")
    ident = one(x.group)
    nil = (ident - embed(x)) * embed(y) * hat(x)
    u = ident + nil
    return UnitCertificate(u, ident - nil)


def is_trivial_bicyclic_pair(x: GroupElement, y: GroupElement) -> bool:
    """Whether y^-1 x y lies in <x> (exactly when the bicyclic unit is 1)."""
    g = x.group
    conj = g.table[g.table[g.inverse_table[y.index]][x.index]][y.index]
    return conj in cyclic_subgroup(g, x.index)


def symmetric_products(cert: UnitCertificate) -> tuple[UnitCertificate, UnitCertificate]:
    """Certified symmetric units u u* and u* u from a certified unit u."""
    u, v = cert.unit, cert.inverse
    first = UnitCertificate(u * star(u), star(v) * v)
    second = UnitCertificate(star(u) * u, v * star(v))
    for c in (first, second):
        if not is_symmetric(c.unit):
            raise VerificationError("u u* failed the symmetry check")
    return first, second


def _partial_sum(x: GroupElement, step: int, terms: int) -> RingElement:
    group = x.group
    out = [0] * group.order
    for m in range(terms):
        out[group.power(x.index, step * m)] += 1
    return RingElement(group, tuple(out))


def hoechsmann(params: HoechsmannParams) -> UnitCertificate:
    """The Hoechsmann unit for (x, i, j, k), certified by the determinant oracle.

    u = (1 + x^j + ... + x^(j(i-1))) (1 + x^i + ... + x^(i(k-1))) + (1-ik)/n x^
    """
    x = params.x
    u = (
        _partial_sum(x, params.j, params.i) * _partial_sum(x, params.i, params.k)
        + params.scalar * hat(x)
    )
    cert = try_inverse(u)
    if cert is None:
        raise VerificationError(
            f"Hoechsmann element is not a unit for parameters {params!r}"
        )
    return cert


@dataclass(frozen=True)
class SymmetricPairReport:
    """Two verified noncommuting symmetric units, with construction provenance."""

    s1: UnitCertificate
    s2: UnitCertificate
    construction: str  # "bicyclic-derived" | "hoechsmann-derived"
    parameters: dict
    commutator_nonzero: bool
    symmetry_verified: bool

    def __post_init__(self):
        if self.construction not in ("bicyclic-derived", "hoechsmann-derived"):
            raise ValueError(f"unknown construction tag {self.construction!r}")
        if not (is_symmetric(self.s1.unit) and is_symmetric(self.s2.unit)):
            raise VerificationError("pair report holds a non-symmetric unit")
        if not commutator_nonzero(self.s1.unit, self.s2.unit):
            raise VerificationError("pair report units commute")
        if not (self.commutator_nonzero and self.symmetry_verified):
            raise VerificationError("pair report flags must record verified facts")


def pair_from_bicyclic(x: GroupElement, y: GroupElement) -> SymmetricPairReport:
    """Noncommuting symmetric pair (u u*, u* u) from a nontrivial bicyclic unit."""
    u = bicyclic(x, y)
    if u.unit == one(x.group):
        raise ValueError("bicyclic unit is trivial; no symmetric pair arises")
    s1, s2 = symmetric_products(u)
    return SymmetricPairReport(
        s1=s1,
        s2=s2,
        construction="bicyclic-derived",
        parameters={"x": x.name, "y": y.name},
        commutator_nonzero=True,
        symmetry_verified=True,
    )


def _check_pair_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or any(p % q == 0 for q in range(3, p) if q * q <= p):
        raise ValueError("p must be an odd prime")
    if p > MAX_PAIR_PRIME:
        raise ValueError(f"p is limited to {MAX_PAIR_PRIME} at desk scale")


def _pair_setup(p: int):
    group = direct_product(quaternion8(), cyclic(p))
    a = group.element_named("a")
    b = group.element_named("b")
    g = group.element_named("x")
    return group, a * g, b * g


def pair_parameters(p: int) -> dict:
    """Hoechsmann parameters used for the Q8 x Cp symmetric pair."""
    if p == 3:
        n, i, j, k, mult = 12, 5, 5, 5, 4
    else:
        n = 4 * p
        i = j = 3
        k = pow(3, -1, n)
        mult = -2
    return {
        "p": p,
        "n": n,
        "i": i,
        "j": j,
        "k": k,
        "scalar": (1 - i * k) // n,
        "multiplier_exponent": mult,
    }


def noncommuting_pair(p: int) -> SymmetricPairReport:
    """A verified pair of noncommuting symmetric units in Z[Q8 x Cp].

    For p != 3, both units come from Hoechsmann units on the order-4p
    elements ag and bg with i = j = 3, multiplied by the central (ag)^-2
    (resp. (bg)^-2) to make them symmetric.  For p = 3 the parameters are
    i = j = k = 5 with multiplier (ag)^4 (resp. (bg)^4).
    """
    _check_pair_prime(p)
    params = pair_parameters(p)
    group, ag, bg = _pair_setup(p)
    mult = params["multiplier_exponent"]
    s_units = []
    for x in (ag, bg):
        if element_order(x) != params["n"]:
            raise VerificationError("expected an element of order 4p")
        cert = hoechsmann(HoechsmannParams(x, params["n"], params["i"], params["j"], params["k"]))
        s = certificate_product(trivial_unit_certificate(x**mult), cert)
        if not is_symmetric(s.unit):
            raise VerificationError("multiplier did not symmetrize the unit")
        s_units.append(s)
    return SymmetricPairReport(
        s1=s_units[0],
        s2=s_units[1],
        construction="hoechsmann-derived",
        parameters=params,
        commutator_nonzero=True,
        symmetry_verified=True,
    )


@dataclass(frozen=True)
class PairDiagnostics:
    """Intermediate elements of the Q8 x Cp pair computation.

    u2/v2 are the bare products of the two Hoechsmann factors (no cyclic-sum
    term); u3/v3 keep only the displayed odd-exponent terms 2 x^3 +
    3 x^9 + ... + 3 x^(3(k-2)) + 2 x^(3k).  residue_check records whether
    u3 v3 and v3 u3 match the expected four noncentral products modulo 3.
    """

    p: int
    k: int
    u2: RingElement
    v2: RingElement
    u3: RingElement
    v3: RingElement
    residue_check: bool
    residue_u3v3: RingElement = field(repr=False)
    residue_v3u3: RingElement = field(repr=False)


def _boundary_odd_terms(x: GroupElement, k: int) -> RingElement:
    group = x.group
    out = [0] * group.order
    out[group.power(x.index, 3)] += 2
    for t in range(3, k - 1, 2):
        out[group.power(x.index, 3 * t)] += 3
    out[group.power(x.index, 3 * k)] += 2
    return RingElement(group, tuple(out))


def noncommuting_pair_diagnostics(p: int) -> PairDiagnostics:
    """Expose the intermediate reduction of the Q8 x Cp computation (p != 3)."""
    _check_pair_prime(p)
    if p == 3:
        raise ValueError("diagnostics require p != 3 (no i = j = 3 reduction at p = 3)")
    params = pair_parameters(p)
    k = params["k"]
    group, ag, bg = _pair_setup(p)
    u2 = _partial_sum(ag, 3, 3) * _partial_sum(ag, 3, k)
    v2 = _partial_sum(bg, 3, 3) * _partial_sum(bg, 3, k)
    u3 = _boundary_odd_terms(ag, k)
    v3 = _boundary_odd_terms(bg, k)

    a = group.element_named("a")
    b = group.element_named("b")
    g = group.element_named("x")
    ab = a * b
    a3b = a * a * a * b
    target_uv = 4 * embed(ab * g**6) + 8 * embed(a3b * g**4) + 4 * embed(ab * g**2)
    target_vu = 4 * embed(a3b * g**6) + 8 * embed(ab * g**4) + 4 * embed(a3b * g**2)
    diff_uv = u3 * v3 - target_uv
    diff_vu = v3 * u3 - target_vu
    ok = all(c % 3 == 0 for c in diff_uv.coeffs) and all(c % 3 == 0 for c in diff_vu.coeffs)
    return PairDiagnostics(
        p=p,
        k=k,
        u2=u2,
        v2=v2,
        u3=u3,
        v3=v3,
        residue_check=ok,
        residue_u3v3=target_uv,
        residue_v3u3=target_vu,
    )
