"""Deciding when the symmetric units of Z[G] form a multiplicative group.

For a finite group G this happens exactly when G is abelian or a
hamiltonian 2-group.  When the answer is no, an explicit pair of
noncommuting symmetric units is produced: from a bicyclic unit when some
subgroup is non-normal, otherwise from the Q8 x Cp construction applied
inside a quaternion subgroup together with a commuting element of odd
prime order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import backend
from .groups import (
    ENUMERATION_LIMIT,
    FiniteGroup,
    GroupClassification,
    GroupElement,
    Subgroup,
    classify,
    cyclic,
    direct_product,
    element_order,
    quaternion8,
)
from .ring import (
    RingElement,
    UnitCertificate,
    VerificationError,
    certificate_product,
    commutator_nonzero,
    embed,
    is_symmetric,
    is_trivial_unit,
    one,
    star,
    trivial_unit_certificate,
    try_inverse,
)
from .units import (
    HoechsmannParams,
    SymmetricPairReport,
    hoechsmann,
    is_trivial_bicyclic_pair,
    noncommuting_pair,
    pair_from_bicyclic,
)

SEARCH_CANDIDATE_LIMIT = 10_000_000

BRANCH_ABELIAN = "abelian"
BRANCH_HAMILTONIAN_2GROUP = "hamiltonian-2-group"
BRANCH_NON_NORMAL = "non-normal-subgroup"
BRANCH_ODD_TORSION = "hamiltonian-with-odd-torsion"


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of the symmetric-unit criterion for one finite group."""

    group_description: str
    flags: GroupClassification
    prediction: bool
    branch: str
    witness: Subgroup | GroupElement | None

    def __post_init__(self):
        if self.prediction != (self.flags.is_abelian or self.flags.is_hamiltonian_2group):
            raise VerificationError("prediction is inconsistent with the flags")
        expected = _branch_for(self.flags)
        if self.branch != expected:
            raise VerificationError(f"branch {self.branch!r} does not match flags")


def _branch_for(flags: GroupClassification) -> str:
    if flags.is_abelian:
        return BRANCH_ABELIAN
    if flags.is_hamiltonian_2group:
        return BRANCH_HAMILTONIAN_2GROUP
    if not flags.all_subgroups_normal:
        return BRANCH_NON_NORMAL
    return BRANCH_ODD_TORSION


def criterion(group: FiniteGroup, description: str | None = None) -> CriterionReport:
    """Decide whether the symmetric units of Z[G] form a group."""
    flags = classify(group)
    return CriterionReport(
        group_description=description or f"group of order {group.order}",
        flags=flags,
        prediction=flags.is_abelian or flags.is_hamiltonian_2group,
        branch=_branch_for(flags),
        witness=flags.witness,
    )


def _first_nontrivial_bicyclic_pair(group: FiniteGroup) -> tuple[GroupElement, GroupElement]:
    for xi in range(1, group.order):
        x = group.element(xi)
        for yi in range(1, group.order):
            y = group.element(yi)
            if not is_trivial_bicyclic_pair(x, y):
                return x, y
    raise VerificationError("no non-normal cyclic conjugate found despite the flags")


def _find_quaternion_and_odd_commuter(group: FiniteGroup) -> tuple[int, int, int]:
    """First (a, b, g) with a, b spanning a quaternion subgroup and g of odd
    prime order commuting with both, in canonical index order."""
    table = group.table
    inv = group.inverse_table
    orders = group.element_orders
    n = group.order
    for a in range(1, n):
        if orders[a] != 4:
            continue
        a_sq = table[a][a]
        a_inv = inv[a]
        for b in range(1, n):
            if orders[b] != 4 or table[b][b] != a_sq:
                continue
            if table[table[b][a]][inv[b]] != a_inv:
                continue
            for g in range(1, n):
                m = orders[g]
                if m < 3 or m % 2 == 0:
                    continue
                if any(m % q == 0 for q in range(3, m)):
                    continue  # odd prime order only
                if table[g][a] == table[a][g] and table[g][b] == table[b][g]:
                    return a, b, g
    raise VerificationError("no quaternion subgroup with odd commuter despite the flags")


def _map_pair_into(group: FiniteGroup, a: int, b: int, g: int, p: int) -> SymmetricPairReport:
    """Run the Q8 x Cp construction abstractly, then push it along the
    embedding a, b, g generate."""
    report = noncommuting_pair(p)
    model = report.s1.unit.group  # Q8 x Cp with packed indices q*p + c
    table = group.table
    # images of 1, a, a^2, a^3, b, ab, a^2b, a^3b
    quat = [0, a, table[a][a], table[table[a][a]][a]]
    quat += [b, table[a][b], table[table[a][a]][b], table[table[table[a][a]][a]][b]]
    image = []
    for q in range(8):
        acc = quat[q]
        for _ in range(p):
            image.append(acc)
            acc = table[acc][g]
    if len(set(image)) != model.order:
        raise VerificationError("embedding of Q8 x Cp is not injective")
    for m in range(model.order):
        for l in range(model.order):
            if image[model.table[m][l]] != table[image[m]][image[l]]:
                raise VerificationError("embedding of Q8 x Cp is not a homomorphism")

    def push(w: RingElement) -> RingElement:
        out = [0] * group.order
        for idx, c in enumerate(w.coeffs):
            if c:
                out[image[idx]] = c
        return RingElement(group, tuple(out))

    s1 = UnitCertificate(push(report.s1.unit), push(report.s1.inverse))
    s2 = UnitCertificate(push(report.s2.unit), push(report.s2.inverse))
    params = dict(report.parameters)
    params.update({"a": group.names[a], "b": group.names[b], "g": group.names[g]})
    return SymmetricPairReport(
        s1=s1,
        s2=s2,
        construction="hoechsmann-derived",
        parameters=params,
        commutator_nonzero=True,
        symmetry_verified=True,
    )


def find_counterexample(group: FiniteGroup, description: str | None = None) -> SymmetricPairReport:
    """Produce a verified noncommuting pair of symmetric units in Z[G].

    Requires the criterion to predict that the symmetric units do not form
    a group; the branch of the report selects the construction.
    """
    report = criterion(group, description)
    if report.prediction:
        raise ValueError("symmetric units form a group here; no counterexample exists")
    if report.branch == BRANCH_NON_NORMAL:
        x, y = _first_nontrivial_bicyclic_pair(group)
        return pair_from_bicyclic(x, y)
    a, b, g = _find_quaternion_and_odd_commuter(group)
    return _map_pair_into(group, a, b, g, group.element_orders[g])


@dataclass(frozen=True)
class SearchResult:
    """All units found in a coefficient box, restricted to augmentation 1."""

    bound: int
    units_found: tuple[UnitCertificate, ...]
    all_trivial: bool

    def __post_init__(self):
        for cert in self.units_found:
            if sum(cert.unit.coeffs) != 1:
                raise VerificationError("search returned a non-normalized unit")
            if any(abs(c) > self.bound for c in cert.unit.coeffs):
                raise VerificationError("search returned a unit outside the box")


def bounded_unit_search(group: FiniteGroup, bound: int) -> SearchResult:
    """Certify every augmentation-one unit with all coefficients in [-bound, bound].

    Enumeration is exhaustive over the box; candidates surviving the
    determinant filter are fully certified (two-sided inverse check).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = group.order
    if (2 * bound + 1) ** n > SEARCH_CANDIDATE_LIMIT:
        raise ValueError(
            f"box of {(2 * bound + 1) ** n} candidates exceeds the "
            f"{SEARCH_CANDIDATE_LIMIT} enumeration guard"
        )
    certs = []
    for vec in sorted(backend.search_box(group, bound)):
        cert = try_inverse(RingElement(group, tuple(vec)))
        if cert is None:
            raise VerificationError("determinant filter and certifier disagree")
        certs.append(cert)
    seen = set()
    for cert in certs:
        if cert.unit.coeffs in seen:
            raise VerificationError("duplicate unit in search output")
        seen.add(cert.unit.coeffs)
    return SearchResult(
        bound=bound,
        units_found=tuple(certs),
        all_trivial=all(is_trivial_unit(c.unit) for c in certs),
    )


def _random_hoechsmann(group: FiniteGroup, rng: random.Random) -> UnitCertificate | None:
    candidates = [i for i in range(group.order) if group.element_orders[i] >= 2]
    if not candidates:
        return None
    x = group.element(rng.choice(candidates))
    n = element_order(x)
    units_mod_n = [i for i in range(1, n) if _coprime(i, n)]
    i = rng.choice(units_mod_n)
    j = rng.choice(units_mod_n)
    k = pow(i, -1, n)
    return hoechsmann(HoechsmannParams(x, n, i, j, k))


def _coprime(a: int, b: int) -> bool:
    while b:
        a, b = b, a % b
    return a == 1


def pairwise_closed(pool: list[RingElement]) -> bool:
    """Whether all pairwise products of the pool are symmetric and commute."""
    for i in range(len(pool)):
        for j in range(i, len(pool)):
            prod = pool[i] * pool[j]
            if not is_symmetric(prod):
                return False
            if prod != pool[j] * pool[i]:
                return False
    return True


def closure_probe(group: FiniteGroup, samples: int, seed: int) -> bool:
    """Falsification probe for closure of the symmetric units.

    Only meaningful when the criterion predicts a group: builds a pool of
    symmetric units (symmetric trivial units, u u* over random unit words,
    Hoechsmann-based where defined) and checks that all pairwise products
    are symmetric and commute.  Returns True when no violation is found;
    it cannot prove closure, only refute it.
    """
    report = criterion(group)
    if not report.prediction:
        raise ValueError("closure probe requires a group predicted to have closed symmetric units")
    rng = random.Random(seed)
    pool: list[RingElement] = [one(group)]
    for i in range(1, group.order):
        if group.table[i][i] == 0:  # involutions give symmetric trivial units
            pool.append(embed(group.element(i)))
            pool.append(-embed(group.element(i)))
    while len(pool) < samples:
        word = trivial_unit_certificate(
            group.element(rng.randrange(group.order)), rng.choice((1, -1))
        )
        h = _random_hoechsmann(group, rng)
        if h is not None:
            word = certificate_product(word, h)
        word = certificate_product(
            word,
            trivial_unit_certificate(group.element(rng.randrange(group.order))),
        )
        pool.append(word.unit * star(word.unit))
    return pairwise_closed(pool)
