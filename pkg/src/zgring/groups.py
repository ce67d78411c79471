"""Finite groups as explicit multiplication tables.

Every group here is a complete Cayley table over element indices
``0..order-1`` with index 0 the identity.  Constructors fix the element
names once, so all downstream text output is reproducible.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from functools import cached_property

# Subgroup enumeration (and everything built on it) is desk scale.
ENUMERATION_LIMIT = 128


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[i][j]`` is the index of the product of elements ``i`` and ``j``.
    ``names`` fixes one display string per element; ``inverse_table[i]`` is
    the index of the inverse of element ``i``.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    inverse_table: tuple[int, ...]

    def product(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.inverse_table[i]

    def power(self, i: int, m: int) -> int:
        """Index of the m-th power of element ``i`` (m may be negative)."""
        if m < 0:
            i = self.inverse_table[i]
            m = -m
        m %= self.element_orders[i]
        out = 0
        for _ in range(m):
            out = self.table[out][i]
        return out

    def element(self, index: int) -> GroupElement:
        if not 0 <= index < self.order:
            raise ValueError(f"element index {index} out of range for order {self.order}")
        return GroupElement(self, index)

    def element_named(self, name: str) -> GroupElement:
        """Look up an element by display name (names may repeat in products)."""
        hits = [i for i, s in enumerate(self.names) if s == name]
        if not hits:
            raise ValueError(f"no element named {name!r}")
        if len(hits) > 1:
            raise ValueError(f"element name {name!r} is ambiguous in this group")
        return GroupElement(self, hits[0])

    def elements(self):
        return (GroupElement(self, i) for i in range(self.order))

    def identity(self) -> GroupElement:
        return GroupElement(self, 0)

    def compatible(self, other: FiniteGroup) -> bool:
        """Whether ring elements over the two groups may be mixed."""
        return self is other or (self.table == other.table and self.names == other.names)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i))

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for i in range(self.order):
            m, acc = 1, i
            while acc != 0:
                acc = self.table[acc][i]
                m += 1
            orders.append(m)
        return tuple(orders)

    @cached_property
    def flat_table(self) -> array:
        """Row-major int64 copy of the table, for the compiled kernels."""
        return array("q", [v for row in self.table for v in row])

    def validate(self) -> None:
        """Check the full table invariants; raises ValueError on any failure."""
        n = self.order
        if n <= 0:
            raise ValueError("order must be positive")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("table is not order x order")
        if len(self.names) != n or len(self.inverse_table) != n:
            raise ValueError("names/inverse_table length mismatch")
        full = set(range(n))
        for i in range(n):
            if set(self.table[i]) != full:
                raise ValueError(f"row {i} is not a permutation")
            if {self.table[j][i] for j in range(n)} != full:
                raise ValueError(f"column {i} is not a permutation")
        for j in range(n):
            if self.table[0][j] != j or self.table[j][0] != j:
                raise ValueError("index 0 is not a two-sided identity")
        for i in range(n):
            k = self.inverse_table[i]
            if self.table[i][k] != 0 or self.table[k][i] != 0:
                raise ValueError(f"inverse_table wrong at {i}")
        t = self.table
        for i in range(n):
            for j in range(n):
                tij = t[i][j]
                for k in range(n):
                    if t[tij][k] != t[i][t[j][k]]:
                        raise ValueError(f"associativity fails at ({i},{j},{k})")

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


@dataclass(frozen=True, eq=False)
class GroupElement:
    """An element of a FiniteGroup, identified by index."""

    group: FiniteGroup
    index: int

    @property
    def name(self) -> str:
        return self.group.names[self.index]

    def __mul__(self, other: GroupElement) -> GroupElement:
        if not self.group.compatible(other.group):
            raise ValueError("elements belong to different groups")
        return GroupElement(self.group, self.group.table[self.index][other.index])

    def __pow__(self, m: int) -> GroupElement:
        return GroupElement(self.group, self.group.power(self.index, m))

    def inverse(self) -> GroupElement:
        return GroupElement(self.group, self.group.inverse_table[self.index])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.index == other.index
            and self.group.compatible(other.group)
        )

    def __hash__(self) -> int:
        return hash(self.index)

    def __repr__(self) -> str:
        return f"GroupElement({self.name!r})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup, stored as the strictly sorted tuple of its element indices."""

    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, index: int) -> bool:
        return index in self._member_set

    @cached_property
    def _member_set(self) -> frozenset:
        return frozenset(self.elements)


def element_order(g: GroupElement) -> int:
    """Least m >= 1 with g^m the identity."""
    return g.group.element_orders[g.index]


def _finish(table: list[list[int]], names: list[str]) -> FiniteGroup:
    n = len(table)
    inv = [0] * n
    for i in range(n):
        inv[i] = table[i].index(0)
    return FiniteGroup(
        order=n,
        table=tuple(tuple(row) for row in table),
        names=tuple(names),
        inverse_table=tuple(inv),
    )


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n; element i is named x^i ("1" for the identity)."""
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["1"] + ["x" if i == 1 else f"x^{i}" for i in range(1, n)]
    return _finish(table, names)


def quaternion8() -> FiniteGroup:
    """The order-8 quaternion group with a^4 = 1, a^2 = b^2, ba = a^3 b.

    Elements in index order: 1, a, a^2, a^3, b, ab, a^2b, a^3b.
    """
    # index = i + 4e encodes a^i b^e
    def mul(i: int, e: int, j: int, f: int) -> int:
        if e == 0:
            return (i + j) % 4 + 4 * f
        # a^i b a^j b^f = a^(i+3j) b^(1+f)
        if f == 0:
            return (i + 3 * j) % 4 + 4
        return (i + 3 * j + 2) % 4

    table = [
        [mul(p % 4, p // 4, q % 4, q // 4) for q in range(8)]
        for p in range(8)
    ]
    names = ["1", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"]
    return _finish(table, names)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n (n >= 3): rotations r^i and reflections r^i s."""
    if n < 3:
        raise ValueError("dihedral parameter must be >= 3")

    def mul(p: int, q: int) -> int:
        i, e = p % n, p // n
        j, f = q % n, q // n
        if e == 0:
            return (i + j) % n + n * f
        # r^i s r^j = r^(i-j) s ; (r^i s)(r^j s) = r^(i-j)
        if f == 0:
            return (i - j) % n + n
        return (i - j) % n

    table = [[mul(p, q) for q in range(2 * n)] for p in range(2 * n)]
    rot = ["1"] + ["r" if i == 1 else f"r^{i}" for i in range(1, n)]
    ref = ["s", "rs"] + [f"r^{i}s" for i in range(2, n)]
    return _finish(table, rot + ref)


_S3_PERMS = ((0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1))
_S3_NAMES = ("1", "(12)", "(13)", "(23)", "(123)", "(132)")


def symmetric3() -> FiniteGroup:
    """Symmetric group on 3 points, as permutations in cycle notation."""
    perms = _S3_PERMS

    def compose(p, q):  # apply q, then p
        return tuple(p[q[i]] for i in range(3))

    table = [[perms.index(compose(p, q)) for q in perms] for p in perms]
    return _finish(table, list(_S3_NAMES))


def elementary_abelian2(k: int) -> FiniteGroup:
    """Elementary abelian group of order 2^k (0 <= k <= 7); XOR on bitmasks."""
    if k < 0 or k > 7:
        raise ValueError("elementary_abelian2 parameter must be in 0..7")
    n = 1 << k
    table = [[i ^ j for j in range(n)] for i in range(n)]
    names = []
    for m in range(n):
        if m == 0:
            names.append("1")
        else:
            names.append("·".join(f"e{i + 1}" for i in range(k) if m >> i & 1))
    return _finish(table, names)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product; element (i, j) gets index i*|H| + j.

    Names are joined with "·", identity factors omitted.
    """
    ng, nh = g.order, h.order
    n = ng * nh
    table = [[0] * n for _ in range(n)]
    for i1 in range(ng):
        for j1 in range(nh):
            row = table[i1 * nh + j1]
            gi = g.table[i1]
            hj = h.table[j1]
            for i2 in range(ng):
                base = gi[i2] * nh
                for j2 in range(nh):
                    row[i2 * nh + j2] = base + hj[j2]
    names = []
    for i in range(ng):
        for j in range(nh):
            if i == 0 and j == 0:
                names.append("1")
            elif j == 0:
                names.append(g.names[i])
            elif i == 0:
                names.append(h.names[j])
            else:
                names.append(g.names[i] + "·" + h.names[j])
    return _finish(table, names)


def cyclic_subgroup(group: FiniteGroup, index: int) -> Subgroup:
    """The subgroup generated by a single element."""
    elems = {0}
    acc = index
    while acc != 0:
        elems.add(acc)
        acc = group.table[acc][index]
    return Subgroup(tuple(sorted(elems)))


def _closure(table, gens) -> frozenset:
    elems = {0} | set(gens)
    gens = list(gens)
    frontier = list(elems)
    while frontier:
        new = []
        for w in frontier:
            row = table[w]
            for s in gens:
                t = row[s]
                if t not in elems:
                    elems.add(t)
                    new.append(t)
        frontier = new
    return frozenset(elems)


def generated_subgroup(group: FiniteGroup, generators) -> Subgroup:
    """The subgroup generated by the given element indices."""
    return Subgroup(tuple(sorted(_closure(group.table, generators))))


def subgroup_from_elements(group: FiniteGroup, elements) -> Subgroup:
    """Wrap an element set as a Subgroup, checking it actually is one."""
    elems = frozenset(elements)
    if 0 not in elems:
        raise ValueError("subgroup must contain the identity")
    for i in elems:
        if group.inverse_table[i] not in elems:
            raise ValueError("set is not closed under inversion")
        row = group.table[i]
        for j in elems:
            if row[j] not in elems:
                raise ValueError("set is not closed under the product")
    return Subgroup(tuple(sorted(elems)))


def all_subgroups(group: FiniteGroup) -> list[Subgroup]:
    """The complete subgroup lattice, by join closure of the cyclic subgroups.

    Sorted canonically: by size, then lexicographically on the element set.
    """
    n = group.order
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"subgroup enumeration is limited to order {ENUMERATION_LIMIT}")
    table = group.table
    full = frozenset(range(n))
    subs: set[frozenset] = set()
    for g in range(n):
        subs.add(frozenset(cyclic_subgroup(group, g).elements))
    pending = deque()
    listed = list(subs)
    for a in range(len(listed)):
        for b in range(a + 1, len(listed)):
            pending.append((listed[a], listed[b]))
    while pending:
        aset, bset = pending.popleft()
        if aset <= bset or bset <= aset:
            continue
        union = aset | bset
        if 2 * len(union) > n:
            joined = full  # a subgroup on more than half the elements is everything
        else:
            joined = _closure(table, union)
        if joined not in subs:
            for other in subs:
                pending.append((joined, other))
            subs.add(joined)
    return sorted((Subgroup(tuple(sorted(s))) for s in subs), key=lambda h: (len(h.elements), h.elements))


def is_normal(group: FiniteGroup, sub: Subgroup) -> bool:
    """Whether g^-1 h g stays in the subgroup for all g in the group."""
    members = subgroup_from_elements(group, sub.elements)._member_set
    table = group.table
    inv = group.inverse_table
    for g in range(group.order):
        gi = inv[g]
        for h in members:
            if table[table[gi][h]][g] not in members:
                return False
    return True


@dataclass(frozen=True)
class GroupClassification:
    """Structural flags used by the symmetric-unit criterion."""

    is_abelian: bool
    is_hamiltonian: bool
    is_hamiltonian_2group: bool
    all_subgroups_normal: bool
    witness: Subgroup | GroupElement | None


def _odd_prime_order_element(group: FiniteGroup) -> GroupElement:
    for i in range(1, group.order):
        m = group.element_orders[i]
        q = 3
        while q <= m:
            if m % q == 0:
                return group.element(group.power(i, m // q))
            q += 2
    raise RuntimeError("no element of odd prime order found")


def classify(group: FiniteGroup) -> GroupClassification:
    """Classify a group as abelian / hamiltonian / hamiltonian 2-group.

    Hamiltonian means nonabelian with every subgroup normal; the 2-group
    flag additionally requires every element order to be a power of two.
    The witness is a non-normal subgroup when one exists, otherwise an
    element of odd prime order when the group is hamiltonian but not a
    2-group.
    """
    if group.order > ENUMERATION_LIMIT:
        raise ValueError(f"classification is limited to order {ENUMERATION_LIMIT}")
    if group.is_abelian:
        # Conjugation is trivial, so the lattice scan would find nothing.
        return GroupClassification(True, False, False, True, None)
    witness: Subgroup | GroupElement | None = None
    for sub in all_subgroups(group):
        if not is_normal(group, sub):
            witness = sub
            break
    all_normal = witness is None
    hamiltonian = all_normal
    two_group = hamiltonian and all(
        m & (m - 1) == 0 for m in group.element_orders
    )
    if hamiltonian and not two_group:
        witness = _odd_prime_order_element(group)
    return GroupClassification(
        is_abelian=False,
        is_hamiltonian=hamiltonian,
        is_hamiltonian_2group=two_group,
        all_subgroups_normal=all_normal,
        witness=witness,
    )
