"""Group construction, subgroup lattices and classification."""

import itertools

import pytest

from zgring import (
    Subgroup,
    all_subgroups,
    classify,
    cyclic,
    cyclic_subgroup,
    dihedral,
    direct_product,
    element_order,
    elementary_abelian2,
    generated_subgroup,
    is_normal,
    quaternion8,
    subgroup_from_elements,
    symmetric3,
)


def brute_force_subgroups(group):
    """Oracle: every subset containing the identity that is closed under
    product and inversion.  Only usable for tiny groups."""
    n = group.order
    found = set()
    for mask in range(1 << n):
        if not mask & 1:
            continue
        elems = [i for i in range(n) if mask >> i & 1]
        ok = all(group.inverse_table[i] in elems for i in elems) and all(
            group.table[i][j] in elems for i in elems for j in elems
        )
        if ok:
            found.add(tuple(elems))
    return found


def test_all_catalog_tables_are_valid(catalog):
    for group in catalog.values():
        group.validate()


def test_element_orders_divide_group_order(catalog):
    for group in catalog.values():
        for m in group.element_orders:
            assert group.order % m == 0


def test_cyclic_trivial_group():
    c1 = cyclic(1)
    assert c1.order == 1
    assert c1.names == ("1",)


def test_cyclic_generator_order():
    c5 = cyclic(5)
    assert element_order(c5.element_named("x")) == 5


def test_cyclic_inverse_table():
    c4 = cyclic(4)
    x = c4.element_named("x")
    assert x.inverse().name == "x^3"


def test_cyclic_rejects_zero():
    with pytest.raises(ValueError):
        cyclic(0)


def test_quaternion_presentation_relations():
    q8 = quaternion8()
    a, b = q8.element_named("a"), q8.element_named("b")
    assert (b * a).name == "a^3b"
    assert (b * b).name == "a^2"
    assert (a ** 4).name == "1"
    assert element_order(q8.element_named("ab")) == 4


def test_standard_constructor_orders():
    assert symmetric3().order == 6
    assert dihedral(4).order == 8
    e4 = elementary_abelian2(2)
    assert e4.order == 4
    assert all(m == 2 for m in e4.element_orders[1:])


def test_constructor_rejects_out_of_range():
    with pytest.raises(ValueError):
        dihedral(2)
    with pytest.raises(ValueError):
        elementary_abelian2(-1)
    with pytest.raises(ValueError):
        elementary_abelian2(8)


def test_direct_product_orders(catalog):
    assert catalog["Q8xC3"].order == 24
    ag = catalog["Q8xC5"].element_named("a·x")
    assert element_order(ag) == 20
    q8c7 = direct_product(quaternion8(), cyclic(7))
    assert element_order(q8c7.element_named("b·x")) == 28


def test_c2xc2_matches_elementary_abelian(catalog):
    # identical index tables, only the names differ
    assert catalog["C2xC2"].table == elementary_abelian2(2).table


def test_direct_product_abelian_iff_factors_are(catalog):
    small = [catalog[k] for k in ("C1", "C2", "C3", "S3", "Q8", "D4")]
    for g, h in itertools.product(small, repeat=2):
        prod = direct_product(g, h)
        assert prod.is_abelian == (g.is_abelian and h.is_abelian)


def test_element_named_ambiguity():
    prod = direct_product(cyclic(2), cyclic(2))
    with pytest.raises(ValueError, match="ambiguous"):
        prod.element_named("x")
    with pytest.raises(ValueError, match="no element"):
        prod.element_named("z")


def test_q8_subgroups_match_brute_force():
    q8 = quaternion8()
    oracle = brute_force_subgroups(q8)
    assert len(oracle) == 6
    got = all_subgroups(q8)
    assert {h.elements for h in got} == oracle
    # canonical output order: by size then element set
    assert [h.elements for h in got] == sorted((h.elements for h in got), key=lambda e: (len(e), e))


def test_s3_subgroups_match_brute_force():
    s3 = symmetric3()
    oracle = brute_force_subgroups(s3)
    assert len(oracle) == 6
    assert {h.elements for h in all_subgroups(s3)} == oracle


def test_trivial_group_subgroups():
    assert [h.elements for h in all_subgroups(cyclic(1))] == [(0,)]


def test_subgroup_enumeration_guard():
    with pytest.raises(ValueError, match="128"):
        all_subgroups(direct_product(cyclic(16), cyclic(16)))


def test_every_q8_subgroup_is_normal():
    q8 = quaternion8()
    assert all(is_normal(q8, h) for h in all_subgroups(q8))


def test_s3_transposition_subgroup_not_normal():
    s3 = symmetric3()
    x = s3.element_named("(12)").index
    y = s3.element_named("(13)").index
    conj = s3.table[s3.table[s3.inverse_table[y]][x]][y]
    assert s3.names[conj] == "(23)"  # the conjugate leaves <(12)>
    assert not is_normal(s3, cyclic_subgroup(s3, x))


def test_whole_group_is_normal(catalog):
    s3 = catalog["S3"]
    assert is_normal(s3, Subgroup(tuple(range(6))))


def test_is_normal_rejects_non_closed():
    with pytest.raises(ValueError):
        is_normal(symmetric3(), Subgroup((0, 1, 2)))


def test_generated_subgroup():
    q8 = quaternion8()
    a = q8.element_named("a").index
    b = q8.element_named("b").index
    assert generated_subgroup(q8, [a, b]).elements == tuple(range(8))
    assert generated_subgroup(q8, [a]).elements == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        subgroup_from_elements(q8, [0, a])


def test_classify_quaternion():
    flags = classify(quaternion8())
    assert flags.is_hamiltonian_2group
    assert flags.is_hamiltonian
    assert not flags.is_abelian
    assert flags.witness is None


def test_classify_q8_with_odd_factor(catalog):
    flags = classify(catalog["Q8xC3"])
    assert flags.is_hamiltonian and not flags.is_hamiltonian_2group
    assert flags.all_subgroups_normal
    assert element_order(flags.witness) == 3


def test_classify_cyclic6():
    assert classify(cyclic(6)).is_abelian


def test_classify_dihedral_witness():
    flags = classify(dihedral(4))
    assert not flags.all_subgroups_normal
    assert isinstance(flags.witness, Subgroup)
    assert not is_normal(dihedral(4), flags.witness)


def test_classify_elementary_abelian_up_to_32():
    for k in range(6):
        assert classify(elementary_abelian2(k)).is_abelian


def test_classify_hamiltonian_2group_products():
    q8 = quaternion8()
    for k in range(3):
        flags = classify(direct_product(q8, elementary_abelian2(k)))
        assert flags.is_hamiltonian_2group


def test_power_and_inverse(catalog):
    g = catalog["Q8xC5"]
    ag = g.element_named("a·x")
    assert (ag ** -2) == (ag ** 18)
    assert (ag ** 20).index == 0
    assert (ag * ag.inverse()).index == 0
