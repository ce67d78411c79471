"""Bicyclic units, Hoechsmann units, and the Q8 x Cp symmetric pairs."""

import random

import pytest

from zgring import (
    HoechsmannParams,
    RingElement,
    VerificationError,
    augmentation,
    bicyclic,
    canonical_text,
    commutator_nonzero,
    cyclic,
    direct_product,
    element_order,
    embed,
    hat,
    hoechsmann,
    is_symmetric,
    noncommuting_pair,
    noncommuting_pair_diagnostics,
    one,
    pair_from_bicyclic,
    quaternion8,
    star,
    symmetric3,
    symmetric_products,
    try_inverse,
)
from zgring.units import is_trivial_bicyclic_pair


# ------------------------------------------------------------------- bicyclic


def test_bicyclic_s3_is_nontrivial():
    s3 = symmetric3()
    x, y = s3.element_named("(12)"), s3.element_named("(13)")
    cert = bicyclic(x, y)
    assert cert.unit != one(s3)
    assert len(cert.unit.support()) > 1
    assert augmentation(cert.unit) == 1


def test_bicyclic_trivial_when_y_in_cyclic_subgroup():
    s3 = symmetric3()
    x = s3.element_named("(123)")
    for y in (s3.element_named("(123)"), s3.element_named("(132)"), s3.identity()):
        assert bicyclic(x, y).unit == one(s3)


def test_bicyclic_always_trivial_in_q8():
    q8 = quaternion8()
    for x in q8.elements():
        for y in q8.elements():
            assert bicyclic(x, y).unit == one(q8)


def test_bicyclic_nilpotency_identity(catalog):
    for name in ("S3", "D4", "D5"):
        group = catalog[name]
        ident = one(group)
        for x in group.elements():
            for y in group.elements():
                u = bicyclic(x, y).unit
                assert u * (2 * ident - u) == ident


def test_bicyclic_triviality_matches_conjugation(catalog):
    for name in ("S3", "D4"):
        group = catalog[name]
        for x in group.elements():
            for y in group.elements():
                trivial = bicyclic(x, y).unit == one(group)
                assert trivial == is_trivial_bicyclic_pair(x, y)


# ---------------------------------------------------------- symmetric products


def test_symmetric_products_of_trivial_unit():
    from zgring.ring import trivial_unit_certificate

    s3 = symmetric3()
    cert = trivial_unit_certificate(s3.element_named("(123)"))
    first, second = symmetric_products(cert)
    assert first.unit == one(s3)
    assert second.unit == one(s3)


def test_symmetric_products_of_s3_bicyclic_do_not_commute():
    s3 = symmetric3()
    u = bicyclic(s3.element_named("(12)"), s3.element_named("(13)"))
    first, second = symmetric_products(u)
    assert first.unit != second.unit
    assert is_symmetric(first.unit) and is_symmetric(second.unit)
    assert commutator_nonzero(first.unit, second.unit)


def test_symmetric_products_of_symmetric_unit_coincide():
    s3 = symmetric3()
    u = bicyclic(s3.element_named("(12)"), s3.element_named("(13)"))
    sym, _ = symmetric_products(u)  # u u* is itself a symmetric unit
    first, second = symmetric_products(sym)
    assert first.unit == second.unit == sym.unit * sym.unit


def test_symmetric_products_star_law(catalog):
    rng = random.Random(11)
    group = catalog["Q8xC3"]
    for _ in range(5):
        g = group.element(rng.randrange(group.order))
        from zgring.ring import trivial_unit_certificate

        cert = trivial_unit_certificate(g, rng.choice((1, -1)))
        first, second = symmetric_products(cert)
        assert star(first.unit) == first.unit
        assert star(second.unit) == second.unit


# ----------------------------------------------------------------- hoechsmann


def test_hoechsmann_c5_known_unit():
    c5 = cyclic(5)
    cert = hoechsmann(HoechsmannParams(c5.element_named("x"), 5, 2, 2, 3))
    assert cert.unit == RingElement(c5, (0, 0, 1, -1, 1))
    assert canonical_text(cert.unit) == "x^2 - x^3 + x^4"


def test_hoechsmann_degenerate_parameters_give_one():
    c2 = cyclic(2)
    cert = hoechsmann(HoechsmannParams(c2.element_named("x"), 2, 1, 1, 1))
    assert cert.unit == one(c2)


def test_hoechsmann_on_order_20_element():
    group = direct_product(quaternion8(), cyclic(5))
    ag = group.element_named("a·x")
    params = HoechsmannParams(ag, 20, 3, 3, 7)
    assert params.scalar == -1
    cert = hoechsmann(params)
    assert cert.unit * cert.inverse == one(group)


def test_hoechsmann_parameter_validation():
    c6 = cyclic(6)
    x = c6.element_named("x")
    with pytest.raises(ValueError):
        HoechsmannParams(x, 5, 1, 1, 1)  # wrong order
    with pytest.raises(ValueError):
        HoechsmannParams(x, 6, 2, 1, 1)  # gcd(i, n) != 1
    with pytest.raises(ValueError):
        HoechsmannParams(x, 6, 5, 5, 3)  # ik != 1 mod n
    with pytest.raises(ValueError):
        HoechsmannParams(x, 6, 0, 1, 1)  # out of range
    with pytest.raises(ValueError):
        HoechsmannParams(x, 6, 7, 1, 1)  # out of range


def test_hoechsmann_units_are_normalized():
    rng = random.Random(12)
    for group in (cyclic(8), cyclic(12), direct_product(quaternion8(), cyclic(3))):
        for _ in range(10):
            idx = rng.randrange(1, group.order)
            x = group.element(idx)
            n = element_order(x)
            if n < 2:
                continue
            units = [i for i in range(1, n) if _gcd(i, n) == 1]
            i = rng.choice(units)
            j = rng.choice(units)
            k = pow(i, -1, n)
            cert = hoechsmann(HoechsmannParams(x, n, i, j, k))
            assert augmentation(cert.unit) == 1


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ------------------------------------------------------------ Q8 x Cp pairs


def test_pair_p5_parameters_and_verification():
    report = noncommuting_pair(5)
    assert report.parameters["k"] == 7
    assert report.parameters["scalar"] == -1
    assert report.parameters["multiplier_exponent"] == -2
    assert is_symmetric(report.s1.unit) and is_symmetric(report.s2.unit)
    assert commutator_nonzero(report.s1.unit, report.s2.unit)
    assert report.construction == "hoechsmann-derived"


def test_pair_p3_uses_i_j_k_5():
    report = noncommuting_pair(3)
    assert report.parameters["i"] == report.parameters["j"] == report.parameters["k"] == 5
    assert report.parameters["scalar"] == -2
    assert report.parameters["multiplier_exponent"] == 4
    assert is_symmetric(report.s1.unit)
    assert commutator_nonzero(report.s1.unit, report.s2.unit)


def test_pair_p7_parameters():
    assert (3 * 19) % 28 == 1
    report = noncommuting_pair(7)
    assert report.parameters["k"] == 19
    assert commutator_nonzero(report.s1.unit, report.s2.unit)


def test_pair_rejects_bad_primes():
    for p in (2, 4, 9, 15, 1, -3, 17):
        with pytest.raises(ValueError):
            noncommuting_pair(p)


def test_pair_from_bicyclic_report():
    s3 = symmetric3()
    report = pair_from_bicyclic(s3.element_named("(12)"), s3.element_named("(13)"))
    assert report.construction == "bicyclic-derived"
    assert report.parameters == {"x": "(12)", "y": "(13)"}
    assert report.commutator_nonzero and report.symmetry_verified
    with pytest.raises(ValueError):
        pair_from_bicyclic(s3.element_named("(123)"), s3.element_named("(132)"))


# ----------------------------------------------------------------- diagnostics


def expected_u2_pattern(k):
    # product of (1 + z + z^2) and (1 + z + ... + z^(k-1)) in a formal variable
    counts = [0] * (k + 2)
    for m in range(3):
        for l in range(k):
            counts[m + l] += 1
    return counts


def test_u2_coefficient_pattern_p5():
    diag = noncommuting_pair_diagnostics(5)
    group = diag.u2.group
    ag = group.element_named("a·x")
    k = diag.k
    pattern = expected_u2_pattern(k)
    assert pattern == [1, 2] + [3] * (k - 2) + [2, 1]
    for t, expected in enumerate(pattern):
        idx = (ag ** (3 * t)).index
        assert diag.u2.coeffs[idx] == expected
    assert diag.u2.coeffs[(ag ** 3).index] == 2
    assert diag.u2.coeffs[(ag ** 6).index] == 3


def test_u3_is_odd_power_part_of_u2():
    for p in (5, 7):
        diag = noncommuting_pair_diagnostics(p)
        group = diag.u2.group
        ag = group.element_named("a·x")
        k = diag.k
        odd = [0] * group.order
        for t in range(k + 2):
            if t % 2 == 1:
                idx = (ag ** (3 * t)).index
                odd[idx] = diag.u2.coeffs[idx]
        assert RingElement(group, tuple(odd)) == diag.u3
        # exactly two boundary coefficients 2, the rest 3: only 4 products
        # in u3 v3 escape divisibility by 3
        nonzero = sorted(c for c in diag.u3.coeffs if c)
        assert nonzero == [2, 2] + [3] * ((k - 3) // 2)


def test_residue_identity_p5_and_p7():
    for p in (5, 7):
        diag = noncommuting_pair_diagnostics(p)
        assert diag.residue_check
        d_uv = diag.u3 * diag.v3 - diag.residue_u3v3
        d_vu = diag.v3 * diag.u3 - diag.residue_v3u3
        assert all(c % 3 == 0 for c in d_uv.coeffs)
        assert all(c % 3 == 0 for c in d_vu.coeffs)
        # the two residue patterns differ, so u3 v3 != v3 u3
        r_uv = tuple(c % 3 for c in diag.residue_u3v3.coeffs)
        r_vu = tuple(c % 3 for c in diag.residue_v3u3.coeffs)
        assert r_uv != r_vu
        assert diag.u3 * diag.v3 != diag.v3 * diag.u3


def test_diagnostics_reject_p3():
    with pytest.raises(ValueError):
        noncommuting_pair_diagnostics(3)


def test_hoechsmann_factors_behind_pairs_pass_det_oracle():
    from zgring.ring import determinant_of_regular_matrix

    for p in (3, 5):
        report = noncommuting_pair(p)
        group = report.s1.unit.group
        params = report.parameters
        for name in ("a·x", "b·x"):
            x = group.element_named(name)
            cert = hoechsmann(
                HoechsmannParams(x, params["n"], params["i"], params["j"], params["k"])
            )
            assert determinant_of_regular_matrix(cert.unit) in (1, -1)
