import math

import pytest

from delsarte.cyclotomic import CyclotomicElement
from delsarte.deformation import family
from delsarte.monomials import enumerate_basis, g_invariant_types, gmax_invariant_types
from delsarte.pointcount import FiniteField, count_points, fermat_hypersurface
from delsarte.zetafermat import (
    CharPoly,
    RationalityError,
    char_poly_invariant,
    fermat_point_count_via_sums,
    jacobi_eigenvalue,
    lift_types,
    multiplicative_character,
    verify_common_factor,
)

GRID = [(4, 3, 5), (4, 3, 13), (3, 2, 7), (8, 3, 17), (12, 3, 13)]


# -- character tables -----------------------------------------------------------


def test_character_table_q5_d4():
    f = FiniteField(5)
    table = multiplicative_character(f, 4)
    assert table.generator == 2
    assert table.chi_log[2] == 1  # chi(2) is a primitive fourth root
    values = {table.chi_log[x] for x in range(1, 5)}
    assert values == {0, 1, 2, 3}  # surjective onto the fourth roots


def test_character_table_trivial():
    f = FiniteField(5)
    table = multiplicative_character(f, 1)
    assert all(table.chi_log[x] == 0 for x in range(1, 5))


def test_character_table_requires_divisibility():
    f = FiniteField(7)
    with pytest.raises(ValueError, match="order"):
        multiplicative_character(f, 4)


def test_character_table_custom_generator():
    f = FiniteField(13)
    gens = [g for g in range(2, 13) if math.gcd(f.log[g], 12) == 1]
    assert len(gens) == 4
    table = multiplicative_character(f, 12, generator=gens[1])
    assert table.chi_log[gens[1]] == 1
    with pytest.raises(ValueError):
        multiplicative_character(f, 12, generator=4)  # 4 = 2^2 is not a generator


# -- point counts as certification ----------------------------------------------


def test_fermat_count_matches_brute_force_grid():
    for d, n, q in GRID:
        f = FiniteField(q)
        assert fermat_point_count_via_sums(d, n, f) == count_points(
            fermat_hypersurface(d, n), f
        ), (d, n, q)


def test_fermat_count_trivial_degree():
    f = FiniteField(7)
    assert fermat_point_count_via_sums(1, 3, f) == (7**3 - 1) // 6


def test_fermat_count_extension_field():
    # octic Fermat curve over F_9 (8 | 9 - 1): the certification also
    # holds over a non-prime field
    f = FiniteField(3, 2)
    assert fermat_point_count_via_sums(8, 2, f) == count_points(
        fermat_hypersurface(8, 2), f
    )


# -- eigenvalues -----------------------------------------------------------------


def test_weil_magnitude_exact_and_float():
    for d, n, q in GRID:
        f = FiniteField(q)
        table = multiplicative_character(f, d)
        for k in enumerate_basis(d, n):
            ev = jacobi_eigenvalue(k, table)
            assert ev.norm_squared_exact() == q ** (n - 1)
            approx = abs(ev.embedding())
            assert abs(approx - q ** ((n - 1) / 2)) <= 1e-6 * q ** ((n - 1) / 2)


def test_galois_covariance():
    f = FiniteField(13)
    d = 12
    table = multiplicative_character(f, d)
    k = (1, 5, 11, 7)
    ev = jacobi_eigenvalue(k, table)
    for u in (5, 7, 11):
        lifted = tuple((u * e) % d for e in k)
        assert ev.galois(u) == jacobi_eigenvalue(lifted, table)


def test_eigenvalue_rejects_bad_types():
    f = FiniteField(5)
    table = multiplicative_character(f, 4)
    with pytest.raises(ValueError):
        jacobi_eigenvalue((1, 1, 1, 2), table)  # sum not 0 mod 4
    with pytest.raises(ValueError):
        jacobi_eigenvalue((4, 1, 1, 2), table)  # boundary entry


# -- characteristic polynomials ----------------------------------------------------


def test_char_poly_empty():
    f = FiniteField(5)
    assert char_poly_invariant([], 4, f) == CharPoly((1,))


def test_char_poly_family1_gmax():
    f = FiniteField(5)
    poly = char_poly_invariant(gmax_invariant_types(family("family1")), 4, f)
    assert poly.degree == 3
    table = multiplicative_character(f, 4)
    for k in gmax_invariant_types(family("family1")):
        assert jacobi_eigenvalue(k, table).norm_squared_exact() == 25


def test_char_poly_family2_full_invariant_set():
    f = FiniteField(17)
    poly = char_poly_invariant(g_invariant_types(family("family2")), 8, f)
    assert poly.degree == 15


def test_char_poly_generator_independent():
    f = FiniteField(17)
    types = g_invariant_types(family("family2"))
    gens = [g for g in range(2, 17) if math.gcd(f.log[g], 16) == 1]
    polys = {char_poly_invariant(types, 8, f, generator=g) for g in gens[:3]}
    assert len(polys) == 1


def test_char_poly_requires_galois_stable_input():
    f = FiniteField(17)
    with pytest.raises(ValueError, match="not rational"):
        char_poly_invariant([(1, 1, 1, 5)], 8, f)


def test_char_poly_divides():
    p = CharPoly((1, -3, 2))  # (1 - T)(1 - 2T)
    q = CharPoly((1, -1)) * CharPoly((1, -2)) * CharPoly((1, 5))
    assert p.divides(q)
    assert not CharPoly((1, 7)).divides(q)
    assert CharPoly((1,)).divides(p)


# -- lifting -------------------------------------------------------------------------


def test_lift_types_examples():
    types = enumerate_basis(4, 3)
    lifted = lift_types(types, 4, 8)
    assert len(lifted) == 21
    assert all(e % 2 == 0 for k in lifted for e in k)
    assert lift_types([(1, 1, 1, 1)], 4, 4) == [(1, 1, 1, 1)]
    assert lift_types([(1, 1, 1, 1)], 4, 24) == [(6, 6, 6, 6)]
    with pytest.raises(ValueError):
        lift_types(types, 4, 6)


def test_lifted_char_poly_matches_native():
    # same eigenvalues whether computed at the family degree or lifted to
    # a joint cover degree
    f = FiniteField(73)
    data = family("family6")
    native = char_poly_invariant(g_invariant_types(data), 12, f)
    lifted = char_poly_invariant(lift_types(g_invariant_types(data), 12, 24), 24, f)
    assert native == lifted


# -- common factors --------------------------------------------------------------------


def test_common_factor_families_123():
    f = FiniteField(17)
    report = verify_common_factor([family(f"family{i}") for i in (1, 2, 3)], f)
    assert report.joint_degree == 8
    assert report.common_degree == 5
    assert report.all_divide
    assert [p.degree for p in report.family_polys] == [21, 15, 13]


def test_common_factor_families_12():
    f = FiniteField(17)
    report = verify_common_factor([family("family1"), family("family2")], f)
    assert report.common_degree == 7
    assert report.all_divide


def test_common_factor_single_family():
    f = FiniteField(17)
    report = verify_common_factor([family("family2")], f)
    assert report.common_degree == report.family_polys[0].degree == 15
    assert report.common_poly == report.family_polys[0]
    assert report.all_divide


def test_common_factor_requires_common_cover():
    f = FiniteField(17)
    with pytest.raises(ValueError, match="no common cover"):
        verify_common_factor([family("family1"), family("family9")], f)


def test_common_factor_requires_compatible_field():
    f = FiniteField(7)
    with pytest.raises(ValueError, match="divide"):
        verify_common_factor([family("family1"), family("family2")], f)


def _functional_equation_ok(poly, q):
    # weight-2 eigenvalue multisets are stable under a -> q^2/a, which
    # forces c_{deg-k} * q^(2k) == eps * c_k * q^deg with eps = +-1
    c = poly.coeffs
    deg = poly.degree
    if c[deg] not in (q**deg, -(q**deg)):
        return False
    eps = c[deg] // q**deg
    return all(c[deg - k] * q ** (2 * k) == eps * c[k] * q**deg for k in range(deg + 1))


def test_functional_equation_weight_two():
    f5, f17, f73 = FiniteField(5), FiniteField(17), FiniteField(73)
    assert _functional_equation_ok(
        char_poly_invariant(gmax_invariant_types(family("family1")), 4, f5), 5
    )
    for i in (1, 2, 3):
        data = family(f"family{i}")
        types = lift_types(g_invariant_types(data), data.degree, 8)
        assert _functional_equation_ok(char_poly_invariant(types, 8, f17), 17)
    report = verify_common_factor([family("family6"), family("family7")], f73)
    assert _functional_equation_ok(report.common_poly, 73)


def test_nested_common_factors_divide():
    # the three-family factor divides the two-family factor (larger joint
    # group, smaller invariant space)
    f17 = FiniteField(17)
    p5 = verify_common_factor([family(f"family{i}") for i in (1, 2, 3)], f17).common_poly
    p7 = verify_common_factor([family(f"family{i}") for i in (1, 2)], f17).common_poly
    assert p5.degree == 5 and p7.degree == 7
    assert p5.divides(p7)


def test_five_families_share_degree_three_intersection():
    fams = [family(f"family{i}") for i in range(1, 6)]
    lifted = [set(lift_types(g_invariant_types(x), x.degree, 560)) for x in fams]
    common = set.intersection(*lifted)
    assert common == {
        (140, 140, 140, 140),
        (280, 280, 280, 280),
        (420, 420, 420, 420),
    }


def test_common_degree_equals_intersection_cardinality():
    f = FiniteField(17)
    fams = [family(f"family{i}") for i in (1, 2, 3)]
    lifted = [set(lift_types(g_invariant_types(x), x.degree, 8)) for x in fams]
    assert len(set.intersection(*lifted)) == 5
    report = verify_common_factor(fams, f)
    assert report.common_degree == 5
    lifted12 = [set(lift_types(g_invariant_types(x), x.degree, 8)) for x in fams[:2]]
    assert len(set.intersection(*lifted12)) == 7
