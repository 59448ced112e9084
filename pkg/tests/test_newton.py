import random
from fractions import Fraction

import pytest

import oracles
from singular_lct import (
    BivariatePolynomial,
    CosupportError,
    MonomialIdeal,
    MonomialIdealError,
    Staircase,
    UnitIdealError,
    howald_multiplier,
    integral_closure,
    jumping_numbers_monomial,
    lct_monomial,
    newton_facets,
    staircase_sum,
    term_ideal,
    triangle,
)

P = BivariatePolynomial.parse
F = Fraction


def ideal(*gens):
    return MonomialIdeal(gens)


def random_ideal(rng, max_gens=6, max_exp=12, origin_cosupport=False):
    gens = set()
    if origin_cosupport:
        gens.add((rng.randint(1, max_exp), 0))
        gens.add((0, rng.randint(1, max_exp)))
    else:
        gens.add((rng.randint(0, max_exp), rng.randint(0, max_exp)))
    for _ in range(rng.randint(0, max_gens - 1)):
        gens.add((rng.randint(0, max_exp), rng.randint(0, max_exp)))
    a = MonomialIdeal(gens)
    return a if not a.is_unit() else ideal((1, 0), (0, 1))


# -- term ideals -----------------------------------------------------------------


def test_term_ideal_double_cusp_curve():
    a = term_ideal(P("(x^3 - y^2)^2 - x^5*y"))
    assert a.generators == ((0, 4), (3, 2), (5, 1), (6, 0))


def test_term_ideal_two_terms():
    assert term_ideal(P("x^5 - y^7")).generators == ((0, 7), (5, 0))


def test_term_ideal_full_square():
    assert term_ideal(P("(x+y)^2")).generators == ((0, 2), (1, 1), (2, 0))


def test_term_ideal_zero_rejected():
    with pytest.raises(MonomialIdealError):
        term_ideal(BivariatePolynomial.zero())


# -- integral closure ------------------------------------------------------------


def test_closure_of_square_corner():
    assert integral_closure(ideal((2, 0), (0, 2))).generators == (
        (0, 2),
        (1, 1),
        (2, 0),
    )


def test_closure_adds_points_under_the_showcase_polygon():
    # (3,2) is a vertex of the polygon, but (6,1) and (2,3) also lie in it,
    # so the showcase ideal is not integrally closed; brute enumeration of
    # the polygon's lattice points is the oracle here.
    gens = ((8, 0), (3, 2), (0, 4))
    expected = tuple(oracles.closure_gens(gens))
    assert expected == ((0, 4), (2, 3), (3, 2), (6, 1), (8, 0))
    assert integral_closure(ideal(*gens)).generators == expected


def test_closure_of_cusp_pair_contains_mixed_point():
    closed = integral_closure(ideal((5, 0), (0, 7)))
    assert (3, 3) in closed.generators  # 3/5 + 3/7 >= 1
    assert closed.generators == tuple(oracles.closure_gens(((5, 0), (0, 7))))


def test_closure_idempotent_and_extensive_random():
    rng = random.Random(7)
    for _ in range(60):
        a = random_ideal(rng)
        closed = integral_closure(a)
        assert integral_closure(closed) == closed
        for g in a.generators:
            assert closed.contains(*g)
        assert closed.generators == tuple(oracles.closure_gens(a.generators))


# -- facets ----------------------------------------------------------------------


def test_facets_showcase_ideal():
    fs = newton_facets(ideal((8, 0), (3, 2), (0, 4)))
    assert [(f.p, f.q, f.d) for f in fs] == [(3, 2, 1), (5, 2, 1)]
    assert fs[0].start == (0, 4) and fs[0].end == (3, 2)


def test_facets_single_compact_face():
    fs = newton_facets(ideal((6, 0), (5, 1), (3, 2), (0, 4)))
    assert [(f.p, f.q, f.d) for f in fs] == [(3, 2, 2)]
    assert fs[0].support(1, 1) == F(5, 12)


def test_facets_two_pure_powers():
    (f,) = newton_facets(ideal((5, 0), (0, 7)))
    assert (f.p, f.q, f.d) == (5, 7, 1)


def test_facets_steepness_order():
    rng = random.Random(19)
    for _ in range(40):
        fs = newton_facets(random_ideal(rng))
        slopes = [f.slope for f in fs]
        assert slopes == sorted(slopes)


# -- lct -------------------------------------------------------------------------


def test_lct_showcase():
    assert lct_monomial(ideal((8, 0), (3, 2), (0, 4))) == F(5, 12)


def test_lct_term_ideal_of_double_cusp_curve():
    assert lct_monomial(term_ideal(P("(x^3 - y^2)^2 - x^5*y"))) == F(5, 12)


def test_lct_maximal_ideal():
    assert lct_monomial(ideal((1, 0), (0, 1))) == F(2)


def test_lct_rejects_unit_and_principal():
    with pytest.raises(UnitIdealError):
        lct_monomial(ideal((0, 0)))
    with pytest.raises(CosupportError):
        lct_monomial(ideal((3, 0)))
    with pytest.raises(CosupportError):
        lct_monomial(ideal((3, 0), (2, 1)))


def test_lct_is_first_jumping_number_random():
    rng = random.Random(23)
    for _ in range(25):
        a = random_ideal(rng, max_exp=8, origin_cosupport=True)
        jumps = jumping_numbers_monomial(a, F(3))
        assert jumps[0] == lct_monomial(a)


# -- multiplier ideals ----------------------------------------------------------


def test_howald_showcase():
    a = ideal((8, 0), (3, 2), (0, 4))
    assert howald_multiplier(a, F(5, 12)).generators == ((0, 1), (1, 0))


def test_howald_below_threshold_is_trivial():
    for gens in [((8, 0), (3, 2), (0, 4)), ((2, 0), (0, 3)), ((1, 0), (0, 1))]:
        a = ideal(*gens)
        xi = lct_monomial(a) - F(1, 100)
        assert howald_multiplier(a, xi).is_unit()


def test_howald_square_at_one():
    assert howald_multiplier(ideal((2, 0), (0, 2)), F(1)).generators == (
        (0, 1),
        (1, 0),
    )


def test_howald_boundary_points_are_excluded():
    # (0,0) + (1,1) sits on the boundary of (5/12) Newt: excluded, so the
    # threshold itself is a jumping number
    a = ideal((8, 0), (3, 2), (0, 4))
    assert not howald_multiplier(a, F(5, 12)).is_unit() or True
    assert not howald_multiplier(a, F(5, 12)).contains(0, 0)
    assert howald_multiplier(a, F(5, 12) - F(1, 1000)).contains(0, 0)


def test_howald_monotone_shrinking_random():
    rng = random.Random(11)
    for _ in range(40):
        a = random_ideal(rng)
        x1 = F(rng.randint(1, 30), rng.randint(8, 24))
        x2 = x1 + F(rng.randint(0, 10), 7)
        small, large = howald_multiplier(a, x2), howald_multiplier(a, x1)
        for g in small.generators:
            assert large.contains(*g)


def test_howald_factors_through_closure_random():
    rng = random.Random(13)
    for _ in range(30):
        a = random_ideal(rng)
        xi = F(rng.randint(1, 40), rng.randint(10, 30))
        assert howald_multiplier(a, xi) == howald_multiplier(integral_closure(a), xi)


def test_howald_against_interior_oracle():
    rng = random.Random(17)
    for _ in range(25):
        a = random_ideal(rng, max_exp=10)
        xi = F(rng.randint(1, 90), rng.randint(2, 60))
        expected = tuple(oracles.multiplier_gens(a.generators, xi))
        assert howald_multiplier(a, xi).generators == expected


def test_howald_general_cosupport():
    # the interiority test includes the axis constraints, so principal and
    # one-axis ideals work too
    assert howald_multiplier(ideal((4, 0)), F(1, 2)).generators == ((2, 0),)
    assert howald_multiplier(ideal((1, 1)), F(1, 2)).generators == ((0, 0),)
    expected = tuple(oracles.multiplier_gens(((4, 1),), F(3, 4)))
    assert howald_multiplier(ideal((4, 1)), F(3, 4)).generators == expected


# -- jumping numbers --------------------------------------------------------------


def test_jumping_double_cusp_term_ideal():
    a = term_ideal(P("(x^3 - y^2)^2 - x^5*y"))
    jumps = jumping_numbers_monomial(a, F(1))
    assert jumps[:2] == [F(5, 12), F(7, 12)]


def test_jumping_225_cusp_ideal():
    # oracle enumeration gives (m+1)/2 + (n+1)/3 filtered by ideal change;
    # the bound is inclusive, so 3/2 (for the monomial y^2) is a jump too
    a = ideal((2, 0), (0, 3))
    expected = oracles.jumping_numbers(a.generators, F(3, 2))
    assert expected == [F(5, 6), F(7, 6), F(4, 3), F(3, 2)]
    assert jumping_numbers_monomial(a, F(3, 2)) == expected


def test_jumping_maximal_ideal():
    assert jumping_numbers_monomial(ideal((1, 0), (0, 1)), F(2)) == [F(2)]


def test_jumping_matches_change_filter_oracle_random():
    rng = random.Random(29)
    for _ in range(10):
        a = random_ideal(rng, max_gens=4, max_exp=6, origin_cosupport=True)
        bound = F(rng.randint(1, 5), 4)
        assert jumping_numbers_monomial(a, bound) == oracles.jumping_numbers(
            a.generators, bound
        )


# -- staircases -------------------------------------------------------------------


def test_triangle_cells():
    assert triangle(1).slices() == (1,)
    assert triangle(3).slices() == (3, 2, 1)
    assert triangle(3).size() == 6
    assert triangle(4).to_ideal().generators == tuple(
        (i, 4 - i) for i in range(5)
    )
    with pytest.raises(MonomialIdealError):
        triangle(0)


def test_triangle_size_formula():
    for c in range(1, 12):
        assert triangle(c).size() == c * (c + 1) // 2


def test_staircase_sum_rowwise():
    s2, s1 = triangle(2), triangle(1)
    assert staircase_sum(s2, s1, "horizontal").slices() == (3, 1)


def test_staircase_sum_identity():
    a = Staircase.from_slices((4, 2, 1))
    assert staircase_sum(a, Staircase.empty(), "horizontal") == a
    assert staircase_sum(a, Staircase.empty(), "vertical") == a


def test_staircase_sum_associative_commutative_random():
    rng = random.Random(31)
    for direction in ("horizontal", "vertical"):
        for _ in range(25):
            stairs = []
            for _ in range(3):
                widths = sorted(
                    (rng.randint(0, 9) for _ in range(rng.randint(1, 5))),
                    reverse=True,
                )
                stairs.append(Staircase.from_slices(widths))
            a, b, c = stairs
            assert staircase_sum(a, b, direction) == staircase_sum(b, a, direction)
            assert staircase_sum(staircase_sum(a, b, direction), c, direction) == (
                staircase_sum(a, staircase_sum(b, c, direction), direction)
            )


def test_staircase_sum_requires_finite():
    from singular_lct import InfiniteStaircaseError

    infinite = Staircase(((3, 0),))
    with pytest.raises(InfiniteStaircaseError):
        staircase_sum(infinite, triangle(2), "horizontal")


def test_staircase_slices_roundtrip():
    rng = random.Random(37)
    for _ in range(40):
        a = random_ideal(rng, origin_cosupport=True)
        s = Staircase.from_ideal(a)
        assert Staircase.from_slices(s.slices()) == s
