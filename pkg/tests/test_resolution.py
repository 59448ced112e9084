from fractions import Fraction

import pytest

from singular_lct import (
    BivariatePolynomial,
    MonomialIdeal,
    NonRationalTangentError,
    NonReducedError,
    ResolutionError,
    connected_sum,
    is_unloaded,
    jumping_numbers_curve,
    jumping_numbers_monomial,
    lct_cluster,
    lct_monomial,
    multiplicity,
    resolve_curve,
    t_pq,
)
from singular_lct.cluster import _strict_from_total
from singular_lct.corpus import coprime_pairs, corpus_curves

P = BivariatePolynomial.parse
F = Fraction


def test_multiplicity_examples():
    assert multiplicity(P("x*y")) == 2
    assert multiplicity(P("(x^3 - y^2)^2 - x^5*y")) == 4
    assert multiplicity(P("x + y^2")) == 1
    with pytest.raises(ResolutionError):
        multiplicity(BivariatePolynomial.zero())


def test_resolve_cusp():
    kl, d = resolve_curve(P("y^2 - x^3"))
    assert kl.weights == (2, 1, 1)
    assert d == t_pq(2, 3)
    assert lct_cluster(kl)[0] == F(5, 6)
    assert lct_monomial(MonomialIdeal(((2, 0), (0, 3)))) == F(5, 6)


def test_resolve_double_cusp_curve():
    kl, d = resolve_curve(P("(x^3 - y^2)^2 - x^5*y"))
    assert kl.weights == (4, 2, 2, 1, 1)
    assert d.tree == connected_sum(t_pq(2, 3).tree, t_pq(2, 3).tree)
    assert kl.cluster.targets == ((), (0,), (0, 1), (2,), (2, 3))


def test_resolve_node():
    kl, d = resolve_curve(P("x*y"))
    assert kl.weights == (2,)
    assert lct_cluster(kl)[0] == F(1)


def test_resolve_smooth_returns_empty():
    kl, d = resolve_curve(P("x + y^2"))
    assert len(kl.cluster) == 0 and len(d) == 0


def test_resolve_matches_staircase_tree_family():
    for p, q in coprime_pairs(12):
        kl, d = resolve_curve(P(f"x^{p} - y^{q}"))
        assert d == t_pq(p, q)
        assert is_unloaded(kl)


def test_resolution_output_always_unloaded():
    for _, expr in corpus_curves(10):
        kl, _ = resolve_curve(P(expr))
        if len(kl.cluster):
            assert is_unloaded(kl)
            assert all(w >= 1 for w in kl.weights)


def test_exceptional_multiplicities_consistent():
    # the pullback orders accumulated chart by chart must reproduce the
    # strict coordinates of the multiplicity vector
    for expr in ("x^5 - y^7", "(x^3 - y^2)^2 - x^5*y", "y^4 - x^6"):
        kl, _ = resolve_curve(P(expr))
        e = _strict_from_total(kl.cluster, kl.weights)
        assert e[0] == kl.weights[0]
        # (the equality with the recorded chart exponents is asserted inside
        # resolve_curve at every point; here we pin the first value)


def test_non_reduced_rejected():
    for expr in ("(x + y)^2", "x^2*y", "(y^2 - x^3)^2"):
        with pytest.raises(NonReducedError):
            resolve_curve(P(expr))


def test_curve_missing_origin_rejected():
    with pytest.raises(ResolutionError):
        resolve_curve(P("x + 1"))


def test_non_rational_tangent_rejected_when_singular():
    # tangent cone (y^2 - 2x^2)^2: the singularity continues into the two
    # irrational directions
    with pytest.raises(NonRationalTangentError):
        resolve_curve(P("(y^2 - 2*x^2)^2 - x^5"))


def test_simple_irrational_tangents_tolerated():
    # y^2 - 2x^2 is a pair of smooth transverse branches; one blowup ends it
    kl, _ = resolve_curve(P("y^2 - 2*x^2"))
    assert kl.weights == (2,)
    # and a singular rational branch next to an irrational smooth pair
    kl2, _ = resolve_curve(P("(y^2 - 2*x^2)*(y^2 - x^3)"))
    assert kl2.weights[0] == 4
    assert lct_cluster(kl2)[0] == F(1, 2)


def test_tacnode():
    kl, _ = resolve_curve(P("y^2 - x^4"))
    assert kl.weights == (2, 2)
    assert lct_cluster(kl)[0] == F(3, 4)


def test_ordinary_multiple_points():
    for k, expr in ((3, "x*y*(x + y)"), (4, "x*y*(x + y)*(x - y)")):
        kl, _ = resolve_curve(P(expr))
        assert kl.weights == (k,)
        assert lct_cluster(kl)[0] == F(2, k)


def test_cusp_family_jumping_numbers_match_howald():
    for p, q in coprime_pairs(9):
        kl, _ = resolve_curve(P(f"x^{p} - y^{q}"))
        curve = jumping_numbers_curve(kl, F(1))
        mono = jumping_numbers_monomial(MonomialIdeal(((p, 0), (0, q))), F(1))
        assert curve == [x for x in mono if x < 1]
