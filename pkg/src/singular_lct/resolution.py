"""Embedded resolution of an isolated plane-curve singularity at the origin
by iterated point blowups, over the rationals.

Each blowup is followed in the two affine charts (x, y) -> (x, x y) and
(x, y) -> (x y, y); rational tangent directions are found by factoring the
tangent cone over Q and the chart is recentered there.  The recursion stops
at a point once the strict transform is smooth and meets the exceptional
locus transversally at a smooth point of it; a point lying on two
exceptional components, or tangent to one, gets one more blowup, which
yields the minimal log resolution.

Branches whose tangent direction is irrational are only tolerated while
they need no further blowup (a simple, hence smooth and transverse, factor
of the tangent cone); a singular continuation at an irrational point raises
NonRationalTangentError, naming the offending form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy

from .cluster import Cluster, WeightedCluster, _strict_from_total, is_unloaded
from .enriques import EnriquesDiagram, cluster_to_tree
from .poly import BivariatePolynomial

_X, _Y, _T = sympy.symbols("x y t")


class ResolutionError(ValueError):
    pass


class NonReducedError(ResolutionError):
    """The curve has a repeated factor; its resolution never terminates."""


class NonRationalTangentError(ResolutionError):
    """The resolution needs a blowup at a point with irrational coordinates."""

    def __init__(self, form: BivariatePolynomial, factor):
        self.form = form
        self.factor = factor
        super().__init__(
            f"singular tangent direction not defined over Q: factor {factor} "
            f"of the tangent cone {form}"
        )


def multiplicity(f: BivariatePolynomial) -> int:
    """Order of vanishing at the origin."""
    if f.is_zero():
        raise ResolutionError("the zero polynomial has no multiplicity")
    return f.multiplicity()


def _to_sympy(f: BivariatePolynomial):
    return sympy.Poly.from_dict(
        {t: sympy.Rational(c.numerator, c.denominator) for t, c in f.terms.items()},
        _X,
        _Y,
        domain="QQ",
    )


def _require_reduced(f: BivariatePolynomial):
    p = _to_sympy(f)
    g = sympy.gcd(sympy.gcd(p, p.diff(_X)), p.diff(_Y))
    if sympy.Poly(g, _X, _Y).total_degree() > 0:
        raise NonReducedError(f"repeated factor {g} in {f}")


def _tangent_roots(form: BivariatePolynomial) -> Tuple[List[Tuple[Fraction, int]], int]:
    """Rational roots (with multiplicity) of F(1, t) for a homogeneous form
    F, plus the multiplicity of the direction x = 0 (the t = infinity root).
    A repeated irrational factor aborts: it would force blowups at
    irrational points."""
    inf_mult = min(m for m, _ in form.support())
    coeffs: Dict[int, sympy.Rational] = {}
    for (m, n), c in form.terms.items():
        coeffs[n] = sympy.Rational(c.numerator, c.denominator)
    phi = sympy.Poly([coeffs.get(j, 0) for j in range(max(coeffs), -1, -1)], _T, domain="QQ")
    roots: List[Tuple[Fraction, int]] = []
    _, factors = phi.factor_list()
    for fac, exp in factors:
        if fac.degree() == 1:
            c1, c0 = fac.all_coeffs()
            root = sympy.Rational(-c0, c1)
            roots.append((Fraction(int(root.p), int(root.q)), exp))
        elif exp >= 2:
            raise NonRationalTangentError(form, fac.as_expr())
        # simple irrational factors: smooth transverse branches, no blowup
    roots.sort()
    return roots, inf_mult


@dataclass
class _Chart:
    """Strict transform local to one infinitely near point, with the
    exceptional components through it: axis -> (ancestor index, multiplicity
    of that component in the total transform of the curve)."""

    f: BivariatePolynomial
    axes: Dict[str, Tuple[int, int]]
    parent: Optional[int]
    parent_smooth_measure: Optional[Tuple[int, int]] = None


def _smooth_measure(f: BivariatePolynomial, axes) -> Tuple[int, int]:
    """Progress measure at a smooth point of the strict transform: the
    intersection order with the exceptional components through the point,
    then the number of missing components.  Decreases strictly along every
    smooth chain of blowups (a tangency drops by one, or a tangent point
    becomes a corner, whose single successor is transverse)."""
    contact = 0
    for axis in axes:
        if axis == "x":  # the component {x = 0}: order of f(0, y)
            contact += min(n for m, n in f.support() if m == 0)
        else:  # {y = 0}: order of f(x, 0)
            contact += min(m for m, n in f.support() if n == 0)
    return (contact, 2 - len(axes))


def resolve_curve(
    f: BivariatePolynomial, max_points: int = 500
) -> Tuple[WeightedCluster, EnriquesDiagram]:
    """Weighted cluster and Enriques diagram of the minimal log resolution.

    Weights are the multiplicities of the strict transform at the blown-up
    points; they always satisfy the proximity relations.  A smooth curve
    needs no blowup and yields the empty cluster.
    """
    if f.is_zero():
        raise ResolutionError("cannot resolve the zero curve")
    if f.coefficient(0, 0):
        raise ResolutionError("the curve does not pass through the origin")
    _require_reduced(f)

    parents: List[Optional[int]] = []
    targets: List[Tuple[int, ...]] = []
    weights: List[int] = []
    exc_mult: List[int] = []  # multiplicity of E_i in the total transform

    def process(chart: _Chart):
        if len(parents) >= max_points:
            raise ResolutionError(f"resolution exceeded {max_points} blowups")
        m = chart.f.multiplicity()
        if chart.parent is not None:
            assert m <= weights[chart.parent], "multiplicity grew under blowup"
        measure = _smooth_measure(chart.f, chart.axes) if m == 1 else None
        if measure is not None and chart.parent_smooth_measure is not None:
            assert measure < chart.parent_smooth_measure, (
                "no progress along a smooth chain of blowups"
            )
        idx = len(parents)
        parents.append(chart.parent)
        targets.append(tuple(sorted(anc for anc, _ in chart.axes.values())))
        weights.append(m)
        e_here = m + sum(mult for _, mult in chart.axes.values())
        exc_mult.append(e_here)

        form = chart.f.leading_form()
        roots, inf_mult = _tangent_roots(form)
        for t, _ in roots:
            g = chart.f.blowup_x_chart().shift_y(t)
            axes: Dict[str, Tuple[int, int]] = {"x": (idx, e_here)}
            if t == 0 and "y" in chart.axes:
                axes["y"] = chart.axes["y"]
            _descend(g, axes, idx, measure)
        if inf_mult:
            g = chart.f.blowup_y_chart()
            axes = {"y": (idx, e_here)}
            if "x" in chart.axes:
                axes["x"] = chart.axes["x"]
            _descend(g, axes, idx, measure)

    def _descend(g: BivariatePolynomial, axes, idx: int, measure):
        m = g.multiplicity()
        if m >= 2 or len(axes) == 2:
            process(_Chart(g, axes, idx, measure))
            return
        # smooth branch on a single exceptional component: blow up only
        # when tangent to it
        a, b = g.coefficient(1, 0), g.coefficient(0, 1)
        tangent_to_exceptional = ("x" in axes and b == 0) or ("y" in axes and a == 0)
        if tangent_to_exceptional:
            process(_Chart(g, axes, idx, measure))

    mult0 = f.multiplicity()
    if mult0 >= 2:
        process(_Chart(f, {}, None))

    if not parents:
        from .cluster import EMPTY_CLUSTER

        empty = WeightedCluster(EMPTY_CLUSTER, ())
        return empty, EnriquesDiagram(cluster_to_tree(EMPTY_CLUSTER), ())

    cluster = Cluster(parents, targets)
    kl = WeightedCluster(cluster, weights)
    assert is_unloaded(kl), "curve multiplicities violated a proximity relation"
    assert _strict_from_total(cluster, weights) == exc_mult, (
        "chart bookkeeping disagrees with the proximity recursion"
    )
    diagram = EnriquesDiagram(cluster_to_tree(cluster), weights)
    return kl, diagram
