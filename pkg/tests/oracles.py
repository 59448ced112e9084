"""Independent brute-force oracles used to freeze expected values.

Everything here avoids the library's facet machinery: membership in the
Newton polyhedron is decided by exhibiting a convex combination of two
generators dominated by the point (Caratheodory in the plane, plus the
recession orthant), with exact Fraction arithmetic throughout.
"""

from fractions import Fraction
from math import ceil


def _feasible(gens, point, strict):
    """Is there g in conv(gens) with g <= point (or g < point if strict)?"""
    px, py = point
    for g in gens:
        for h in gens:
            lo, hi = Fraction(0), Fraction(1)
            lo_open = hi_open = False
            ok = True
            for gc, hc, pc in ((g[0], h[0], px), (g[1], h[1], py)):
                a, b = Fraction(gc) - Fraction(hc), Fraction(pc) - Fraction(hc)
                if a == 0:
                    if (b <= 0) if strict else (b < 0):
                        ok = False
                        break
                elif a > 0:
                    bound = b / a
                    if bound < hi or (bound == hi and strict and not hi_open):
                        hi, hi_open = bound, strict
                else:
                    bound = b / a
                    if bound > lo or (bound == lo and strict and not lo_open):
                        lo, lo_open = bound, strict
            if not ok:
                continue
            if lo < hi or (lo == hi and not lo_open and not hi_open):
                return True
    return False


def in_polyhedron(gens, point) -> bool:
    """point lies in conv(gens) + R_{>=0}^2."""
    return _feasible(gens, point, strict=False)


def in_interior(gens, point) -> bool:
    """point lies in the topological interior of conv(gens) + R_{>=0}^2."""
    return _feasible(gens, point, strict=True)


def minimal_points(points):
    pts = sorted(set(points))
    keep = []
    for p in pts:
        if not any(q[0] <= p[0] and q[1] <= p[1] for q in keep):
            keep = [q for q in keep if not (p[0] <= q[0] and p[1] <= q[1])]
            keep.append(p)
    return sorted(keep)


def closure_gens(gens):
    """Minimal lattice points of the Newton polyhedron, by enumeration."""
    mx = max(m for m, _ in gens)
    my = max(n for _, n in gens)
    inside = [
        (m, n)
        for m in range(mx + 1)
        for n in range(my + 1)
        if in_polyhedron(gens, (m, n))
    ]
    return minimal_points(inside)


def multiplier_gens(gens, xi):
    """Generators of the multiplier ideal at xi, by strict-interior scan."""
    xi = Fraction(xi)
    scaled = [(xi * m, xi * n) for m, n in gens]
    mx = ceil(xi * max(m for m, _ in gens)) + 2
    my = ceil(xi * max(n for _, n in gens)) + 2
    inside = [
        (m, n)
        for m in range(mx + 1)
        for n in range(my + 1)
        if in_interior(scaled, (m + 1, n + 1))
    ]
    return minimal_points(inside)


def jumping_numbers(gens, bound):
    """Jumping numbers by filtering candidate values through actual change
    of the multiplier ideal (evaluated just below and at each candidate)."""
    from singular_lct import MonomialIdeal, newton_facets

    bound = Fraction(bound)
    facets = newton_facets(MonomialIdeal(gens))
    mx = max(max(m for m, _ in gens), max(n for _, n in gens))
    size = mx + ceil(bound * mx)
    candidates = set()
    for m in range(size + 1):
        for n in range(size + 1):
            for f in facets:
                value = f.support(m + 1, n + 1)
                if value <= bound:
                    candidates.add(value)
    jumps = []
    previous = None
    for xi in sorted(candidates):
        here = multiplier_gens(gens, xi)
        below = multiplier_gens(gens, (previous + xi) / 2 if previous else xi / 2)
        if here != below:
            jumps.append(xi)
        previous = xi
    return jumps


def staircase_slices_from_valuations(x_vals, y_vals, e_vals):
    """Row widths of the monomial ideal {m*X + n*Y >= e componentwise}."""
    rows = []
    j = 0
    while True:
        width = 0
        for X, Y, e in zip(x_vals, y_vals, e_vals):
            need = e - j * Y
            if need > 0:
                width = max(width, -(-need // X))
        if width == 0:
            break
        rows.append(width)
        j += 1
    return tuple(rows)
