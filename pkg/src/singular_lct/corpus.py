"""Built-in curve corpus: every member is reduced, singular at the origin,
and resolves over the rationals.  Used by the verification harness and the
test suite."""

from __future__ import annotations

from math import gcd
from typing import List, Tuple


def coprime_pairs(limit: int) -> List[Tuple[int, int]]:
    """All coprime pairs 1 < p < q <= limit (proper cusp exponents)."""
    return [
        (p, q)
        for p in range(2, limit)
        for q in range(p + 1, limit + 1)
        if gcd(p, q) == 1
    ]


def cusp_curves(limit: int = 12) -> List[Tuple[str, str]]:
    return [(f"cusp {p},{q}", f"x^{p} - y^{q}") for p, q in coprime_pairs(limit)]


SPECIAL_CURVES: List[Tuple[str, str]] = [
    ("double cusp with extra term", "(x^3 - y^2)^2 - x^5*y"),
    ("double cusp mirror", "(y^3 - x^2)^2 - y^5*x"),
    ("5/7 cusp", "x^5 - y^7"),
    ("node", "x*y"),
    ("ordinary triple point", "x*y*(x + y)"),
    ("ordinary quadruple point", "x*y*(x + y)*(x - y)"),
    ("tacnode", "y^2 - x^4"),
    ("bitangent cusps", "(x^2 - y^3)*(x^3 - y^2)"),
    ("double tacnode", "y^4 - x^6"),
    ("cusp pair sharing tangent", "(x^2 - y^3)*(x^2 - y^5)"),
    ("degenerate double cusp", "(y^2 - x^3)^2 - x^7"),
    ("higher double cusp", "(y^2 - x^3)^2 - x^6*y"),
    ("line with cusp", "y*(x^2 + y^3)"),
    ("three tangent conics", "(y - x^2)*(y - 2*x^2)*(y - 3*x^2)"),
    ("line with two conics", "y*(y - x^2)*(y + x^2)"),
    ("rotated cusp", "(x + y)^2 - x^3"),
    ("rotated higher cusp", "(x + y)^3 - x^4"),
    ("cusp with transverse line", "y*(x^3 - y^2)"),
    ("ramphoid cusp", "(y^2 - x^3)^2 - x^5*y^2"),
    ("triple cusp", "x^3 - y^7"),
]


def corpus_curves(cusp_limit: int = 12) -> List[Tuple[str, str]]:
    return cusp_curves(cusp_limit) + SPECIAL_CURVES
