"""JSON encoding of the domain values.

Rationals are strings "num/den" (all arithmetic is exact, floats never
appear).  Monomial ideals and staircases are arrays of [m, n] exponent
pairs.  Clusters and diagrams use 1-based vertex ids in tree order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .cluster import Cluster, WeightedCluster
from .enriques import EnriquesDiagram, EnriquesTree
from .newton import MonomialIdeal, Staircase

SCHEMA = "singular-lct/1"


def fraction_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def ideal_to_json(a: MonomialIdeal) -> List[List[int]]:
    return [[m, n] for m, n in a.generators]


def ideal_from_json(data) -> MonomialIdeal:
    return MonomialIdeal(tuple((int(m), int(n)) for m, n in data))


def staircase_to_json(s: Staircase) -> List[List[int]]:
    return [[m, n] for m, n in s.generators]


def staircase_from_json(data) -> Staircase:
    return Staircase(tuple((int(m), int(n)) for m, n in data))


def cluster_to_json(kl: WeightedCluster) -> dict:
    points = []
    for i in range(len(kl.cluster)):
        parent = kl.cluster.parents[i]
        points.append(
            {
                "id": i + 1,
                "parent": None if parent is None else parent + 1,
                "prox": [a + 1 for a in kl.cluster.targets[i]],
            }
        )
    return {"points": points, "weights": list(kl.weights)}


def cluster_from_json(data) -> WeightedCluster:
    points = sorted(data["points"], key=lambda p: p["id"])
    ids = [p["id"] for p in points]
    if ids != list(range(1, len(ids) + 1)):
        raise ValueError("cluster ids must be 1..r")
    parents = [None if p["parent"] is None else p["parent"] - 1 for p in points]
    targets = [tuple(a - 1 for a in p["prox"]) for p in points]
    cluster = Cluster(parents, targets)
    return WeightedCluster(cluster, data["weights"])


def diagram_to_json(d: EnriquesDiagram) -> dict:
    vertices = []
    for i in range(len(d)):
        parent = d.tree.parents[i]
        vertices.append(
            {
                "id": i + 1,
                "parent": None if parent is None else parent + 1,
                "kind": d.tree.kinds[i],
                "weight": d.weights[i],
            }
        )
    out = {"vertices": vertices}
    if d.tree.x_side:
        out["x_side"] = sorted(v + 1 for v in d.tree.x_side)
    return out


def diagram_from_json(data) -> EnriquesDiagram:
    vertices = sorted(data["vertices"], key=lambda v: v["id"])
    ids = [v["id"] for v in vertices]
    if ids != list(range(1, len(ids) + 1)):
        raise ValueError("diagram ids must be 1..r")
    parents = [None if v["parent"] is None else v["parent"] - 1 for v in vertices]
    kinds = [v["kind"] for v in vertices]
    weights = [v["weight"] for v in vertices]
    marks = frozenset(v - 1 for v in data.get("x_side", ()))
    return EnriquesDiagram(EnriquesTree(parents, kinds, marks), weights)
