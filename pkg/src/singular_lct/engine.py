"""The threshold comparison engine.

For a curve with minimal log resolution diagram D, the log-canonical
threshold can be computed two independent ways:

  * directly on the cluster as min (k+1)/e over the blown-up points;
  * as the minimum, over the finitely many adapted coordinate choices, of
    the threshold of the corresponding monomial (term) ideal.

An adapted choice is indexed by the endpoint rho of a maximal chain of
free points: the associated subdiagram is the largest binary subdiagram
whose free vertices lie on the root-to-rho path, its staircase is the
integral closure of the term ideal in coordinates aligned with that chain,
and its threshold comes from the Newton polygon.  check_main_theorem
verifies the two routes agree exactly and also recomputes the threshold
along a root-to-leaf path through a witness vertex and along the
non-degenerate part of that path; all values must coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .cluster import lct_cluster
from .enriques import EnriquesDiagram, classify
from .enriques import diagram_to_staircase
from .newton import Staircase, lct_monomial


class MainTheoremViolation(AssertionError):
    """The two independent threshold computations disagreed."""

    def __init__(self, report: "TheoremReport"):
        self.report = report
        super().__init__(
            f"lct mismatch: cluster gives {report.lct_direct}, term ideals "
            f"give {report.lct_term}\n{report}"
        )


@dataclass(frozen=True)
class AdaptedCandidate:
    """One adapted coordinate choice: the highest free point rho on the
    second coordinate curve, the binary subdiagram it spans, and the
    staircase and threshold of the associated monomial ideal."""

    rho: Optional[int]
    subdiagram: EnriquesDiagram
    staircase: Staircase
    lct: Fraction


@dataclass(frozen=True)
class PathCheck:
    witness: int
    leaf: int
    lct_path: Fraction
    lct_path_core: Fraction


@dataclass(frozen=True)
class TheoremReport:
    lct_direct: Fraction
    lct_term: Fraction
    equal: bool
    witness_vertices: Tuple[int, ...]
    witness_candidate: Optional[AdaptedCandidate]
    candidates: Tuple[AdaptedCandidate, ...]
    path_checks: Tuple[PathCheck, ...]
    smooth: bool = False

    def __str__(self) -> str:
        lines = [
            f"lct (cluster)     = {self.lct_direct}",
            f"lct (term ideals) = {self.lct_term}",
            f"witness vertices  = {[v + 1 for v in self.witness_vertices]}",
        ]
        for c in self.candidates:
            rho = "-" if c.rho is None else c.rho + 1
            lines.append(
                f"  candidate rho=P{rho}: lct {c.lct}, "
                f"staircase {list(c.staircase.slices())}"
            )
        return "\n".join(lines)


def _free_path_vertices(d: EnriquesDiagram) -> List[bool]:
    t = d.tree
    out = [False] * len(t)
    for v in range(len(t)):
        p = t.parents[v]
        out[v] = t.is_free(v) and (p is None or out[p])
    return out


def nondegenerate_part(d: EnriquesDiagram) -> EnriquesDiagram:
    """Maximal subdiagram whose free vertices all have all-free root paths:
    free vertices behind a satellite are cut, satellites are kept as long
    as their ancestors are."""
    if len(d) == 0:
        return d
    t = d.tree
    free_path = _free_path_vertices(d)
    keep = [False] * len(t)
    for v in range(len(t)):
        p = t.parents[v]
        parent_ok = p is None or keep[p]
        keep[v] = parent_ok and (t.is_satellite(v) or free_path[v])
    return d.restrict([v for v in range(len(t)) if keep[v]])


def adapted_candidates(d: EnriquesDiagram) -> List[AdaptedCandidate]:
    """One candidate per maximal all-free chain endpoint."""
    if len(d) == 0:
        return [
            AdaptedCandidate(None, d, Staircase.empty(), Fraction(1))
        ]
    t = d.tree
    free_path = _free_path_vertices(d)
    endpoints = [
        v
        for v in range(len(t))
        if free_path[v] and not any(free_path[k] for k in t.children(v))
    ]
    out = []
    for rho in endpoints:
        keep = set()
        v: Optional[int] = rho
        while v is not None:
            keep.add(v)
            v = t.parents[v]
        for w in range(len(t)):
            if w not in keep and t.is_satellite(w) and t.parents[w] in keep:
                keep.add(w)
        sub = d.restrict(sorted(keep))
        assert classify(sub.tree).binary, "adapted subdiagram must be binary"
        stair = diagram_to_staircase(sub)
        out.append(
            AdaptedCandidate(rho, sub, stair, lct_monomial(stair.to_ideal()))
        )
    return out


def lct_via_term_ideals(d: EnriquesDiagram) -> Fraction:
    return min(c.lct for c in adapted_candidates(d))


def _path_to_leaf_through(d: EnriquesDiagram, witness: int) -> List[List[int]]:
    """All root-to-leaf vertex paths passing through the witness vertex."""
    t = d.tree
    up: List[int] = []
    v: Optional[int] = witness
    while v is not None:
        up.append(v)
        v = t.parents[v]
    up.reverse()
    paths = []

    def walk(path: List[int]):
        kids = t.children(path[-1])
        if not kids:
            paths.append(list(path))
            return
        for k in kids:
            walk(path + [k])

    walk(up)
    return paths


def check_main_theorem(d: EnriquesDiagram) -> TheoremReport:
    """Verify that the cluster threshold equals the minimum over adapted
    term ideals, exactly; raise MainTheoremViolation otherwise."""
    candidates = tuple(adapted_candidates(d))
    lct_term = min(c.lct for c in candidates)
    if len(d) == 0:
        report = TheoremReport(
            Fraction(1), lct_term, lct_term == 1, (), candidates[0], candidates, (),
            smooth=True,
        )
        if not report.equal:
            raise MainTheoremViolation(report)
        return report

    lct_direct, witnesses = lct_cluster(d.to_weighted_cluster())
    witness_candidate = next((c for c in candidates if c.lct == lct_term), None)
    path_checks = []
    for w in witnesses:
        for path in _path_to_leaf_through(d, w):
            sub = d.restrict(path)
            lct_path, _ = lct_cluster(sub.to_weighted_cluster())
            core = nondegenerate_part(sub)
            lct_core, _ = lct_cluster(core.to_weighted_cluster())
            path_checks.append(PathCheck(w, path[-1], lct_path, lct_core))

    equal = lct_direct == lct_term
    report = TheoremReport(
        lct_direct,
        lct_term,
        equal,
        witnesses,
        witness_candidate,
        candidates,
        tuple(path_checks),
    )
    if not equal:
        raise MainTheoremViolation(report)
    for chk in path_checks:
        if chk.lct_path != lct_direct or chk.lct_path_core != lct_direct:
            raise MainTheoremViolation(report)
    for c in candidates:
        if c.lct < lct_direct:
            raise MainTheoremViolation(report)
    return report
