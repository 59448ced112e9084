"""Enriques trees and diagrams.

An Enriques tree is a rooted tree whose non-root vertices carry an edge
kind: 'slant' for free points, 'horizontal' or 'vertical' for satellites.
A point is proximate to its parent and, when satellite, to one further
ancestor: the parent of the top of the maximal run of same-kind edges
ending at the point (an L-shaped branch).

Binary diagrams are exactly the ones realizable by monomial ideals.  The
edge kinds then also record the realization: satellites hanging off the
free chain along the y-axis are drawn horizontal, those off the x-axis
chain vertical (the mirrored convention).  A free chain with no satellites
carries no such information, so the tree keeps an explicit `x_side` mark
for root children whose pure slant chain runs along the x-axis; without the
mark a chain is read as lying on the y-axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .cluster import (
    Cluster,
    WeightedCluster,
    intersection_inverse,
    is_unloaded,
    log_discrepancies,
)
from .newton import (
    Staircase,
    newton_facets,
    staircase_sum,
    triangle,
)

SLANT = "s"
HORIZONTAL = "h"
VERTICAL = "v"
_KIND_RANK = {None: 0, SLANT: 0, HORIZONTAL: 1, VERTICAL: 2}


class EnriquesError(ValueError):
    pass


class OrientationError(EnriquesError):
    """The edge kinds admit no consistent monomial realization."""


def _opposite(kind: str) -> str:
    return VERTICAL if kind == HORIZONTAL else HORIZONTAL


@dataclass(frozen=True, eq=False)
class EnriquesTree:
    """Rooted tree with slant/horizontal/vertical edge kinds.

    parents[i] is the parent index (None for the root, vertex 0); kinds[i]
    is the kind of the edge ending at vertex i (None for the root).
    x_side marks root children whose satellite-free slant chain lies on the
    x-axis of the monomial realization.
    """

    parents: Tuple[Optional[int], ...]
    kinds: Tuple[Optional[str], ...]
    x_side: frozenset

    def __init__(self, parents, kinds, x_side=frozenset()):
        parents = tuple(parents)
        kinds = tuple(kinds)
        if len(parents) != len(kinds):
            raise EnriquesError("parents and kinds differ in length")
        if parents and (parents[0] is not None or kinds[0] is not None):
            raise EnriquesError("vertex 0 must be the root")
        kid_kinds: Dict[int, List[str]] = {}
        for i in range(1, len(parents)):
            p, k = parents[i], kinds[i]
            if p is None or not 0 <= p < i:
                raise EnriquesError(f"vertex {i}: parent must precede it")
            if k not in (SLANT, HORIZONTAL, VERTICAL):
                raise EnriquesError(f"vertex {i}: unknown edge kind {k!r}")
            kid_kinds.setdefault(p, []).append(k)
        for p, ks in kid_kinds.items():
            if ks.count(HORIZONTAL) > 1 or ks.count(VERTICAL) > 1:
                raise EnriquesError(
                    f"vertex {p}: two satellite children with equal edge kind"
                )
            sat = ks.count(HORIZONTAL) + ks.count(VERTICAL)
            if p == 0 and sat:
                raise EnriquesError(
                    "a satellite edge out of the root has no L-branch reading"
                )
            if p != 0 and kinds[p] == SLANT and sat > 1:
                raise EnriquesError(
                    f"vertex {p}: a free point carries at most one satellite"
                )
        object.__setattr__(self, "parents", parents)
        object.__setattr__(self, "kinds", kinds)
        object.__setattr__(self, "x_side", self._normalize_marks(parents, kinds, x_side))

    def _normalize_marks(self, parents, kinds, x_side) -> frozenset:
        keep = set()
        for v in x_side:
            if not (1 <= v < len(parents)) or parents[v] != 0:
                raise EnriquesError(f"x_side mark {v} is not a root child")
            flavor = _subtree_flavor(parents, kinds, v)
            if flavor is None:
                keep.add(v)
            elif flavor == "V":
                raise OrientationError(
                    f"root child {v} is marked x-side but its satellites are "
                    "drawn horizontal"
                )
            # flavor 'H': the kinds already say it; the mark is redundant
        return frozenset(keep)

    def __len__(self) -> int:
        return len(self.parents)

    @property
    def size(self) -> int:
        return len(self.parents)

    def children(self, v: int) -> List[int]:
        return [i for i in range(len(self.parents)) if self.parents[i] == v]

    def is_free(self, v: int) -> bool:
        return self.kinds[v] in (None, SLANT)

    def is_satellite(self, v: int) -> bool:
        return self.kinds[v] in (HORIZONTAL, VERTICAL)

    def leaves(self) -> List[int]:
        has_child = set(p for p in self.parents if p is not None)
        return [v for v in range(len(self.parents)) if v not in has_child]

    def is_path(self) -> bool:
        return all(len(self.children(v)) <= 1 for v in range(len(self.parents)))

    def second_target(self, v: int) -> Optional[int]:
        """The non-parent point a satellite is proximate to."""
        k = self.kinds[v]
        if k not in (HORIZONTAL, VERTICAL):
            return None
        cur = self.parents[v]
        while self.kinds[cur] == k:
            cur = self.parents[cur]
        return self.parents[cur]

    def restrict(self, keep: Sequence[int]) -> "EnriquesTree":
        keep = sorted(keep)
        pos = {old: new for new, old in enumerate(keep)}
        for v in keep:
            p = self.parents[v]
            if p is not None and p not in pos:
                raise EnriquesError(f"restriction drops the parent of vertex {v}")
        parents = tuple(
            None if self.parents[v] is None else pos[self.parents[v]] for v in keep
        )
        kinds = tuple(self.kinds[v] for v in keep)
        marks = frozenset(pos[v] for v in self.x_side if v in pos)
        return EnriquesTree(parents, kinds, marks)

    def mirrored(self) -> "EnriquesTree":
        """Swap the horizontal and vertical edge kinds (x <-> y)."""
        flip = {None: None, SLANT: SLANT, HORIZONTAL: VERTICAL, VERTICAL: HORIZONTAL}
        marks = frozenset(
            v for v in range(1, len(self.parents))
            if self.parents[v] == 0
            and v not in self.x_side
            and _subtree_flavor(self.parents, self.kinds, v) is None
        )
        return EnriquesTree(self.parents, tuple(flip[k] for k in self.kinds), marks)

    def _key(self, v: int, weights=None):
        mark = 1 if (self.parents[v] == 0 and v in self.x_side) else 0
        w = 0 if weights is None else weights[v]
        kids = tuple(sorted(self._key(c, weights) for c in self.children(v)))
        return (_KIND_RANK[self.kinds[v]], mark, w, kids)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnriquesTree):
            return NotImplemented
        if len(self) != len(other):
            return False
        if len(self) == 0:
            return True
        return self._key(0) == other._key(0)

    def __hash__(self):
        return hash(self._key(0)) if len(self) else hash(())


def _subtree_flavor(parents, kinds, child) -> Optional[str]:
    """Which axis the free chain from a root child lies on, read off the
    first satellite hanging on it: 'V' (y-axis) for horizontal satellites,
    'H' (x-axis) for vertical ones, None for a bare chain."""
    stack = [child]
    while stack:
        cur = stack.pop()
        kids = [i for i in range(len(parents)) if parents[i] == cur]
        sats = [i for i in kids if kinds[i] in (HORIZONTAL, VERTICAL)]
        if sats:
            return "V" if kinds[sats[0]] == HORIZONTAL else "H"
        stack.extend(i for i in kids if kinds[i] == SLANT)
    return None


@dataclass(frozen=True, eq=False)
class EnriquesDiagram:
    """Weighted Enriques tree; equality is up to isomorphism."""

    tree: EnriquesTree
    weights: Tuple[int, ...]

    def __init__(self, tree: EnriquesTree, weights):
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(tree):
            raise EnriquesError("weight vector length does not match the tree")
        if any(w < 0 for w in weights):
            raise EnriquesError("diagram weights must be non-negative")
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.tree)

    def to_weighted_cluster(self) -> WeightedCluster:
        return WeightedCluster(tree_to_cluster(self.tree), self.weights)

    def restrict(self, keep: Sequence[int]) -> "EnriquesDiagram":
        keep = sorted(keep)
        return EnriquesDiagram(
            self.tree.restrict(keep), tuple(self.weights[v] for v in keep)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnriquesDiagram):
            return NotImplemented
        if len(self) != len(other):
            return False
        if len(self) == 0:
            return True
        return self.tree._key(0, self.weights) == other.tree._key(0, other.weights)

    def __hash__(self):
        return hash(self.tree._key(0, self.weights)) if len(self) else hash(())


# -- the cluster dictionary ------------------------------------------------------


def tree_to_cluster(t: EnriquesTree) -> Cluster:
    """Proximities read off the tree: parent always, plus the L-branch
    target for satellites."""
    targets = []
    for v in range(len(t)):
        if t.parents[v] is None:
            targets.append(())
            continue
        if t.is_free(v):
            targets.append((t.parents[v],))
            continue
        second = t.second_target(v)
        if second is None:
            raise EnriquesError(f"vertex {v}: satellite run reaches the root")
        targets.append(tuple(sorted((t.parents[v], second))))
    return Cluster(t.parents, targets)


def cluster_to_tree(c: Cluster) -> EnriquesTree:
    """Canonical Enriques tree of a cluster: free points get slant edges,
    and an edge from a free point to a satellite is horizontal."""
    kinds: List[Optional[str]] = []
    for v in range(len(c)):
        p = c.parents[v]
        if p is None:
            kinds.append(None)
        elif c.is_free(v):
            kinds.append(SLANT)
        else:
            second = c.second_target(v)
            if c.is_free(p):
                if second != c.parents[p]:
                    raise EnriquesError(
                        f"point {v}: satellite target not an L-branch start"
                    )
                kinds.append(HORIZONTAL)
            elif second == c.second_target(p):
                kinds.append(kinds[p])
            elif second == c.parents[p]:
                kinds.append(_opposite(kinds[p]))
            else:
                raise EnriquesError(
                    f"point {v}: satellite target not an L-branch start"
                )
    return EnriquesTree(c.parents, kinds)


@dataclass(frozen=True)
class TreeClassification:
    free: Tuple[bool, ...]
    non_degenerate: bool
    binary: bool
    unibranch: bool
    witnesses: Dict[str, int]


def classify(t: EnriquesTree) -> TreeClassification:
    """Free/satellite status and the non-degenerate / binary / unibranch
    predicates, with a violating vertex as witness where one fails."""
    n = len(t)
    free = tuple(t.is_free(v) for v in range(n))
    witnesses: Dict[str, int] = {}
    free_path = [False] * n
    for v in range(n):
        p = t.parents[v]
        free_path[v] = free[v] and (p is None or free_path[p])
    non_deg = True
    for v in range(n):
        if free[v] and not free_path[v]:
            non_deg = False
            witnesses["degenerate_free_vertex"] = v
            break
    binary = non_deg
    if binary:
        for v in range(n):
            kids = t.children(v)
            if len(kids) > 2:
                binary = False
                witnesses["outdegree"] = v
                break
            if v != 0 and sum(1 for k in kids if t.kinds[k] == SLANT) > 1:
                binary = False
                witnesses["two_proximate_free"] = v
                break
    unibranch = t.is_path()
    if not unibranch:
        witnesses["branching_vertex"] = next(
            v for v in range(n) if len(t.children(v)) > 1
        )
    return TreeClassification(free, non_deg, binary, unibranch, witnesses)


# -- Euclid data and the staircase trees -----------------------------------------


@dataclass(frozen=True)
class EuclidData:
    """Continued-fraction bookkeeping for a coprime pair p < q.

    a[j] are the quotients of the Euclid algorithm on (q, p) and r[j] the
    remainders (r[1] = p, ..., r[m] = 1).  The auxiliary sequences satisfy
    f_j = f_{j-2} + a_j d_j and d_j = d_{j-2} + a_{j-1} f_{j-2}, recover the
    remainders as r_j = d_j p - f_{j-1} q (j odd) or d_j q - f_{j-1} p
    (j even), and end with {f_m, d_{m+1}} = {p, q}.
    """

    p: int
    q: int
    a: Tuple[int, ...]
    r: Tuple[int, ...]
    f: Tuple[int, ...]  # f[-1] .. f[m], stored with offset 1
    delta: Tuple[int, ...]  # d[0] .. d[m+1]

    def f_at(self, j: int) -> int:
        return self.f[j + 1]

    def delta_at(self, j: int) -> int:
        return self.delta[j]

    @property
    def m(self) -> int:
        return len(self.a)


def euclid_data(p: int, q: int) -> EuclidData:
    if not (1 <= p < q):
        raise EnriquesError("need 1 <= p < q")
    if gcd(p, q) != 1:
        raise EnriquesError(f"{p} and {q} are not coprime")
    a: List[int] = []
    rem: List[int] = []
    hi, lo = q, p
    while lo:
        a.append(hi // lo)
        rem.append(lo)
        hi, lo = lo, hi % lo
    m = len(a)
    f = [0, 0]  # f_{-1}, f_0 at offset j+1
    delta = [1, 1]  # d_0, d_1 at offset j
    for j in range(1, m + 1):
        if j >= 2:
            delta.append(delta[j - 2] + a[j - 2] * f[j - 1])
        f.append(f[j - 1] + a[j - 1] * delta[j])
    delta.append(delta[m - 1] + a[m - 1] * f[m])
    data = EuclidData(p, q, tuple(a), tuple(rem), tuple(f), tuple(delta))
    for j in range(1, m + 1):
        if j % 2 == 1:
            expect = -data.f_at(j - 1) * q + data.delta_at(j) * p
        else:
            expect = data.delta_at(j) * q - data.f_at(j - 1) * p
        assert expect == rem[j - 1], "Euclid remainder identity failed"
    last_f, last_d = data.f_at(m), data.delta_at(m + 1)
    assert {last_f, last_d} == {p, q}, "terminal Euclid identity failed"
    return data


def t_pq(p: int, q: int, *, scale: int = 1, mirror: bool = False) -> EnriquesDiagram:
    """The diagram of the minimal log resolution of x^p - y^q (p < q
    coprime): one vertex block per Euclid quotient, edge kinds slant then
    alternating horizontal / vertical, weights the remainders.

    scale multiplies all weights (the diagram of the d-fold thickened
    staircase); mirror swaps the horizontal and vertical kinds.
    """
    data = euclid_data(p, q)
    n = sum(data.a)
    kinds: List[Optional[str]] = [None]
    weights: List[int] = []
    block_of_edge = []
    block_of_vertex = []
    for j, aj in enumerate(data.a, start=1):
        block_of_edge.extend([j] * aj)
        block_of_vertex.extend([j] * aj)
    for i in range(1, n):
        j = block_of_edge[i - 1]  # edge into vertex i is edge number i
        if j == 1:
            kinds.append(SLANT)
        elif j % 2 == 0:
            kinds.append(HORIZONTAL if not mirror else VERTICAL)
        else:
            kinds.append(VERTICAL if not mirror else HORIZONTAL)
    for i in range(n):
        weights.append(scale * data.r[block_of_vertex[i] - 1])
    parents = [None] + list(range(n - 1))
    tree = EnriquesTree(parents, kinds)
    if mirror and p == 1:
        tree = EnriquesTree(parents, kinds, frozenset({1}) if n > 1 else frozenset())
    return EnriquesDiagram(tree, weights)


# -- union and connected sum -----------------------------------------------------


def union(d1: EnriquesDiagram, d2: EnriquesDiagram) -> EnriquesDiagram:
    """Union of two diagrams whose roots have degree <= 1: the maximal
    common subtrees are glued, weights adding on the shared part.  The
    merge is a greedy recursive match of children by edge kind, which is
    the unique maximal gluing because siblings carry distinct kinds."""
    for d in (d1, d2):
        if len(d) and len(d.tree.children(0)) > 1:
            raise EnriquesError("union needs roots of degree at most 1")
    if len(d1) == 0:
        return d2
    if len(d2) == 0:
        return d1
    parents: List[Optional[int]] = []
    kinds: List[Optional[str]] = []
    weights: List[int] = []
    marks = set()

    def kids_by_kind(d: EnriquesDiagram, v: int) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for k in d.tree.children(v):
            kind = d.tree.kinds[k]
            if kind in out:
                raise EnriquesError("union input has equal-kind siblings")
            out[kind] = k
        return out

    def copy(d: EnriquesDiagram, v: int, parent: Optional[int], kind):
        idx = len(parents)
        parents.append(parent)
        kinds.append(kind)
        weights.append(d.weights[v])
        if parent == 0 and v in d.tree.x_side:
            marks.add(idx)
        for k in d.tree.children(v):
            copy(d, k, idx, d.tree.kinds[k])

    def merge(v1: int, v2: int, parent: Optional[int], kind):
        idx = len(parents)
        parents.append(parent)
        kinds.append(kind)
        weights.append(d1.weights[v1] + d2.weights[v2])
        if parent == 0 and (v1 in d1.tree.x_side or v2 in d2.tree.x_side):
            marks.add(idx)
        k1, k2 = kids_by_kind(d1, v1), kids_by_kind(d2, v2)
        for kind_ in (SLANT, HORIZONTAL, VERTICAL):
            if kind_ in k1 and kind_ in k2:
                merge(k1[kind_], k2[kind_], idx, kind_)
            elif kind_ in k1:
                copy(d1, k1[kind_], idx, kind_)
            elif kind_ in k2:
                copy(d2, k2[kind_], idx, kind_)

    merge(0, 0, None, None)
    return EnriquesDiagram(EnriquesTree(parents, kinds, frozenset(marks)), weights)


def connected_sum(t1: EnriquesTree, t2: EnriquesTree) -> EnriquesTree:
    """Glue the last vertex of the first unibranch tree to the root of the
    second; edge kinds are inherited from each part."""
    for t in (t1, t2):
        if not t.is_path():
            raise EnriquesError("connected sum is defined for unibranch trees")
    if len(t1) == 0:
        return t2
    if len(t2) == 0:
        return t1
    r = len(t1)
    parents = list(t1.parents)
    kinds = list(t1.kinds)
    for v in range(1, len(t2)):
        parents.append(t2.parents[v] + r - 1)
        kinds.append(t2.kinds[v])
    return EnriquesTree(parents, kinds)


def prune_last(d: EnriquesDiagram) -> EnriquesDiagram:
    """Remove the last vertex of a unibranch diagram."""
    if not d.tree.is_path():
        raise EnriquesError("prune_last is defined for unibranch diagrams")
    if len(d) < 2:
        raise EnriquesError("nothing to prune in a single-vertex diagram")
    return d.restrict(range(len(d) - 1))


# -- closed-form branch coefficients and the comparison of thresholds -----------


@dataclass(frozen=True)
class BranchCoefficients:
    """Closed forms for a branch divisor B_alpha of the tree of x^p - y^q:
    its last strict coordinate e_r(B_alpha) and, when defined (alpha >= 2),
    its first total coordinate w_1(B_alpha)."""

    e_last: int
    w_first: Optional[int]


def branch_coefficients(p: int, q: int, alpha: int) -> BranchCoefficients:
    data = euclid_data(p, q)
    r = sum(data.a)
    if not 1 <= alpha <= r:
        raise EnriquesError(f"alpha must lie in 1..{r}")
    prefix = 0
    j = 0
    for jj, aj in enumerate(data.a, start=1):
        if alpha <= prefix + aj:
            j, k = jj, alpha - prefix
            break
        prefix += aj
    factor = p if j % 2 == 1 else q
    e_last = (data.f_at(j - 2) + k * data.delta_at(j)) * factor

    w_first: Optional[int] = None
    if alpha >= 2:
        if k >= 2:
            jj, kk = j, k
        else:
            jj, kk = j - 1, data.a[j - 2] + 1
        if jj % 2 == 1:
            w_first = data.delta_at(jj - 1) + kk * data.f_at(jj - 1)
        else:
            w_first = data.f_at(jj - 2) + kk * data.delta_at(jj)
    return BranchCoefficients(e_last, w_first)


@dataclass(frozen=True)
class InequalityRow:
    alpha: int  # 0-based vertex of the connected sum
    at_junction: Fraction  # e_r(B_alpha) / (k_r + 1)
    at_end: Fraction  # e_{r+r'-1}(B_alpha) / (k_{r+r'-1} + 1)

    @property
    def holds(self) -> bool:
        return self.at_junction > self.at_end


@dataclass(frozen=True)
class MainInequalityReport:
    rows: Tuple[InequalityRow, ...]
    junction: int
    end: int

    @property
    def holds(self) -> bool:
        return all(row.holds for row in self.rows)


def verify_main_inequality(t: EnriquesTree, p2: int, q2: int) -> MainInequalityReport:
    """For the connected sum S of a unibranch tree t (which must contain a
    proper L-shaped branch, i.e. a satellite) with the tree of x^p2 - y^q2,
    compare e(B_alpha)/(k+1) at the junction vertex and at the last vertex
    for every alpha; the junction ratio must be strictly larger."""
    if not t.is_path():
        raise EnriquesError("the first factor must be unibranch")
    if all(t.is_free(v) for v in range(len(t))):
        raise EnriquesError(
            "the first factor has no proper L-shaped branch (no satellite)"
        )
    s = connected_sum(t, t_pq(p2, q2).tree)
    c = tree_to_cluster(s)
    m = intersection_inverse(c)  # m[alpha][beta] = e_beta(B_alpha)
    k = log_discrepancies(c).entries
    r = len(t) - 1  # junction, 0-based
    end = len(s) - 1
    rows = tuple(
        InequalityRow(
            alpha,
            Fraction(m[alpha][r], k[r] + 1),
            Fraction(m[alpha][end], k[end] + 1),
        )
        for alpha in range(len(s))
    )
    return MainInequalityReport(rows, r, end)


# -- diagrams <-> staircases ------------------------------------------------------


def diagram_to_staircase(d: EnriquesDiagram) -> Staircase:
    """Staircase of the integrally closed monomial ideal cut out by a
    binary unloaded diagram.

    Recursion on the root: with root weight c and the subschemes Z1 (child
    on the y-axis side) and Z2 (x-axis side) after one blowup, the
    staircase is the double slice sum (triangle(c) +v S(Z1)) +h S(Z2).
    The roles propagate: along the y-side, the slant child continues the
    y-chain and the (horizontal) satellite child starts the exceptional
    x-chain; at satellites the same-kind child keeps its role and the
    opposite-kind child takes the other one.
    """
    cls = classify(d.tree)
    if not cls.binary:
        raise EnriquesError(f"diagram is not binary: {cls.witnesses}")
    if not is_unloaded(d.to_weighted_cluster()):
        raise EnriquesError("diagram is not unloaded")
    t, w = d.tree, d.weights

    def split(v: int, role: str) -> Tuple[Optional[int], Optional[int]]:
        kids = t.children(v)
        if t.is_free(v):
            slant = next((k for k in kids if t.kinds[k] == SLANT), None)
            sat = next((k for k in kids if t.kinds[k] != SLANT), None)
            if sat is not None:
                want = HORIZONTAL if role == "V" else VERTICAL
                if t.kinds[sat] != want:
                    raise OrientationError(
                        f"vertex {v}: satellite child drawn {t.kinds[sat]!r} on "
                        f"the {'y' if role == 'V' else 'x'}-axis chain"
                    )
            return (slant, sat) if role == "V" else (sat, slant)
        same = next((k for k in kids if t.kinds[k] == t.kinds[v]), None)
        opp = next((k for k in kids if t.kinds[k] == _opposite(t.kinds[v])), None)
        return (same, opp) if role == "V" else (opp, same)

    def stair(v: Optional[int], role: str) -> Staircase:
        if v is None:
            return Staircase.empty()
        c = w[v]
        vchild, hchild = split(v, role)
        sv = stair(vchild, "V")
        sh = stair(hchild, "H")
        if c == 0:
            if not (sv.is_empty() and sh.is_empty()):
                raise EnriquesError(f"vertex {v}: zero weight above positive ones")
            return Staircase.empty()
        base = triangle(c)
        return staircase_sum(staircase_sum(base, sv, "vertical"), sh, "horizontal")

    if len(d) == 0:
        return Staircase.empty()

    # classify the root children into the y-side and x-side subschemes
    kids = t.children(0)
    flavors = {}
    for v in kids:
        if v in t.x_side:
            flavors[v] = "H"
        else:
            flavors[v] = {"V": "V", "H": "H", None: None}[
                _subtree_flavor(t.parents, t.kinds, v)
            ]
    assigned = dict(flavors)
    free_slots = [s for s in ("V", "H") if s not in assigned.values()]
    for v in kids:
        if assigned[v] is None:
            if not free_slots:
                raise OrientationError("both root chains claim the same axis")
            assigned[v] = free_slots.pop(0)
    values = [assigned[v] for v in kids]
    if len(values) != len(set(values)):
        raise OrientationError("both root children lie on the same axis")
    vchild = next((v for v in kids if assigned[v] == "V"), None)
    hchild = next((v for v in kids if assigned[v] == "H"), None)

    c = w[0]
    sv, sh = stair(vchild, "V"), stair(hchild, "H")
    if c == 0:
        if not (sv.is_empty() and sh.is_empty()):
            raise EnriquesError("root weight zero above positive weights")
        return Staircase.empty()
    return staircase_sum(
        staircase_sum(triangle(c), sv, "vertical"),
        sh,
        "horizontal",
    )


def staircase_to_diagram(s: Staircase) -> EnriquesDiagram:
    """Binary unloaded diagram of the smallest integrally closed monomial
    ideal with the given staircase: the union of one thickened staircase
    tree per Newton facet, steep facets (slope <= -1) drawn standard and
    shallow ones mirrored, glued at the root."""
    if s.is_empty():
        raise EnriquesError("the empty staircase has no diagram")
    if not s.is_finite():
        raise EnriquesError("only finite staircases correspond to diagrams")
    facets = newton_facets(s.to_ideal())
    steep: List[EnriquesDiagram] = []
    shallow: List[EnriquesDiagram] = []
    for f in facets:
        if f.q >= f.p:
            steep.append(t_pq(f.p, f.q, scale=f.d) if f.p < f.q
                         else _single_vertex(f.d))
        else:
            shallow.append(t_pq(f.q, f.p, scale=f.d, mirror=True))
    d_steep = _union_all(steep)
    d_shallow = _union_all(shallow)
    if d_shallow is None:
        return d_steep
    if d_steep is None:
        return _mark_chain_children(d_shallow)
    return _glue_at_root(d_steep, d_shallow)


def _single_vertex(weight: int) -> EnriquesDiagram:
    return EnriquesDiagram(EnriquesTree((None,), (None,)), (weight,))


def _union_all(parts: List[EnriquesDiagram]) -> Optional[EnriquesDiagram]:
    if not parts:
        return None
    out = parts[0]
    for p in parts[1:]:
        out = union(out, p)
    return out


def _mark_chain_children(d: EnriquesDiagram) -> EnriquesDiagram:
    marks = set(d.tree.x_side)
    for v in d.tree.children(0):
        if _subtree_flavor(d.tree.parents, d.tree.kinds, v) is None:
            marks.add(v)
    t = EnriquesTree(d.tree.parents, d.tree.kinds, frozenset(marks))
    return EnriquesDiagram(t, d.weights)


def _glue_at_root(dv: EnriquesDiagram, dh: EnriquesDiagram) -> EnriquesDiagram:
    dh = _mark_chain_children(dh)
    parents: List[Optional[int]] = [None]
    kinds: List[Optional[str]] = [None]
    weights: List[int] = [dv.weights[0] + dh.weights[0]]
    marks = set()

    def copy(d: EnriquesDiagram, v: int, parent: int):
        idx = len(parents)
        parents.append(parent)
        kinds.append(d.tree.kinds[v])
        weights.append(d.weights[v])
        if parent == 0 and v in d.tree.x_side:
            marks.add(idx)
        for k in d.tree.children(v):
            copy(d, k, idx)

    for k in dv.tree.children(0):
        copy(dv, k, 0)
    for k in dh.tree.children(0):
        copy(dh, k, 0)
    return EnriquesDiagram(EnriquesTree(parents, kinds, frozenset(marks)), weights)
