"""Clusters of infinitely near points on a smooth surface.

A cluster is a finite, topologically ordered list of points, each one
either the proper point (root) or infinitely near to it.  Every non-root
point carries the set of points it is proximate to: its parent always, and
for satellites one further ancestor reachable by an L-shaped branch.

The proximity matrix Pi expresses the strict transforms of the exceptional
divisors in the total transforms: row alpha has 1 on the diagonal and -1 in
column beta exactly when P_beta is proximate to P_alpha.  A divisor in the
lattice spanned by the exceptional divisors can be written in three integer
bases, and the dictionary is

    w = e . Pi            (total from strict)
    b = w . Pi^t          (branch from total, i.e. b = w - wbar)
    k . Pi = (1, ..., 1)  (log discrepancies)

Unloading repairs a weight vector that violates a proximity inequality by
moving weight onto the violated point; it preserves the complete ideal cut
out by the cluster and terminates in the unique weight vector whose branch
coordinates are all non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

TOTAL = "total"
STRICT = "strict"
BRANCH = "branch"
LOGDISC = "logdisc"


class ClusterError(ValueError):
    pass


class UnloadingError(ClusterError):
    """The unloading iteration failed to reach a fixed point."""


@dataclass(frozen=True)
class BasisVector:
    entries: Tuple[int, ...]
    basis: str

    def __init__(self, entries, basis: str):
        if basis not in (TOTAL, STRICT, BRANCH, LOGDISC):
            raise ClusterError(f"unknown basis {basis!r}")
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "basis", basis)


@dataclass(frozen=True)
class Cluster:
    """Proximity structure: parents[i] and targets[i] (points P_i is
    proximate to, parent included), indices 0-based and ordered so that
    every target precedes the point."""

    parents: Tuple[Optional[int], ...]
    targets: Tuple[Tuple[int, ...], ...]

    def __init__(self, parents, targets):
        parents = tuple(parents)
        targets = tuple(tuple(sorted(t)) for t in targets)
        if len(parents) != len(targets):
            raise ClusterError("parents and proximity lists differ in length")
        for i, (p, t) in enumerate(zip(parents, targets)):
            if i == 0:
                if p is not None or t:
                    raise ClusterError("the first point must be the proper point")
                continue
            if p is None:
                raise ClusterError(f"point {i}: only the first point may lack a parent")
            if not 0 <= p < i:
                raise ClusterError(f"point {i}: parent {p} does not precede it")
            if p not in t:
                raise ClusterError(f"point {i}: not proximate to its parent")
            if len(t) not in (1, 2):
                raise ClusterError(f"point {i}: proximate to {len(t)} points")
            if any(not 0 <= a < i for a in t):
                raise ClusterError(f"point {i}: proximity target out of order")
            if len(t) == 2:
                second = t[0] if t[1] == p else t[1]
                allowed = set()
                if parents[p] is not None:
                    allowed.add(parents[p])
                for a in targets[p]:
                    if a != parents[p]:
                        allowed.add(a)
                if second not in allowed:
                    raise ClusterError(
                        f"point {i}: satellite target {second} is not reachable "
                        "by an L-shaped branch"
                    )
                if t in targets[:i]:
                    raise ClusterError(
                        f"point {i}: a second point on the crossing of the "
                        f"exceptional divisors of {t[0]} and {t[1]}"
                    )
        object.__setattr__(self, "parents", parents)
        object.__setattr__(self, "targets", targets)

    def __len__(self) -> int:
        return len(self.parents)

    @property
    def size(self) -> int:
        return len(self.parents)

    def proximate_to(self, alpha: int) -> List[int]:
        """Points proximate to P_alpha (they all come after it)."""
        return [b for b in range(alpha + 1, len(self)) if alpha in self.targets[b]]

    def is_free(self, alpha: int) -> bool:
        return len(self.targets[alpha]) < 2

    def is_satellite(self, alpha: int) -> bool:
        return len(self.targets[alpha]) == 2

    def second_target(self, alpha: int) -> Optional[int]:
        t = self.targets[alpha]
        if len(t) < 2:
            return None
        return t[0] if t[1] == self.parents[alpha] else t[1]

    def children(self, alpha: int) -> List[int]:
        return [b for b in range(len(self)) if self.parents[b] == alpha]

    def restrict(self, keep: Sequence[int]) -> "Cluster":
        """Sub-cluster on the given (sorted) indices, which must be closed
        under taking proximity targets."""
        keep = sorted(keep)
        pos = {old: new for new, old in enumerate(keep)}
        for i in keep:
            for a in self.targets[i]:
                if a not in pos:
                    raise ClusterError(f"restriction drops target {a} of point {i}")
        parents = tuple(
            None if self.parents[i] is None else pos[self.parents[i]] for i in keep
        )
        targets = tuple(tuple(pos[a] for a in self.targets[i]) for i in keep)
        return Cluster(parents, targets)


EMPTY_CLUSTER = Cluster((), ())


@dataclass(frozen=True)
class WeightedCluster:
    cluster: Cluster
    weights: Tuple[int, ...]

    def __init__(self, cluster: Cluster, weights):
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(cluster):
            raise ClusterError("weight vector length does not match the cluster")
        object.__setattr__(self, "cluster", cluster)
        object.__setattr__(self, "weights", weights)

    def is_empty(self) -> bool:
        return not self.weights or not any(self.weights)

    def trimmed(self) -> "WeightedCluster":
        """Drop zero-weight points that no remaining point is proximate to;
        they impose no condition on the ideal."""
        keep = list(range(len(self.cluster)))
        weights = list(self.weights)
        changed = True
        while changed:
            changed = False
            needed = set()
            for i in keep:
                for a in self.cluster.targets[i]:
                    needed.add(a)
            for i in reversed(keep):
                if weights[i] == 0 and i not in needed:
                    keep.remove(i)
                    changed = True
                    break
        if len(keep) == len(self.cluster):
            return self
        if not keep:
            return WeightedCluster(EMPTY_CLUSTER, ())
        sub = self.cluster.restrict(keep)
        return WeightedCluster(sub, tuple(weights[i] for i in keep))


# -- proximity matrix and exact linear algebra --------------------------------


def proximity_matrix(c: Cluster) -> Tuple[Tuple[int, ...], ...]:
    r = len(c)
    rows = [[0] * r for _ in range(r)]
    for a in range(r):
        rows[a][a] = 1
    for b in range(r):
        for a in c.targets[b]:
            rows[a][b] = -1
    return tuple(tuple(row) for row in rows)


def pi_inverse(c: Cluster) -> Tuple[Tuple[int, ...], ...]:
    """Inverse of the proximity matrix (unipotent, entrywise >= 0)."""
    pi = proximity_matrix(c)
    r = len(c)
    inv = [[0] * r for _ in range(r)]
    for j in range(r):
        col = [0] * r
        col[j] = 1
        for i in range(j - 1, -1, -1):
            s = sum(pi[i][k] * col[k] for k in range(i + 1, j + 1))
            col[i] = -s
        for i in range(r):
            inv[i][j] = col[i]
    return tuple(tuple(row) for row in inv)


def intersection_inverse(c: Cluster) -> Tuple[Tuple[int, ...], ...]:
    """(Pi . Pi^t)^{-1}; entry (alpha, beta) is the strict-basis coordinate
    e_beta of the branch divisor B_alpha."""
    inv = pi_inverse(c)
    r = len(c)
    out = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            out[i][j] = sum(inv[k][i] * inv[k][j] for k in range(r))
    return tuple(tuple(row) for row in out)


# -- basis changes -------------------------------------------------------------


def _total_from_strict(c: Cluster, e: Sequence[int]) -> List[int]:
    return [e[b] - sum(e[g] for g in c.targets[b]) for b in range(len(c))]


def _strict_from_total(c: Cluster, w: Sequence[int]) -> List[int]:
    e: List[int] = []
    for a in range(len(c)):
        e.append(w[a] + sum(e[g] for g in c.targets[a]))
    return e


def _branch_from_total(c: Cluster, w: Sequence[int]) -> List[int]:
    return [w[a] - sum(w[b] for b in c.proximate_to(a)) for a in range(len(c))]


def _total_from_branch(c: Cluster, b: Sequence[int]) -> List[int]:
    w = [0] * len(c)
    for a in range(len(c) - 1, -1, -1):
        w[a] = b[a] + sum(w[x] for x in c.proximate_to(a))
    return w


def change_basis(v: BasisVector, target: str, c: Cluster) -> BasisVector:
    """Exact basis change among total / strict / branch coordinates."""
    if v.basis == LOGDISC or target == LOGDISC:
        raise ClusterError("log-discrepancy vectors are produced, not converted")
    if len(v.entries) != len(c):
        raise ClusterError("vector length does not match the cluster")
    if v.basis == target:
        return v
    to_total = {
        TOTAL: lambda x: list(x),
        STRICT: lambda x: _total_from_strict(c, x),
        BRANCH: lambda x: _total_from_branch(c, x),
    }
    from_total = {
        TOTAL: lambda x: list(x),
        STRICT: lambda x: _strict_from_total(c, x),
        BRANCH: lambda x: _branch_from_total(c, x),
    }
    w = to_total[v.basis](v.entries)
    return BasisVector(from_total[target](w), target)


def log_discrepancies(c: Cluster) -> BasisVector:
    """Coefficients of the relative canonical divisor on the strict
    transforms: k_alpha = 1 + sum of k over the points P_alpha is proximate
    to; equivalently k . Pi = (1, ..., 1)."""
    k: List[int] = []
    for a in range(len(c)):
        k.append(1 + sum(k[g] for g in c.targets[a]))
    return BasisVector(k, LOGDISC)


# -- unloading ------------------------------------------------------------------


def is_unloaded(kl: WeightedCluster) -> bool:
    """True iff the weights satisfy every proximity inequality
    (equivalently, the branch coordinates are all non-negative)."""
    b = _branch_from_total(kl.cluster, kl.weights)
    return all(x >= 0 for x in b)


def unload(
    kl: WeightedCluster,
    max_steps: int = 100_000,
    choose: Optional[Callable[[List[int]], int]] = None,
) -> WeightedCluster:
    """Run the unloading procedure to its fixed point.

    Each step picks a point with negative branch coordinate, adds 1 to its
    weight and subtracts 1 from the weight of every point proximate to it;
    the associated divisor grows by one strict transform, which is asserted
    at every step.  The default picks the smallest violated index; the
    fixed point does not depend on this choice.
    """
    c = kl.cluster
    w = list(kl.weights)
    e = _strict_from_total(c, w)
    prox_to = [c.proximate_to(a) for a in range(len(c))]
    for _ in range(max_steps):
        violated = [
            a for a in range(len(c)) if w[a] - sum(w[b] for b in prox_to[a]) < 0
        ]
        if not violated:
            return WeightedCluster(c, w)
        a = violated[0] if choose is None else choose(violated)
        w[a] += 1
        for b in prox_to[a]:
            w[b] -= 1
        new_e = _strict_from_total(c, w)
        diff = [x - y for x, y in zip(new_e, e)]
        assert diff == [1 if i == a else 0 for i in range(len(c))], (
            "unloading step must add exactly one strict transform"
        )
        e = new_e
    raise UnloadingError(f"no fixed point after {max_steps} steps")


def _complete_strict(
    c: Cluster, demand: Sequence[int], warm: Optional[Sequence[int]] = None
) -> List[int]:
    """Least non-negative strict vector e >= demand whose branch coordinates
    are non-negative: the strict coordinates of the complete ideal with the
    demanded valuations.  Multi-step unloading; `warm` may give a known
    lower bound for the fixed point (e.g. the result at a smaller scale)."""
    r = len(c)
    e = [max(d, 0) for d in demand]
    if warm is not None:
        e = [max(a, b) for a, b in zip(e, warm)]
    prox_to = [c.proximate_to(a) for a in range(r)]
    diag = [1 + len(p) for p in prox_to]
    for _ in range(100_000):
        w = _total_from_strict(c, e)
        clean = True
        for a in range(r):
            excess = w[a] - sum(w[b] for b in prox_to[a])
            if excess < 0:
                # each unit added to e[a] raises the excess by diag[a]
                t = (-excess + diag[a] - 1) // diag[a]
                e[a] += t
                # keep w consistent with the bump
                w[a] += t
                for b in range(a + 1, r):
                    if a in c.targets[b]:
                        w[b] -= t
                clean = False
        if clean:
            return e
    raise UnloadingError("completion did not stabilize")


# -- invariants of curve clusters ------------------------------------------------


def lct_cluster(kl: WeightedCluster) -> Tuple[Fraction, Tuple[int, ...]]:
    """Log-canonical threshold min (k+1)/e of an unloaded weighted cluster,
    together with all indices attaining the minimum."""
    if kl.is_empty():
        raise ClusterError("log-canonical threshold needs a non-empty cluster")
    if not is_unloaded(kl):
        raise ClusterError(
            "weights violate a proximity relation; unload the cluster first"
        )
    e = _strict_from_total(kl.cluster, kl.weights)
    k = log_discrepancies(kl.cluster).entries
    values = [Fraction(k[a] + 1, e[a]) for a in range(len(kl.cluster))]
    best = min(values)
    return best, tuple(a for a, v in enumerate(values) if v == best)


def multiplier_cluster(kl: WeightedCluster, xi: Fraction) -> WeightedCluster:
    """Unloaded cluster of the multiplier ideal of xi times the curve whose
    minimal log resolution has this weighted cluster; valid for 0 < xi < 1.

    The demanded strict coordinates are floor(xi * e) - k; intermediate
    weights may be negative, and the completion runs to the unique fixed
    point with non-negative weights and excesses.
    """
    xi = Fraction(xi)
    if not 0 < xi < 1:
        raise ClusterError("the curve multiplier cluster is defined for 0 < xi < 1")
    if not is_unloaded(kl):
        raise ClusterError("curve cluster must satisfy the proximity relations")
    c = kl.cluster
    e = _strict_from_total(c, kl.weights)
    k = log_discrepancies(c).entries
    demand = [(xi * e[a]).__floor__() - k[a] for a in range(len(c))]
    completed = _complete_strict(c, demand)
    return WeightedCluster(c, _total_from_strict(c, completed))


def jumping_numbers_curve(kl: WeightedCluster, bound: Fraction) -> List[Fraction]:
    """Jumping numbers of the curve divisor in (0, bound], bound <= 1;
    the integer jump at 1 (the strict transform's contribution) is excluded.

    Candidates are (k+j)/e with j >= 1 over the cluster points; each is kept
    iff the multiplier cluster actually changes there, which is decided by
    comparing completions just below and at the candidate value.
    """
    bound = Fraction(bound)
    if bound > 1:
        raise ClusterError("curve jumping numbers are only computed up to 1")
    if bound <= 0:
        raise ClusterError("bound must be positive")
    if not is_unloaded(kl):
        raise ClusterError("curve cluster must satisfy the proximity relations")
    c = kl.cluster
    e = _strict_from_total(c, kl.weights)
    k = log_discrepancies(c).entries
    candidates = set()
    for a in range(len(c)):
        j = 1
        while True:
            xi = Fraction(k[a] + j, e[a])
            if xi > bound or xi >= 1:
                break
            candidates.add(xi)
            j += 1
    r = len(c)

    def demand_at(xi: Fraction) -> List[int]:
        return [(xi * e[a]).__floor__() - k[a] for a in range(r)]

    jumps = []
    prev_e = [0] * r
    prev_xi = Fraction(0)
    for xi in sorted(candidates):
        mid = (prev_xi + xi) / 2
        between = _complete_strict(c, demand_at(mid), warm=prev_e)
        assert between == prev_e, "multiplier cluster changed off the candidate grid"
        at = _complete_strict(c, demand_at(xi), warm=between)
        if at != prev_e:
            jumps.append(xi)
        prev_e, prev_xi = at, xi
    return jumps
