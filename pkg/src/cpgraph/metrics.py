"""Graph parameters, computed directly, and their closed-form predictions.

Every ``compute`` style function works on any :class:`~cpgraph.build.Graph`
and addresses vertices by label (a ``PointSet`` for reduced graphs, a
``Vertex`` for blow-ups). The ``predicted_*`` functions work on supports only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .build import Graph, Vertex, iter_bits
from .errors import PreconditionError
from .model import PointSet, complement, iter_level

INF = math.inf


def _support(label) -> PointSet:
    return label.support if isinstance(label, Vertex) else label


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


# -- distances ---------------------------------------------------------------


def _bfs_layers(G: Graph, source: int) -> list[int]:
    rows = G.rows
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for j in iter_bits(frontier):
            nxt |= rows[j]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def distance(G: Graph, u, v) -> int | float:
    """Shortest-path length; ``math.inf`` when ``v`` is unreachable."""
    i, j = G.position(u), G.position(v)
    if i == j:
        raise PreconditionError("distance needs two distinct vertices")
    for d, layer in enumerate(_bfs_layers(G, i)):
        if layer >> j & 1:
            return d
    return INF


def _eccentricity_at(G: Graph, i: int) -> int | float:
    layers = _bfs_layers(G, i)
    reached = 0
    for layer in layers:
        reached |= layer
    if reached != G.full_mask:
        return INF
    return len(layers) - 1


def eccentricity(G: Graph, u) -> int | float:
    return _eccentricity_at(G, G.position(u))


def eccentricities(G: Graph) -> list[int | float]:
    """Eccentricity of every vertex, by position."""
    return [_eccentricity_at(G, i) for i in range(G.n_vertices)]


def diameter(G: Graph) -> int | float:
    return max(eccentricities(G))


def radius(G: Graph) -> int | float:
    return min(eccentricities(G))


def center(G: Graph) -> list:
    ecc = eccentricities(G)
    r = min(ecc)
    return [G.labels[i] for i, e in enumerate(ecc) if e == r]


# -- cycles ------------------------------------------------------------------


def _has_triangle(G: Graph) -> bool:
    rows = G.rows
    return any(rows[i] & rows[j] for i, j in G.edge_positions())


def girth(G: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests.

    Triangles are detected with bitset intersections; otherwise a BFS from
    every vertex finds the shortest cycle through it.
    """
    if _has_triangle(G):
        return 3
    rows = G.rows
    best = INF
    for s in range(G.n_vertices):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            if 2 * dist[x] + 1 >= best:
                break
            for y in iter_bits(rows[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


@dataclass(frozen=True)
class PairCycleResult:
    """Shortest cycle through two given vertices, searched up to length 4."""

    length: int | None
    witness: tuple = ()

    @property
    def found(self) -> bool:
        return self.length is not None


def cycle_through_pair(G: Graph, u, v) -> PairCycleResult:
    """Smallest cycle containing both ``u`` and ``v`` when it has length 3 or 4.

    Longer cycles are not searched; ``length`` is ``None`` when none of length
    at most 4 exists (e.g. for ``n = 2``).
    """
    i, j = G.position(u), G.position(v)
    if i == j:
        raise PreconditionError("cycle_through_pair needs two distinct vertices")
    rows = G.rows
    lab = G.labels
    bi, bj = 1 << i, 1 << j
    adjacent = bool(rows[i] & bj)
    common = rows[i] & rows[j]
    if adjacent and common:
        w = _low(common)
        return PairCycleResult(3, (lab[i], lab[j], lab[w]))
    # u and v opposite on a square: two distinct common neighbours
    if common & (common - 1):
        a = _low(common)
        b = _low(common & ~(1 << a))
        return PairCycleResult(4, (lab[i], lab[a], lab[j], lab[b]))
    if adjacent:
        # square u - v - a - b - u
        heads = rows[j] & ~bi
        tails = rows[i] & ~bj
        for a in iter_bits(heads):
            hit = rows[a] & tails & ~(1 << a)
            if hit:
                b = _low(hit)
                return PairCycleResult(4, (lab[i], lab[j], lab[a], lab[b]))
    return PairCycleResult(None)


def _meets(A: PointSet, B: PointSet) -> bool:
    return bool(A.bits & B.bits)


def _comparable(A: PointSet, B: PointSet) -> bool:
    meet = A.bits & B.bits
    return meet == A.bits or meet == B.bits


def _co_size(A: PointSet) -> int:
    return complement(A).size


def predicted_pair_cycle(A: PointSet, B: PointSet) -> int:
    """Case table for the shortest cycle through ``f`` and ``g`` in AG.

    ``A == B`` stands for two distinct members of one class (``f`` and ``2f``),
    which are non-adjacent.
    """
    if not _comparable(A, B) and _meets(A, B):
        return 3
    if not _meets(A, B) and _co_size(A) >= 2 and _co_size(B) >= 2:
        return 3
    return 4


# -- triangles, common neighbours, orthogonality -----------------------------


def is_triangulated(G: Graph) -> bool:
    """Every vertex lies on a triangle."""
    rows = G.rows
    return all(
        any(rows[i] & rows[j] for j in iter_bits(rows[i])) for i in range(G.n_vertices)
    )


def is_hypertriangulated(G: Graph) -> bool:
    """Every edge lies on a triangle."""
    rows = G.rows
    return all(rows[i] & rows[j] for i, j in G.edge_positions())


def common_neighbor_exists(G: Graph, u, v) -> bool:
    i, j = G.position(u), G.position(v)
    if i == j:
        raise PreconditionError("need two distinct vertices")
    return bool(G.rows[i] & G.rows[j])


def predicted_common_neighbor(A: PointSet, B: PointSet) -> bool:
    if _meets(A, B) or _comparable(A, B):
        return True
    return _co_size(A) >= 2 and _co_size(B) >= 2


def _orthogonal_at(rows: list[int], i: int, j: int) -> bool:
    return bool(rows[i] >> j & 1) and not rows[i] & rows[j]


def is_orthogonal(G: Graph, u, v) -> bool:
    """Adjacent with no common neighbour."""
    i, j = G.position(u), G.position(v)
    if i == j:
        raise PreconditionError("need two distinct vertices")
    return _orthogonal_at(G.rows, i, j)


def predicted_orthogonal(A: PointSet, B: PointSet) -> bool:
    return not _meets(A, B) and (_co_size(A) == 1 or _co_size(B) == 1)


def orthogonal_partners(G: Graph, u) -> list:
    i = G.position(u)
    rows = G.rows
    return [G.labels[j] for j in iter_bits(rows[i]) if not rows[i] & rows[j]]


def is_complemented(G: Graph) -> bool:
    rows = G.rows
    return all(
        any(not rows[i] & rows[j] for j in iter_bits(rows[i]))
        for i in range(G.n_vertices)
    )


def is_uniquely_complemented(G: Graph) -> bool:
    """Complemented, and all partners of a vertex share one neighbourhood."""
    rows = G.rows
    for i in range(G.n_vertices):
        partner_rows = {rows[j] for j in iter_bits(rows[i]) if not rows[i] & rows[j]}
        if len(partner_rows) != 1:
            return False
    return True


# -- domination --------------------------------------------------------------


@dataclass(frozen=True)
class DominationResult:
    """Minimum (total) dominating set found by exhaustive search.

    ``size`` is ``None`` when no dominating set of size ``<= cap`` exists.
    """

    size: int | None
    witness: tuple = ()
    total: bool = False
    cap: int = 4

    @property
    def exceeds_cap(self) -> bool:
        return self.size is None


def dominates(G: Graph, D, total: bool = False) -> bool:
    positions = [G.position(x) for x in D]
    covered = 0
    for p in positions:
        covered |= G.rows[p]
    if not total:
        for p in positions:
            covered |= 1 << p
    return covered == G.full_mask


def dominating_number(G: Graph, total: bool = False, cap: int = 4) -> DominationResult:
    """Smallest dominating set, trying sizes ``1..cap`` in order."""
    if cap < 1:
        raise PreconditionError(f"cap must be >= 1, got {cap}")
    rows = G.rows
    full = G.full_mask
    N = G.n_vertices
    for k in range(1, min(cap, N) + 1):
        for combo in combinations(range(N), k):
            covered = 0
            for p in combo:
                covered |= rows[p]
                if not total:
                    covered |= 1 << p
            if covered == full:
                return DominationResult(k, tuple(G.labels[p] for p in combo), total, cap)
    return DominationResult(None, (), total, cap)


# -- degree ------------------------------------------------------------------


def degree(G: Graph, A) -> int:
    return G.degree(A)


def predicted_degree(A: PointSet) -> int:
    """``2^n - 2^|A| - 2^(n-|A|) + 1`` (degree in the reduced annihilator graph)."""
    n, k = A.n, A.size
    return (1 << n) - (1 << k) - (1 << (n - k)) + 1


# -- cliques -----------------------------------------------------------------


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple = field(default=())
    exact: bool = True


def clique_number_exact(G: Graph, budget: int = 5_000_000) -> CliqueResult:
    """Maximum clique by bitset branch and bound with greedy-coloring bounds.

    Vertices are renumbered by decreasing degree (ties by position). When more
    than ``budget`` search nodes are needed the best clique so far is returned
    with ``exact=False``.
    """
    N = G.n_vertices
    if N == 0:
        return CliqueResult(0)
    rows = G.rows
    order = sorted(range(N), key=lambda p: (-rows[p].bit_count(), p))
    rank = {p: r for r, p in enumerate(order)}
    adj = []
    for p in order:
        row = 0
        for q in iter_bits(rows[p]):
            row |= 1 << rank[q]
        adj.append(row)

    best: list[int] = []
    nodes = 0
    exhausted = False

    def color_sort(P: int) -> list[tuple[int, int]]:
        out = []
        uncolored = P
        k = 0
        while uncolored:
            k += 1
            Q = uncolored
            while Q:
                v = _low(Q)
                Q &= ~adj[v] & ~(1 << v)
                uncolored &= ~(1 << v)
                out.append((v, k))
        return out

    def expand(C: list[int], P: int) -> None:
        nonlocal best, nodes, exhausted
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        for v, k in reversed(color_sort(P)):
            if len(C) + k <= len(best) or exhausted:
                return
            C.append(v)
            newP = P & adj[v]
            if newP:
                expand(C, newP)
            elif len(C) > len(best):
                best = C.copy()
            C.pop()
            P &= ~(1 << v)

    expand([], (1 << N) - 1)
    witness = tuple(G.labels[order[v]] for v in best)
    return CliqueResult(len(best), witness, not exhausted)


def middle_layer_clique(n: int) -> list[PointSet]:
    """All subsets of size ``floor(n/2)``; pairwise incomparable."""
    return list(iter_level(n, n // 2))


def middle_layer_size(n: int) -> int:
    return comb(n, n // 2)
