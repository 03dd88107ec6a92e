"""Verification suite: runs every applicable check over (n, kind, m) cells."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations
from math import comb

from .build import (
    ag_adjacent_by_annihilators,
    build_blowup,
    build_reduced,
    wgamma_adjacent,
    wgamma_adjacent_bruteforce,
)
from .coloring import is_chain_coloring, level_color, verify_coloring
from .metrics import (
    common_neighbor_exists,
    cycle_through_pair,
    predicted_common_neighbor,
    predicted_degree,
    predicted_orthogonal,
    predicted_pair_cycle,
    is_orthogonal,
)
from .errors import InvalidSpaceError
from .model import FiniteIsolated, GraphKind
from .predict import compare

SUITE_MAX_POINTS = 10
PAIR_CAP = 6
COLOR_CAP = 12
BRUTE_CAP = 8


@dataclass(frozen=True)
class SuiteResult:
    check: str
    claim: str
    n: int
    kind: str
    m: int | None
    passed: bool
    witness: str | None = None
    elapsed: float = 0.0

    @property
    def sort_key(self) -> tuple:
        return (self.n, self.kind, self.m or 0, self.check)

    def to_json(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        m = "-" if self.m is None else self.m
        tail = f"  witness: {self.witness}" if self.witness else ""
        return f"{status}  {self.check:<34} n={self.n:<2} kind={self.kind:<6} m={m}  {self.elapsed:.3f}s{tail}"


# each check returns a list of (name, claim, passed, witness)

def _vertex_count(n, kind, m):
    G = build_reduced(n, kind)
    ok = G.n_vertices == 2**n - 2
    return [("vertex_count", "reduced graph has 2^n - 2 vertices", ok,
             None if ok else f"{G.n_vertices} vertices")]


def _degree_formula(n, kind, m):
    G = build_reduced(n, kind)
    bad = next((A for A in G.labels if G.degree(A) != predicted_degree(A)), None)
    return [("degree_formula", "deg(A) = 2^n - 2^|A| - 2^(n-|A|) + 1", bad is None,
             None if bad is None else f"{bad}: {G.degree(bad)} != {predicted_degree(bad)}")]


def _adjacency_oracle(n, kind, m):
    kind = GraphKind(kind)
    G = build_reduced(n, kind)
    if kind is GraphKind.AG:
        oracle, claim = ag_adjacent_by_annihilators, "incomparable supports <=> ann(f) u ann(g) != ann(fg)"
    elif kind is GraphKind.WGAMMA:
        oracle, claim = wgamma_adjacent_bruteforce, "closed rule matches annihilator-pair search"
    else:
        def oracle(A, B):
            return A.bits & B.bits == 0
        claim = "edges are exactly the pairs with fg = 0"
    for A, B in combinations(G.labels, 2):
        if G.has_edge(A, B) != oracle(A, B):
            return [("adjacency_oracle", claim, False, f"{A} {B}")]
    if kind is GraphKind.WGAMMA:
        for A in G.labels:
            if wgamma_adjacent(A, A, same_class=True) != wgamma_adjacent_bruteforce(A, A):
                return [("adjacency_oracle", claim, False, f"same class {A}")]
    return [("adjacency_oracle", claim, True, None)]


_CHAIN = {
    GraphKind.GAMMA: ((GraphKind.GAMMA, GraphKind.AG),),
    GraphKind.AG: ((GraphKind.GAMMA, GraphKind.AG), (GraphKind.AG, GraphKind.WGAMMA)),
    GraphKind.WGAMMA: ((GraphKind.AG, GraphKind.WGAMMA),),
}
_SYMBOL = {GraphKind.GAMMA: "Gamma", GraphKind.AG: "AG", GraphKind.WGAMMA: "WGamma"}


def _hierarchy(n, kind, m):
    out = []
    for small, big in _CHAIN[GraphKind(kind)]:
        a = build_blowup(n, small, m).edge_set()
        b = build_blowup(n, big, m).edge_set()
        extra = next(iter(a - b), None)
        out.append((
            f"subgraph:{small.value}<={big.value}",
            f"{_SYMBOL[small]} is a subgraph of {_SYMBOL[big]}",
            extra is None,
            None if extra is None else " -- ".join(sorted(str(v) for v in extra)),
        ))
    return out


def _coincidence(n, kind, m):
    sets = [build_blowup(n, k, m).edge_set() for k in GraphKind]
    equal = sets[0] == sets[1] == sets[2]
    ok = equal == (n <= 2)
    witness = None
    if not ok:
        witness = "graphs coincide" if equal else "graphs differ"
    return [("coincidence", "Gamma = AG = WGamma iff n <= 2", ok, witness)]


def _pair_tables(n, kind, m):
    H = build_blowup(n, GraphKind.AG, m)
    bad_cycle = bad_orth = bad_common = None
    for u, v in combinations(H.labels, 2):
        A, B = u.support, v.support
        if bad_cycle is None:
            got = cycle_through_pair(H, u, v).length
            if got != predicted_pair_cycle(A, B):
                bad_cycle = f"{u} {v}: {got}"
        if bad_orth is None and is_orthogonal(H, u, v) != predicted_orthogonal(A, B):
            bad_orth = f"{u} {v}"
        if bad_common is None and common_neighbor_exists(H, u, v) != predicted_common_neighbor(A, B):
            bad_common = f"{u} {v}"
    return [
        ("pair_cycle_table", "c(f,g) matches the 3/4 case table", bad_cycle is None, bad_cycle),
        ("orthogonality_table", "f, g orthogonal iff disjoint and a co-support is a point",
         bad_orth is None, bad_orth),
        ("common_neighbor_table", "common neighbour exists per case table",
         bad_common is None, bad_common),
    ]


def _coloring(n, kind, m):
    c = level_color(n)
    check = verify_coloring(build_reduced(n, GraphKind.AG), c)
    target = comb(n, n // 2)
    return [
        ("coloring_proper", "level greedy gives a proper coloring", check.proper,
         None if check.proper else str(check.conflict)),
        ("coloring_palette", "palette size is C(n, floor(n/2))", c.palette == target,
         None if c.palette == target else f"{c.palette} colors"),
        ("coloring_chains", "color classes are chains", is_chain_coloring(c), None),
    ]


def _predictions(n, kind, m):
    report = compare(FiniteIsolated(n), (GraphKind.AG,), m)
    out = []
    for e in report.entries.values():
        if e.agrees is None:
            continue
        witness = None if e.agrees else f"predicted {e.predicted}, computed {e.computed}, witness {e.witness}"
        out.append((f"predict:{e.key}", f"{e.name} on {e.scope} matches closed form", e.agrees, witness))
    return out


# name -> (function, applies(n, kind), uses m)
CHECKS = {
    "vertex_count": (_vertex_count, lambda n, k: True, False),
    "degree_formula": (_degree_formula, lambda n, k: k is GraphKind.AG and n >= 3, False),
    "adjacency_oracle": (_adjacency_oracle, lambda n, k: n <= BRUTE_CAP, False),
    "hierarchy": (_hierarchy, lambda n, k: True, True),
    "coincidence": (_coincidence, lambda n, k: k is GraphKind.AG, True),
    "pair_tables": (_pair_tables, lambda n, k: k is GraphKind.AG and 3 <= n <= PAIR_CAP, True),
    "coloring": (_coloring, lambda n, k: k is GraphKind.AG and n <= COLOR_CAP, False),
    "predictions": (_predictions, lambda n, k: k is GraphKind.AG and n >= 3, True),
}


def plan(ns, kinds, ms) -> list[tuple]:
    """All (check, n, kind, m) cells; checks without ``m`` run once."""
    cells = []
    for n in ns:
        for kind in kinds:
            kind = GraphKind(kind)
            for name, (_, applies, uses_m) in CHECKS.items():
                if not applies(n, kind):
                    continue
                for m in (ms if uses_m else [None]):
                    cells.append((name, n, kind.value, m))
    return cells


def run_cell(cell: tuple) -> list[SuiteResult]:
    name, n, kind, m = cell
    fn = CHECKS[name][0]
    start = time.perf_counter()
    outcomes = fn(n, GraphKind(kind), m)
    elapsed = (time.perf_counter() - start) / max(1, len(outcomes))
    return [
        SuiteResult(check, claim, n, kind, m, bool(ok), witness, elapsed)
        for check, claim, ok, witness in outcomes
    ]


def run_suite(ns, kinds=tuple(GraphKind), ms=(2, 3), jobs: int = 1) -> list[SuiteResult]:
    for n in ns:
        if not 2 <= n <= SUITE_MAX_POINTS:
            raise InvalidSpaceError(f"suite supports 2 <= n <= {SUITE_MAX_POINTS}, got {n}")
    cells = plan(ns, kinds, ms)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(run_cell, cells))
    else:
        batches = [run_cell(c) for c in cells]
    results = [r for batch in batches for r in batch]
    return sorted(results, key=lambda r: r.sort_key)


def summary(results: list[SuiteResult]) -> str:
    passed = sum(r.passed for r in results)
    return f"{passed} passed, {len(results) - passed} failed, {len(results)} checks"
