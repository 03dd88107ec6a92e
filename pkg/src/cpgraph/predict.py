"""Closed-form parameter predictions and their comparison with computed values.

Scopes: ``G`` is the reduced graph (one vertex per class), ``AG`` the
annihilator blow-up with ``m`` copies per class, ``model`` covers statements
about all three graphs at once.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .build import build_blowup, build_reduced
from .coloring import level_color, verify_coloring, lift_coloring_to_blowup
from .metrics import (
    clique_number_exact,
    dominating_number,
    eccentricities,
    girth,
    is_triangulated,
    is_uniquely_complemented,
    predicted_degree,
)
from .model import ALEPH0, Cardinal, FiniteIsolated, GraphKind, InfiniteIsolated, SpaceModel


class _NotClaimed:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOT_CLAIMED"

    def __bool__(self) -> bool:
        return False


NOT_CLAIMED = _NotClaimed()

# largest point counts for which compare() computes each group of entries
METRIC_CAP_REDUCED = 10
DEGREE_CAP = 12
METRIC_CAP_BLOWUP_VERTICES = 3000
CLIQUE_CAP = 8
DOMINATION_CAP = 8

PARAMETERS = (
    "vertices",
    "degree_formula",
    "diameter",
    "radius",
    "eccentricity_all_2",
    "girth",
    "triangulated",
    "hypertriangulated",
    "uniquely_complemented",
    "dt",
    "dt_total",
    "clique",
    "chromatic",
    "hierarchy",
    "coincide",
)


def _encode(value):
    if isinstance(value, Cardinal):
        return value.to_json()
    if value is NOT_CLAIMED:
        return "not claimed"
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, tuple):
        return [str(v) for v in value]
    return value


@dataclass
class Entry:
    name: str
    scope: str
    predicted: object = NOT_CLAIMED
    computed: object = None
    witness: object = None
    note: str = ""

    @property
    def key(self) -> str:
        return f"{self.name}[{self.scope}]"

    @property
    def claimed(self) -> bool:
        return self.predicted is not NOT_CLAIMED

    @property
    def agrees(self) -> bool | None:
        if not self.claimed or self.computed is None:
            return None
        return self.predicted == self.computed

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "scope": self.scope,
            "predicted": _encode(self.predicted),
            "computed": _encode(self.computed),
            "agrees": self.agrees,
            "witness": _encode(self.witness),
            "note": self.note,
        }


@dataclass
class ParamReport:
    space: SpaceModel
    entries: dict[str, Entry] = field(default_factory=dict)
    kinds: tuple = ()
    m: int | None = None
    elapsed: float = 0.0

    def add(self, entry: Entry) -> Entry:
        self.entries[entry.key] = entry
        return entry

    def __getitem__(self, key: str) -> Entry:
        return self.entries[key]

    def get(self, name: str, scope: str = "G") -> Entry | None:
        return self.entries.get(f"{name}[{scope}]")

    @property
    def disagreements(self) -> list[Entry]:
        return [e for e in self.entries.values() if e.agrees is False]

    @property
    def all_agree(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        if isinstance(self.space, FiniteIsolated):
            space = {"model": "finite", "n": self.space.n}
        else:
            space = {"model": "infinite", "isolated": str(ALEPH0)}
        return {
            "space": space,
            "kinds": [GraphKind(k).value for k in self.kinds],
            "m": self.m,
            "all_agree": self.all_agree,
            "entries": [e.to_json() for e in self.entries.values()],
        }


def _finite(v: int) -> Cardinal:
    return Cardinal.finite(v)


def predicted_report(space: SpaceModel) -> ParamReport:
    """Every predicted value for ``space``; nothing is computed."""
    report = ParamReport(space)
    if isinstance(space, InfiniteIsolated):
        add = report.add
        add(Entry("vertices", "G", ALEPH0))
        for scope in ("G", "AG"):
            add(Entry("diameter", scope, _finite(2)))
            add(Entry("radius", scope, _finite(2)))
            add(Entry("eccentricity_all_2", scope, True))
            add(Entry("girth", scope, _finite(3)))
            add(Entry("triangulated", scope, True))
            add(Entry("hypertriangulated", scope, True))
            add(Entry("uniquely_complemented", scope, NOT_CLAIMED))
            add(Entry("dt", scope, ALEPH0))
            add(Entry("dt_total", scope, ALEPH0))
            add(Entry("clique", scope, ALEPH0))
            add(Entry("chromatic", scope, ALEPH0))
        add(Entry("hierarchy", "model", True))
        add(Entry("coincide", "model", False))
        return report

    n = space.n
    claimed = n >= 3

    def p(value):
        return value if claimed else NOT_CLAIMED

    middle = comb(n, n // 2)
    report.add(Entry("vertices", "G", _finite(2**n - 2)))
    report.add(Entry("degree_formula", "G", p(True)))
    for scope in ("G", "AG"):
        report.add(Entry("diameter", scope, p(_finite(2))))
        report.add(Entry("radius", scope, p(_finite(2))))
        report.add(Entry("eccentricity_all_2", scope, p(True)))
        report.add(Entry("girth", scope, p(_finite(3))))
        report.add(Entry("triangulated", scope, p(True)))
        report.add(Entry("hypertriangulated", scope, p(False)))
        report.add(Entry("uniquely_complemented", scope, p(n == 3)))
        report.add(Entry("dt", scope, p(_finite(2))))
        report.add(Entry("dt_total", scope, p(_finite(2))))
        report.add(Entry("clique", scope, p(_finite(middle))))
        report.add(Entry("chromatic", scope, p(_finite(middle))))
    report.add(Entry("hierarchy", "model", True))
    report.add(Entry("coincide", "model", n <= 2))
    return report


def compare(
    space: SpaceModel,
    kinds: Iterable = (GraphKind.AG,),
    m: int = 2,
) -> ParamReport:
    """Fill in computed values next to the predictions.

    Annihilator-graph entries are computed on the reduced graph and on the
    blow-up. Other kinds in ``kinds`` add computed-only statistics.
    Entries beyond the size caps keep ``computed = None`` with a note.
    """
    start = time.perf_counter()
    report = predicted_report(space)
    report.kinds = tuple(GraphKind(k) for k in kinds)
    report.m = m
    if isinstance(space, InfiniteIsolated):
        for e in report.entries.values():
            e.note = "not computable for an infinite model"
        return report

    n = space.n
    G = build_reduced(n, GraphKind.AG)
    report["vertices[G]"].computed = _finite(G.n_vertices)

    if n <= DEGREE_CAP:
        bad = next((A for A in G.labels if G.degree(A) != predicted_degree(A)), None)
        report["degree_formula[G]"].computed = bad is None
        report["degree_formula[G]"].witness = None if bad is None else (bad,)
    else:
        report["degree_formula[G]"].note = "beyond computation cap"

    graphs = {"G": G}
    if n <= 14 and (2**n - 2) * m <= METRIC_CAP_BLOWUP_VERTICES:
        graphs["AG"] = build_blowup(n, GraphKind.AG, m)

    for scope in ("G", "AG"):
        H = graphs.get(scope)
        if H is None or (scope == "G" and n > METRIC_CAP_REDUCED):
            for name in PARAMETERS:
                e = report.get(name, scope)
                if e is not None:
                    e.note = "beyond computation cap"
            continue
        _fill_metrics(report, scope, H, n)

    for kind in report.kinds:
        if kind is not GraphKind.AG:
            _fill_plain_stats(report, n, kind)
    if n <= METRIC_CAP_REDUCED:
        _fill_hierarchy(report, n, m)
    else:
        report["hierarchy[model]"].note = report["coincide[model]"].note = "beyond computation cap"
    report.elapsed = time.perf_counter() - start
    return report


def _fill_metrics(report: ParamReport, scope: str, H, n: int) -> None:
    ecc = eccentricities(H)
    diam, rad = max(ecc), min(ecc)
    report[f"diameter[{scope}]"].computed = diam if math.isinf(diam) else _finite(diam)
    report[f"radius[{scope}]"].computed = rad if math.isinf(rad) else _finite(rad)
    off = next((i for i, e in enumerate(ecc) if e != 2), None)
    e = report[f"eccentricity_all_2[{scope}]"]
    e.computed = off is None
    e.witness = None if off is None else (H.labels[off], ecc[off])

    g = girth(H)
    report[f"girth[{scope}]"].computed = g if math.isinf(g) else _finite(g)
    report[f"triangulated[{scope}]"].computed = is_triangulated(H)

    rows = H.rows
    lone = next(((i, j) for i, j in H.edge_positions() if not rows[i] & rows[j]), None)
    e = report[f"hypertriangulated[{scope}]"]
    e.computed = lone is None
    e.witness = None if lone is None else (H.labels[lone[0]], H.labels[lone[1]])
    report[f"uniquely_complemented[{scope}]"].computed = is_uniquely_complemented(H)

    if n <= DOMINATION_CAP:
        for name, total in (("dt", False), ("dt_total", True)):
            res = dominating_number(H, total=total, cap=4)
            e = report[f"{name}[{scope}]"]
            if res.size is None:
                e.note = "no dominating set of size <= 4"
            else:
                e.computed = _finite(res.size)
                e.witness = res.witness
    else:
        report[f"dt[{scope}]"].note = report[f"dt_total[{scope}]"].note = "beyond computation cap"

    if n <= CLIQUE_CAP:
        cq = clique_number_exact(H)
        e = report[f"clique[{scope}]"]
        if cq.exact:
            e.computed = _finite(cq.size)
        else:
            e.note = "clique search budget exhausted"
        e.witness = cq.witness if not cq.exact else None
        # chromatic: palette of a verified coloring, matched by a clique of that size
        coloring = level_color(n)
        if scope == "AG":
            coloring = lift_coloring_to_blowup(coloring, H.m)
        check = verify_coloring(H, coloring)
        e = report[f"chromatic[{scope}]"]
        if not check.proper:
            e.note = "coloring not proper"
            e.witness = check.conflict
        elif cq.exact and cq.size == check.palette:
            e.computed = _finite(check.palette)
        else:
            e.note = f"bounds {cq.size}..{check.palette} not tight"
    else:
        for name in ("clique", "chromatic"):
            report[f"{name}[{scope}]"].note = "beyond computation cap"


def _fill_plain_stats(report: ParamReport, n: int, kind: GraphKind) -> None:
    """Computed-only statistics for the reduced zero-divisor or weak graph."""
    H = build_reduced(n, kind)
    scope = kind.value
    report.add(Entry("vertices", scope, NOT_CLAIMED, _finite(H.n_vertices)))
    report.add(Entry("edges", scope, NOT_CLAIMED, _finite(H.edge_count())))
    if n > METRIC_CAP_REDUCED:
        return
    ecc = eccentricities(H)
    for name, value in (("diameter", max(ecc)), ("radius", min(ecc)), ("girth", girth(H))):
        report.add(Entry(name, scope, NOT_CLAIMED, value if math.isinf(value) else _finite(value)))


def _fill_hierarchy(report: ParamReport, n: int, m: int) -> None:
    edge_sets = {
        kind: build_reduced(n, kind).edge_set()
        for kind in (GraphKind.GAMMA, GraphKind.AG, GraphKind.WGAMMA)
    }
    gamma, ag, wg = (edge_sets[k] for k in (GraphKind.GAMMA, GraphKind.AG, GraphKind.WGAMMA))
    e = report["hierarchy[model]"]
    outside = next(iter(gamma - ag), None) or next(iter(ag - wg), None)
    e.computed = outside is None
    e.witness = None if outside is None else tuple(outside)

    # same-class edges only show up with several copies per class
    W = build_blowup(n, GraphKind.WGAMMA, m)
    intra = next(
        ((W.labels[i], W.labels[j]) for i, j in W.edge_positions()
         if W.class_position(i) == W.class_position(j)),
        None,
    )
    e = report["coincide[model]"]
    extra = next(iter(wg - gamma), None)
    if extra is not None:
        e.computed, e.witness = False, tuple(sorted(extra, key=lambda A: A.bits))
    elif intra is not None:
        e.computed, e.witness = False, intra
    else:
        e.computed = True


def format_table(report: ParamReport) -> str:
    rows = [("parameter", "scope", "predicted", "computed", "agrees")]
    for e in report.entries.values():
        rows.append((
            e.name,
            e.scope,
            str(_encode(e.predicted)),
            "-" if e.computed is None else str(_encode(e.computed)),
            {True: "yes", False: "NO", None: "-"}[e.agrees],
        ))
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    for e in report.disagreements:
        lines.append(f"disagreement {e.key}: witness {_encode(e.witness)}")
    return "\n".join(lines)


__all__ = [
    "NOT_CLAIMED",
    "Entry",
    "ParamReport",
    "predicted_report",
    "compare",
    "format_table",
]
