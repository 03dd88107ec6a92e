"""Level-by-level coloring of the reduced annihilator graph.

The middle level ``floor(n/2)`` is a clique, so it receives one fresh color
per set. Lower levels borrow colors from the level above (add one point,
smallest index first) and higher levels from the level below (remove one
point, largest position first). Within a level every source set lends its
color at most once. Same-colored sets therefore form chains under inclusion,
which makes the coloring proper.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .build import Graph, build_reduced, vertex_key
from .errors import ColoringFailure, CoverageError, ModelViolation
from .metrics import clique_number_exact, middle_layer_clique
from .model import GraphKind, PointSet, check_points, level

MAX_COLOR_POINTS = 16


@dataclass(frozen=True)
class Coloring:
    """Vertex key -> color index. Keys are bitmasks, or ``(bitmask, copy)``."""

    assignment: dict
    n: int | None = None
    source: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def palette(self) -> int:
        return len(set(self.assignment.values()))

    def color_of(self, label) -> int:
        return self.assignment[vertex_key(label)]

    def classes(self) -> dict[int, list]:
        out: dict[int, list] = {}
        for key, c in self.assignment.items():
            out.setdefault(c, []).append(key)
        return out

    def to_json(self) -> dict:
        def enc(key):
            return list(key) if isinstance(key, tuple) else key

        return {
            "n": self.n,
            "palette": self.palette,
            "assignment": [[enc(k), c] for k, c in self.assignment.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> Coloring:
        def dec(key):
            return tuple(key) if isinstance(key, list) else key

        return cls({dec(k): c for k, c in data["assignment"]}, data.get("n"))


@dataclass(frozen=True)
class LevelSchedule:
    n: int

    @property
    def base(self) -> int:
        return self.n // 2

    @property
    def downward(self) -> list[int]:
        return list(range(self.base - 1, 0, -1))

    @property
    def upward(self) -> list[int]:
        return list(range(self.base + 1, self.n))

    def level(self, k: int) -> list[int]:
        return level(self.n, k)


def _positions(bits: int) -> list[int]:
    return [i for i in range(bits.bit_length()) if bits >> i & 1]


def level_color(n: int) -> Coloring:
    """Two-phase greedy coloring of the reduced annihilator graph on ``n`` points.

    Raises :class:`ColoringFailure` if some set finds no unused source.
    """
    check_points(n, 2, MAX_COLOR_POINTS)
    sched = LevelSchedule(n)
    color: dict[int, int] = {}
    source: dict[int, int] = {}
    for i, A in enumerate(sched.level(sched.base)):
        color[A] = i

    for k in sched.downward:
        used: set[int] = set()
        for A in sched.level(k):
            candidates = [A | 1 << j for j in range(n) if not A >> j & 1]
            for S in candidates:
                if S not in used:
                    break
            else:
                raise ColoringFailure(k, PointSet(A, n), [PointSet(S, n) for S in candidates])
            used.add(S)
            color[A] = color[S]
            source[A] = S

    for k in sched.upward:
        used = set()
        for A in sched.level(k):
            # deleting the j-th smallest point, j from k down to 1
            candidates = [A & ~(1 << p) for p in reversed(_positions(A))]
            for S in candidates:
                if S not in used:
                    break
            else:
                raise ColoringFailure(k, PointSet(A, n), [PointSet(S, n) for S in candidates])
            used.add(S)
            color[A] = color[S]
            source[A] = S

    ordered = {A: color[A] for k in range(1, n) for A in sched.level(k)}
    return Coloring(ordered, n, source)


# interface alias
paper_color = level_color


def chain_coloring(n: int) -> Coloring:
    """Baseline: one color per chain of the bracket-matching symmetric chain
    decomposition (points in a set read as ``)``, others as ``(``)."""
    check_points(n, 2, MAX_COLOR_POINTS)
    chain_ids: dict[tuple, int] = {}
    color: dict[int, int] = {}
    for A in level(n, n // 2):
        chain_ids[_matched_pairs(A, n)] = len(chain_ids)
    for k in range(1, n):
        for A in level(n, k):
            color[A] = chain_ids[_matched_pairs(A, n)]
    return Coloring(color, n)


def _matched_pairs(A: int, n: int) -> tuple:
    stack: list[int] = []
    matched = []
    for i in range(n):
        if A >> i & 1:
            if stack:
                matched.append((stack.pop(), i))
        else:
            stack.append(i)
    return tuple(sorted(matched))


class ColoringCheck(NamedTuple):
    proper: bool
    palette: int
    conflict: tuple | None = None

    def __bool__(self) -> bool:
        return self.proper


def verify_coloring(G: Graph, c: Coloring) -> ColoringCheck:
    """Check that ``c`` covers exactly ``V(G)`` and gives adjacent vertices distinct colors."""
    keys = [vertex_key(lab) for lab in G.labels]
    if set(keys) != set(c.assignment):
        missing = set(keys) - set(c.assignment)
        extra = set(c.assignment) - set(keys)
        raise CoverageError(f"coloring misses {len(missing)} vertices, has {len(extra)} extra")
    classes: dict[int, int] = {}
    for pos, key in enumerate(keys):
        classes[c.assignment[key]] = classes.get(c.assignment[key], 0) | 1 << pos
    rows = G.rows
    for pos, key in enumerate(keys):
        clash = rows[pos] & classes[c.assignment[key]]
        if clash:
            other = (clash & -clash).bit_length() - 1
            return ColoringCheck(False, c.palette, (G.labels[pos], G.labels[other]))
    return ColoringCheck(True, c.palette)


class ChromaticCertificate(NamedTuple):
    lower: int
    upper: int

    @property
    def conclusive(self) -> bool:
        return self.lower == self.upper


def chromatic_certificate(n: int) -> ChromaticCertificate:
    """Middle-level clique size against the palette of :func:`level_color`.

    The middle level is checked to be a clique in the built graph before its
    size is used as the lower bound, and the coloring is checked for properness
    before its palette is used as the upper bound.
    """
    G = build_reduced(n, GraphKind.AG)
    layer = middle_layer_clique(n)
    mask = 0
    for A in layer:
        mask |= 1 << G.position(A)
    for A in layer:
        i = G.position(A)
        if G.rows[i] & mask != mask & ~(1 << i):
            raise ModelViolation(f"middle level is not a clique at {A}")
    coloring = level_color(n)
    if not verify_coloring(G, coloring).proper:
        raise ModelViolation(f"level coloring for n={n} is not proper")
    return ChromaticCertificate(len(layer), coloring.palette)


def lift_coloring_to_blowup(c: Coloring, m: int) -> Coloring:
    """Give every copy of a class the color of its representative."""
    lifted = {(key, i): col for key, col in c.assignment.items() for i in range(m)}
    return Coloring(lifted, c.n)


def exact_chromatic_small(G: Graph, max_colors: int) -> int | None:
    """Least ``k <= max_colors`` with a proper k-coloring, else ``None``.

    Backtracking with a maximum clique pre-colored, then most-saturated-first.
    """
    N = G.n_vertices
    if N == 0:
        return 0
    rows = G.rows
    clique = [G.position(v) for v in clique_number_exact(G).witness]
    for k in range(max(1, len(clique)), max_colors + 1):
        if _colorable(rows, N, k, clique):
            return k
    return None


def _colorable(rows: list[int], N: int, k: int, clique: list[int]) -> bool:
    colors = [-1] * N
    for c, v in enumerate(clique):
        colors[v] = c

    def forbidden(v: int) -> set[int]:
        x = rows[v]
        out = set()
        while x:
            low = x & -x
            j = low.bit_length() - 1
            if colors[j] >= 0:
                out.add(colors[j])
            x ^= low
        return out

    def pick() -> int:
        best, best_key = -1, None
        for v in range(N):
            if colors[v] < 0:
                key = (len(forbidden(v)), rows[v].bit_count())
                if best_key is None or key > best_key:
                    best, best_key = v, key
        return best

    def solve() -> bool:
        v = pick()
        if v < 0:
            return True
        used = forbidden(v)
        # a brand-new color is tried once: higher unused colors are symmetric
        fresh_seen = False
        in_use = set(colors) - {-1}
        for c in range(k):
            if c in used:
                continue
            if c not in in_use:
                if fresh_seen:
                    continue
                fresh_seen = True
            colors[v] = c
            if solve():
                return True
            colors[v] = -1
        return False

    return solve()


def _mask(key) -> int:
    return key[0] if isinstance(key, tuple) else key


def is_chain_coloring(c: Coloring) -> bool:
    """Same-colored sets are pairwise comparable under inclusion."""
    for members in c.classes().values():
        masks = sorted((_mask(k) for k in members), key=int.bit_count)
        for a, b in zip(masks, masks[1:]):
            if a & b != a:
                return False
    return True
