"""Adjacency rules for the three graphs and the graphs built from them.

Two graphs are materialized:

* :class:`ReducedGraph` has one vertex per class, i.e. per support ``A``.
* :class:`BlowUpGraph` has ``m`` copies of every class. It stands in for the
  real (infinite) graph, where each class holds continuum-many scalar
  multiples whose adjacency depends only on the class.

Adjacency is stored as one Python ``int`` per vertex, bit ``j`` set when the
vertex at position ``j`` is a neighbour. Rows are computed on first use so
that vertex-level queries stay cheap for large ``n``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, NamedTuple

import numpy as np

from .errors import MultiplicityError, PreconditionError
from .model import GraphKind, PointSet, check_points, complement, vertex_masks

MAX_REDUCED_POINTS = 20
MAX_BLOWUP_POINTS = 14
DEFAULT_MULTIPLICITY = 3

# rows computed per numpy block
_BLOCK = 512


def _distinct(A: PointSet, B: PointSet) -> None:
    if A.n != B.n:
        raise PreconditionError(f"{A} and {B} live on different point sets")
    if A.bits == B.bits:
        raise PreconditionError(f"self-adjacency query for {A}")


def gamma_adjacent(A: PointSet, B: PointSet) -> bool:
    """Zero-divisor graph: ``fg = 0`` exactly when the supports are disjoint."""
    _distinct(A, B)
    return A.bits & B.bits == 0


def ag_adjacent(A: PointSet, B: PointSet) -> bool:
    """Annihilator graph: adjacent iff neither support contains the other."""
    _distinct(A, B)
    meet = A.bits & B.bits
    return meet != A.bits and meet != B.bits


def wgamma_adjacent(A: PointSet, B: PointSet, same_class: bool = False) -> bool:
    """Weakly zero-divisor graph adjacency.

    For distinct classes we need points ``x`` in ``A^c`` and ``y`` in ``B^c``
    with ``x != y`` (then ``C = {x}``, ``D = {y}`` are disjoint annihilator
    supports). That fails only when ``A^c = B^c`` is a single point, i.e.
    never for distinct classes. Two members of one class need two disjoint
    nonempty subsets of ``A^c``, so ``|A^c| >= 2``.
    """
    if A.n != B.n:
        raise PreconditionError(f"{A} and {B} live on different point sets")
    if same_class != (A.bits == B.bits):
        raise PreconditionError("same_class must equal (A == B)")
    ca, cb = complement(A).bits, complement(B).bits
    if same_class:
        return ca.bit_count() >= 2
    return not (ca == cb and ca.bit_count() == 1)


def wgamma_adjacent_bruteforce(A: PointSet, B: PointSet) -> bool:
    """Search nonempty ``C <= A^c``, ``D <= B^c`` with ``C & D == 0``.

    Passing ``A == B`` asks about two distinct members of the same class.
    Exponential; intended for ``n <= 10``.
    """
    ca, cb = complement(A).bits, complement(B).bits
    subs_b = list(_nonempty_submasks(cb))
    return any(c & d == 0 for c in _nonempty_submasks(ca) for d in subs_b)


def annihilator(bits: int, n: int) -> frozenset[int]:
    """Supports of the annihilator of a function with support ``bits`` (0 is the zero function)."""
    return frozenset(s for s in range(1 << n) if s & bits == 0)


def ag_adjacent_by_annihilators(A: PointSet, B: PointSet) -> bool:
    """``ann(f) | ann(g) != ann(fg)``, evaluated on supports; exponential in ``n``."""
    _distinct(A, B)
    n = A.n
    return annihilator(A.bits, n) | annihilator(B.bits, n) != annihilator(A.bits & B.bits, n)


def _nonempty_submasks(mask: int) -> Iterator[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def ann_class_count(A: PointSet) -> int:
    """Number of nonzero annihilator classes of ``A``: ``2^|A^c| - 1``."""
    return (1 << complement(A).size) - 1


def class_predicate(kind: GraphKind):
    return {
        GraphKind.GAMMA: gamma_adjacent,
        GraphKind.AG: ag_adjacent,
        GraphKind.WGAMMA: wgamma_adjacent,
    }[GraphKind(kind)]


def _adjacency_block(kind: GraphKind, n: int, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Boolean class-adjacency block; the diagonal is left to the caller."""
    a = rows[:, None]
    b = cols[None, :]
    if kind is GraphKind.GAMMA:
        return (a & b) == 0
    meet = a & b
    if kind is GraphKind.AG:
        return (meet != a) & (meet != b)
    full = np.uint64((1 << n) - 1)
    ca = a ^ full
    several = (ca & (ca - np.uint64(1))) != 0
    return (a != b) | several


def _pack(block: np.ndarray) -> list[int]:
    packed = np.packbits(block, axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in packed]


class Vertex(NamedTuple):
    """Blow-up vertex: copy ``copy`` of the class with support ``support``."""

    support: PointSet
    copy: int

    def __str__(self) -> str:
        return f"{self.support.label()}#{self.copy}"


class Graph:
    """Simple undirected graph on positions ``0..N-1`` with bitset rows."""

    kind: GraphKind
    n: int

    def __init__(self, labels: list) -> None:
        self.labels = labels
        self.index = {lab: i for i, lab in enumerate(labels)}
        self._rows: list[int] | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def rows(self) -> list[int]:
        if self._rows is None:
            self._rows = self._compute_rows()
        return self._rows

    def _compute_rows(self) -> list[int]:
        raise NotImplementedError

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def position(self, label) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise PreconditionError(f"{label} is not a vertex of this graph") from None

    def has_edge(self, u, v) -> bool:
        i, j = self.position(u), self.position(v)
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, u) -> list:
        row = self.rows[self.position(u)]
        return [self.labels[j] for j in iter_bits(row)]

    def degree(self, u) -> int:
        return self.rows[self.position(u)].bit_count()

    def edge_positions(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.rows):
            for j in iter_bits(row >> (i + 1)):
                yield i, i + 1 + j

    def edges(self) -> Iterator[tuple]:
        for i, j in self.edge_positions():
            yield self.labels[i], self.labels[j]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edge_set(self) -> frozenset[frozenset]:
        return frozenset(frozenset(e) for e in self.edges())


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class ReducedGraph(Graph):
    """One vertex per class: the induced subgraph G on class representatives."""

    def __init__(self, n: int, kind: GraphKind) -> None:
        self.n = n
        self.kind = GraphKind(kind)
        self.masks = vertex_masks(n)
        super().__init__([PointSet(m, n) for m in self.masks])

    def _compute_rows(self) -> list[int]:
        masks = np.asarray(self.masks, dtype=np.uint64)
        size = len(masks)
        rows: list[int] = []
        for lo in range(0, size, _BLOCK):
            hi = min(lo + _BLOCK, size)
            block = _adjacency_block(self.kind, self.n, masks[lo:hi], masks)
            block[np.arange(hi - lo), np.arange(lo, hi)] = False
            rows.extend(_pack(block))
        return rows

    def __repr__(self) -> str:
        return f"ReducedGraph(n={self.n}, kind={self.kind.value})"


class BlowUpGraph(Graph):
    """``m`` copies of every class; adjacency decided by the class pair."""

    def __init__(self, n: int, kind: GraphKind, m: int) -> None:
        self.n = n
        self.kind = GraphKind(kind)
        self.m = m
        self.reduced = ReducedGraph(n, kind)
        super().__init__(
            [Vertex(A, c) for A in self.reduced.labels for c in range(m)]
        )

    def class_position(self, position: int) -> int:
        return position // self.m

    def _compute_rows(self) -> list[int]:
        m = self.m
        n_classes = len(self.reduced.masks)
        rows: list[int] = []
        copy_block = (1 << m) - 1
        for i, (A, base) in enumerate(zip(self.reduced.labels, self.reduced.rows)):
            lifted = 0
            for j in iter_bits(base):
                lifted |= copy_block << (j * m)
            intra = 0
            if self.kind is GraphKind.WGAMMA and wgamma_adjacent(A, A, same_class=True):
                intra = copy_block << (i * m)
            for c in range(m):
                rows.append(lifted | (intra & ~(1 << (i * m + c))))
        assert len(rows) == n_classes * m
        return rows

    def __repr__(self) -> str:
        return f"BlowUpGraph(n={self.n}, kind={self.kind.value}, m={self.m})"


def build_reduced(n: int, kind: GraphKind) -> ReducedGraph:
    check_points(n, 2, MAX_REDUCED_POINTS)
    return ReducedGraph(n, kind)


def build_blowup(n: int, kind: GraphKind, m: int = DEFAULT_MULTIPLICITY) -> BlowUpGraph:
    check_points(n, 2, MAX_BLOWUP_POINTS)
    if not isinstance(m, int) or m < 2:
        raise MultiplicityError(
            f"multiplicity m={m!r}: need m >= 2 so each class has a distinct scalar multiple"
        )
    return BlowUpGraph(n, kind, m)


def edges_by_predicate(n: int, kind: GraphKind) -> set[frozenset[int]]:
    """Edge set from pairwise predicate calls, as bitmask pairs."""
    pred = class_predicate(kind)
    verts = [PointSet(x, n) for x in vertex_masks(n)]
    return {
        frozenset((A.bits, B.bits)) for A, B in combinations(verts, 2) if pred(A, B)
    }


class LabeledGraph(Graph):
    """Graph given by an explicit edge list (used for parsed exports and tests)."""

    def __init__(self, labels: list, edges, kind: GraphKind | None = None, n: int | None = None) -> None:
        super().__init__(list(labels))
        self.kind = kind
        self.n = n
        rows = [0] * len(self.labels)
        for u, v in edges:
            i, j = self.position(u), self.position(v)
            if i == j:
                raise PreconditionError(f"self-loop at {u}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self._rows = rows


def vertex_key(label):
    """JSON-friendly key: the bitmask, or ``(bitmask, copy)`` for blow-ups."""
    if isinstance(label, Vertex):
        return (label.support.bits, label.copy)
    if isinstance(label, PointSet):
        return label.bits
    return label
