"""Isomorphisms between reduced graphs and between blow-ups.

Restriction takes a blow-up isomorphism to the induced map on classes;
extension goes the other way by pasting bijections between matching classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping

from .build import BlowUpGraph, Graph, ReducedGraph, Vertex, build_blowup, iter_bits, vertex_key
from .errors import ExtensionError, ModelViolation, PreconditionError, SearchBudgetExceeded
from .model import Cardinal, GraphKind, PointSet

ClassMultiplicity = dict  # class bitmask -> Cardinal


@dataclass
class GraphIso:
    """Vertex bijection between two graphs that preserves adjacency both ways.

    Checked exhaustively on construction unless ``validate=False``.
    """

    source: Graph
    target: Graph
    forward: dict
    validate: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        self.inverse = {v: u for u, v in self.forward.items()}
        if self.validate:
            problem = self.defect()
            if problem:
                raise PreconditionError(f"not an isomorphism: {problem}")

    def defect(self) -> str | None:
        src, tgt = self.source, self.target
        if src.n_vertices != tgt.n_vertices:
            return f"vertex counts {src.n_vertices} != {tgt.n_vertices}"
        if set(self.forward) != set(src.labels):
            return "domain is not the source vertex set"
        if len(self.inverse) != len(self.forward) or set(self.inverse) != set(tgt.labels):
            return "map is not a bijection onto the target"
        pos = [tgt.position(self.forward[lab]) for lab in src.labels]
        for i, row in enumerate(src.rows):
            image = 0
            for j in iter_bits(row):
                image |= 1 << pos[j]
            if image != tgt.rows[pos[i]]:
                return f"adjacency differs at {src.labels[i]}"
        return None

    def __call__(self, label):
        return self.forward[label]

    def to_json(self) -> list:
        def enc(label):
            key = vertex_key(label)
            return list(key) if isinstance(key, tuple) else key

        return [[enc(u), enc(v)] for u, v in self.forward.items()]


# -- search ------------------------------------------------------------------


def _refine(rows1: list[int], rows2: list[int], colors: list[int]) -> list[int]:
    """Colour refinement on the disjoint union; colours stay comparable across sides."""
    N = len(rows1)
    while True:
        n_classes = len(set(colors))
        masks1: dict[int, int] = {}
        masks2: dict[int, int] = {}
        for p, c in enumerate(colors):
            if p < N:
                masks1[c] = masks1.get(c, 0) | 1 << p
            else:
                masks2[c] = masks2.get(c, 0) | 1 << (p - N)
        palette = sorted(set(colors))
        sigs = []
        for p, c in enumerate(colors):
            row, masks = (rows1[p], masks1) if p < N else (rows2[p - N], masks2)
            sigs.append((c, tuple((row & masks.get(k, 0)).bit_count() for k in palette)))
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [relabel[s] for s in sigs]
        if len(relabel) == n_classes:
            return colors


def find_isomorphism(G1: Graph, G2: Graph, budget: int = 100_000) -> GraphIso | None:
    """Backtracking isomorphism search with degree-based colour refinement.

    Returns ``None`` when the graphs are not isomorphic. Raises
    :class:`SearchBudgetExceeded` after ``budget`` search nodes.
    """
    N = G1.n_vertices
    if N != G2.n_vertices or G1.edge_count() != G2.edge_count():
        return None
    rows1, rows2 = G1.rows, G2.rows
    if sorted(r.bit_count() for r in rows1) != sorted(r.bit_count() for r in rows2):
        return None
    nodes = 0

    def search(colors: list[int]) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"isomorphism search exceeded {budget} nodes")
        colors = _refine(rows1, rows2, colors)
        left: dict[int, list[int]] = {}
        right: dict[int, list[int]] = {}
        for p, c in enumerate(colors):
            (left if p < N else right).setdefault(c, []).append(p if p < N else p - N)
        for c in left.keys() | right.keys():
            if len(left.get(c, ())) != len(right.get(c, ())):
                return None
        cells = [c for c in sorted(left) if len(left[c]) > 1]
        if not cells:
            mapping = [0] * N
            for c, (p,) in left.items():
                mapping[p] = right[c][0]
            return mapping if _preserves(rows1, rows2, mapping) else None
        cell = min(cells, key=lambda c: (len(left[c]), c))
        v = left[cell][0]
        fresh = max(colors) + 1
        for w in right[cell]:
            trial = colors.copy()
            trial[v] = fresh
            trial[N + w] = fresh
            found = search(trial)
            if found is not None:
                return found
        return None

    result = search([0] * (2 * N))
    if result is None:
        return None
    forward = {G1.labels[p]: G2.labels[q] for p, q in enumerate(result)}
    return GraphIso(G1, G2, forward)


def _preserves(rows1: list[int], rows2: list[int], mapping: list[int]) -> bool:
    for i, row in enumerate(rows1):
        image = 0
        for j in iter_bits(row):
            image |= 1 << mapping[j]
        if image != rows2[mapping[i]]:
            return False
    return True


# -- restriction / extension -------------------------------------------------


def restrict_isomorphism(psi: GraphIso) -> GraphIso:
    """Induced map on classes: ``A -> class of psi(A, 0)``.

    Every copy of ``A`` must land in one class; otherwise :class:`ModelViolation`.
    """
    src, tgt = psi.source, psi.target
    if not isinstance(src, BlowUpGraph) or not isinstance(tgt, BlowUpGraph):
        raise PreconditionError("restriction needs an isomorphism between blow-ups")
    phi = {}
    for A in src.reduced.labels:
        images = {psi.forward[Vertex(A, c)].support for c in range(src.m)}
        if len(images) != 1:
            raise ModelViolation(
                f"copies of {A} map into {len(images)} classes: "
                + ", ".join(sorted(str(B) for B in images))
            )
        phi[A] = images.pop()
    return GraphIso(src.reduced, tgt.reduced, phi)


def uniform_multiplicity(n: int, m: int | Cardinal) -> ClassMultiplicity:
    from .model import vertex_masks

    card = m if isinstance(m, Cardinal) else Cardinal.finite(m)
    return {bits: card for bits in vertex_masks(n)}


def _as_multiplicity(n: int, mult) -> ClassMultiplicity:
    if isinstance(mult, Mapping):
        out = {}
        for key, value in mult.items():
            bits = key.bits if isinstance(key, PointSet) else key
            out[bits] = value if isinstance(value, Cardinal) else Cardinal.finite(value)
        return out
    return uniform_multiplicity(n, mult)


def extend_isomorphism(
    phi: GraphIso,
    source_mult=3,
    target_mult=3,
    seed: int | None = None,
) -> GraphIso:
    """Extend a reduced-graph isomorphism to the annihilator-graph blow-ups.

    Needs ``|[A]| == |[phi(A)]|`` for every class; copy indices are matched by
    identity, or by a seeded random bijection per class when ``seed`` is given.
    """
    src, tgt = phi.source, phi.target
    if not isinstance(src, ReducedGraph) or not isinstance(tgt, ReducedGraph):
        raise PreconditionError("extension needs an isomorphism between reduced graphs")
    ms = _as_multiplicity(src.n, source_mult)
    mt = _as_multiplicity(tgt.n, target_mult)
    for A in src.labels:
        if A.bits not in ms:
            raise PreconditionError(f"no multiplicity given for class {A}")
        B = phi.forward[A]
        if B.bits not in mt:
            raise PreconditionError(f"no multiplicity given for class {B}")
        if ms[A.bits] != mt[B.bits]:
            raise ExtensionError(
                f"class sizes differ: |[{A}]| = {ms[A.bits]} but |[{B}]| = {mt[B.bits]}"
            )
    sizes = set(ms.values())
    if len(sizes) != 1 or not next(iter(sizes)).is_finite:
        raise PreconditionError("only a single finite multiplicity can be materialized")
    m = next(iter(sizes)).value
    big_src = build_blowup(src.n, GraphKind.AG, m)
    big_tgt = build_blowup(tgt.n, GraphKind.AG, m)
    rng = random.Random(seed) if seed is not None else None
    forward = {}
    for A in src.labels:
        B = phi.forward[A]
        copies = list(range(m))
        if rng is not None:
            rng.shuffle(copies)
        for c in range(m):
            forward[Vertex(A, c)] = Vertex(B, copies[c])
    return GraphIso(big_src, big_tgt, forward)


def permute_points(A: PointSet, perm: list[int]) -> PointSet:
    """Image of ``A`` under the point map ``x_{i+1} -> x_{perm[i]+1}``."""
    bits = 0
    for i in iter_bits(A.bits):
        bits |= 1 << perm[i]
    return PointSet(bits, A.n)


def point_permutation_iso(G: ReducedGraph, perm: list[int]) -> GraphIso:
    """Automorphism of a reduced graph induced by permuting the points."""
    if sorted(perm) != list(range(G.n)):
        raise PreconditionError(f"{perm} is not a permutation of range({G.n})")
    return GraphIso(G, G, {A: permute_points(A, perm) for A in G.labels})


def are_equivalent(n1: int, n2: int) -> bool:
    """Reduced graphs, equal-multiplicity blow-ups and the rings are all
    isomorphic exactly when the point counts agree."""
    if n1 < 2 or n2 < 2:
        raise PreconditionError("both models need at least two points")
    return n1 == n2
