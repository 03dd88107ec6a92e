"""DOT and JSON exports. Output depends only on the inputs, byte for byte."""

from __future__ import annotations

import json

from .build import BlowUpGraph, Graph, LabeledGraph, Vertex, vertex_key
from .coloring import Coloring
from .errors import PreconditionError
from .model import GraphKind, PointSet

# first ten fills follow the usual small-palette names; later ones are generated
NAMED_FILLS = (
    "black", "blue", "yellow", "green", "red",
    "brown", "orange", "pink", "gray", "lime",
)
_DARK = {"black", "blue", "brown", "red"}


def fill_color(index: int) -> str:
    if index < len(NAMED_FILLS):
        return NAMED_FILLS[index]
    # odd multiplier: a bijection on 24-bit values, so fills never repeat
    return "#{:06x}".format((index * 0x9E3779) % (1 << 24))


def _node_id(label) -> str:
    key = vertex_key(label)
    return f"v{key[0]}_{key[1]}" if isinstance(key, tuple) else f"v{key}"


def _node_label(label) -> str:
    if isinstance(label, Vertex):
        return f"{label.support.label()}#{label.copy}"
    return label.label()


def _sort_key(label):
    key = vertex_key(label)
    return key if isinstance(key, tuple) else (key, 0)


def sorted_edges(G: Graph) -> list[tuple]:
    """Each edge once, lower key first, in increasing key order."""
    out = []
    for u, v in G.edges():
        if _sort_key(v) < _sort_key(u):
            u, v = v, u
        out.append((u, v))
    out.sort(key=lambda e: (_sort_key(e[0]), _sort_key(e[1])))
    return out


def to_dot(G: Graph, coloring: Coloring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [shape=box, fontname=Helvetica];"]
    for label in sorted(G.labels, key=_sort_key):
        attrs = [f'label="{_node_label(label)}"']
        if coloring is not None:
            key = vertex_key(label)
            if key not in coloring.assignment:
                raise PreconditionError(f"coloring has no entry for {label}")
            fill = fill_color(coloring.assignment[key])
            attrs.append(f'style=filled, fillcolor="{fill}"')
            if fill in _DARK:
                attrs.append("fontcolor=white")
        lines.append(f"  {_node_id(label)} [{', '.join(attrs)}];")
    for u, v in sorted_edges(G):
        lines.append(f"  {_node_id(u)} -- {_node_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _enc(label):
    key = vertex_key(label)
    return list(key) if isinstance(key, tuple) else key


def graph_to_json(G: Graph, meta: dict | None = None) -> dict:
    meta = {**getattr(G, "meta", {}), **(meta or {})}
    if isinstance(G, BlowUpGraph):
        meta.setdefault("m", G.m)
    return {
        "n": G.n,
        "kind": GraphKind(G.kind).value if G.kind is not None else None,
        "vertices": [_enc(v) for v in sorted(G.labels, key=_sort_key)],
        "edges": [[_enc(u), _enc(v)] for u, v in sorted_edges(G)],
        "meta": meta,
    }


def dumps_graph(G: Graph, meta: dict | None = None) -> str:
    return json.dumps(graph_to_json(G, meta), separators=(",", ":")) + "\n"


def graph_from_json(data: dict | str) -> LabeledGraph:
    """Rebuild a graph from :func:`graph_to_json` output."""
    if isinstance(data, str):
        data = json.loads(data)
    n = data["n"]

    def dec(key):
        if isinstance(key, list):
            return Vertex(PointSet(key[0], n), key[1])
        return PointSet(key, n)

    labels = [dec(k) for k in data["vertices"]]
    edges = [(dec(u), dec(v)) for u, v in data["edges"]]
    kind = GraphKind(data["kind"]) if data.get("kind") else None
    G = LabeledGraph(labels, edges, kind=kind, n=n)
    G.meta = dict(data.get("meta", {}))
    return G
