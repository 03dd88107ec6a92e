import json

import pytest

from cpgraph.build import build_blowup, build_reduced
from cpgraph.coloring import level_color
from cpgraph.export import dumps_graph, fill_color, graph_from_json, sorted_edges, to_dot


def test_dot_three_points():
    dot = to_dot(build_reduced(3, "ag"))
    assert dot.count("label=") == 6
    assert dot.count(" -- ") == 9
    assert 'label="1_{x1,x3}"' in dot


def test_edges_lower_key_first():
    for u, v in sorted_edges(build_reduced(4, "ag")):
        assert u.bits < v.bits


def test_json_two_points():
    data = json.loads(dumps_graph(build_reduced(2, "ag")))
    assert data["vertices"] == [1, 2]
    assert data["edges"] == [[1, 2]]


def test_dot_fill_colors_five_points():
    dot = to_dot(build_reduced(5, "ag"), level_color(5))
    fills = {line.split('fillcolor="')[1].split('"')[0] for line in dot.splitlines() if "fillcolor" in line}
    assert len(fills) == 10


def test_generated_fill_colors_distinct():
    assert len({fill_color(i) for i in range(924)}) == 924


@pytest.mark.parametrize("kind", ["gamma", "ag", "wgamma"])
def test_export_is_byte_stable(kind):
    assert dumps_graph(build_reduced(4, kind)) == dumps_graph(build_reduced(4, kind))
    assert to_dot(build_blowup(3, kind, 2)) == to_dot(build_blowup(3, kind, 2))


@pytest.mark.parametrize("kind", ["gamma", "ag", "wgamma"])
@pytest.mark.parametrize("blowup", [False, True])
def test_json_roundtrip(kind, blowup):
    G = build_blowup(3, kind, 2) if blowup else build_reduced(4, kind)
    H = graph_from_json(dumps_graph(G))
    assert set(H.labels) == set(G.labels)
    assert H.edge_set() == G.edge_set()
    assert dumps_graph(H) == dumps_graph(G)
