from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cpgraph.build import LabeledGraph, Vertex, build_blowup, build_reduced
from cpgraph.errors import PreconditionError
from cpgraph.metrics import (
    INF,
    center,
    clique_number_exact,
    common_neighbor_exists,
    cycle_through_pair,
    diameter,
    distance,
    dominates,
    dominating_number,
    eccentricity,
    girth,
    is_complemented,
    is_hypertriangulated,
    is_orthogonal,
    is_triangulated,
    is_uniquely_complemented,
    middle_layer_clique,
    orthogonal_partners,
    predicted_common_neighbor,
    predicted_degree,
    predicted_orthogonal,
    predicted_pair_cycle,
    radius,
)
from cpgraph.model import PointSet

from oracles import brute_min_dominating, smallest_cycle_through_pairs, to_nx


def P(n, *pts):
    return PointSet.of(n, *pts)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("kind", ["gamma", "ag", "wgamma"])
def test_distance_parameters_against_networkx(n, kind):
    G = build_reduced(n, kind)
    H = to_nx(G)
    assert diameter(G) == nx.diameter(H)
    assert radius(G) == nx.radius(H)
    assert girth(G) == nx.girth(H)
    ecc = nx.eccentricity(H)
    assert [eccentricity(G, lab) for lab in G.labels] == [ecc[i] for i in range(G.n_vertices)]


def test_girth_without_triangles():
    # 5-cycle and a path
    C5 = LabeledGraph(range(5), [(i, (i + 1) % 5) for i in range(5)])
    assert girth(C5) == 5
    path = LabeledGraph(range(4), [(0, 1), (1, 2), (2, 3)])
    assert girth(path) == INF
    assert girth(build_blowup(2, "ag", 2)) == 4


def test_distance_edge_cases():
    G = build_reduced(3, "ag")
    assert distance(G, P(3, 1), P(3, 1, 2)) == 2
    assert distance(G, P(3, 1), P(3, 2)) == 1
    with pytest.raises(PreconditionError):
        distance(G, P(3, 1), P(3, 1))
    disconnected = LabeledGraph([0, 1, 2], [(0, 1)])
    assert distance(disconnected, 0, 2) == INF
    assert diameter(disconnected) == INF


def test_center_of_reduced_ag_is_everything():
    G = build_reduced(4, "ag")
    assert set(center(G)) == set(G.labels)


@pytest.mark.parametrize("n", [3, 4])
def test_pair_cycle_against_cycle_enumeration(n):
    B = build_blowup(n, "ag", 2)
    best = smallest_cycle_through_pairs(to_nx(B), 4)
    for i, j in combinations(range(B.n_vertices), 2):
        u, v = B.labels[i], B.labels[j]
        got = cycle_through_pair(B, u, v)
        assert got.length == best.get(frozenset((i, j))), (u, v)
        assert got.length == predicted_pair_cycle(u.support, v.support)
        if got.found:
            assert u in got.witness and v in got.witness


def test_pair_cycle_none_for_two_points():
    G = build_reduced(2, "ag")
    assert not cycle_through_pair(G, P(2, 1), P(2, 2)).found


def test_pair_cycle_witness_is_a_cycle():
    B = build_blowup(4, "ag", 2)
    u, v = Vertex(P(4, 1), 0), Vertex(P(4, 1, 2), 0)
    res = cycle_through_pair(B, u, v)
    assert res.length == 4
    cyc = res.witness
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert B.has_edge(a, b)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_orthogonality_and_common_neighbours(n):
    B = build_blowup(n, "ag", 2)
    for u, v in combinations(B.labels, 2):
        assert is_orthogonal(B, u, v) == predicted_orthogonal(u.support, v.support)
        assert common_neighbor_exists(B, u, v) == predicted_common_neighbor(u.support, v.support)


def test_orthogonal_partners_n3():
    G = build_reduced(3, "ag")
    assert orthogonal_partners(G, P(3, 1)) == [P(3, 2, 3)]


@pytest.mark.parametrize("n", range(3, 8))
def test_complementedness(n):
    G = build_reduced(n, "ag")
    assert is_uniquely_complemented(G) == (n == 3)
    assert is_complemented(G) == (n == 3)


@pytest.mark.parametrize("n", range(3, 8))
def test_triangulation(n):
    G = build_reduced(n, "ag")
    assert is_triangulated(G)
    assert not is_hypertriangulated(G)


@pytest.mark.parametrize("n", [3, 4])
def test_domination_against_bruteforce(n):
    for G in (build_reduced(n, "ag"), build_blowup(n, "ag", 2)):
        H = to_nx(G)
        for total in (False, True):
            res = dominating_number(G, total=total)
            assert res.size == brute_min_dominating(H, total=total)
            assert dominates(G, res.witness, total=total)


def test_complement_pair_dominates():
    for n in (3, 5, 7):
        G = build_reduced(n, "ag")
        A = P(n, 1)
        assert dominates(G, [A, A.complement()], total=True)


def test_domination_cap():
    G = build_reduced(3, "ag")
    assert dominating_number(G, cap=1).exceeds_cap
    with pytest.raises(PreconditionError):
        dominating_number(G, cap=0)


@given(st.integers(3, 10), st.data())
@settings(max_examples=40, deadline=None)
def test_degree_formula(n, data):
    G = build_reduced(n, "ag")
    A = data.draw(st.sampled_from(G.labels))
    assert G.degree(A) == predicted_degree(A)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_clique_against_networkx(n):
    G = build_reduced(n, "ag")
    res = clique_number_exact(G)
    assert res.exact
    assert res.size == max(len(c) for c in nx.find_cliques(to_nx(G))) == comb(n, n // 2)
    for a, b in combinations(res.witness, 2):
        assert G.has_edge(a, b)


def test_clique_budget_flags_inexact():
    res = clique_number_exact(build_reduced(7, "ag"), budget=1)
    assert not res.exact


def test_middle_layer_is_a_clique():
    G = build_reduced(6, "ag")
    layer = middle_layer_clique(6)
    assert len(layer) == 20
    assert all(G.has_edge(a, b) for a, b in combinations(layer, 2))
