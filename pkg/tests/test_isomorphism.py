import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cpgraph.build import LabeledGraph, Vertex, build_blowup, build_reduced
from cpgraph.errors import ExtensionError, ModelViolation, PreconditionError, SearchBudgetExceeded
from cpgraph.isomorphism import (
    GraphIso,
    are_equivalent,
    extend_isomorphism,
    find_isomorphism,
    permute_points,
    point_permutation_iso,
    restrict_isomorphism,
    uniform_multiplicity,
)
from cpgraph.model import ALEPH0, Cardinal, PointSet

from oracles import to_nx


def shuffled_rebuild(G, perm, rng):
    labels = [permute_points(A, perm) for A in G.labels]
    rng.shuffle(labels)
    edges = [(permute_points(a, perm), permute_points(b, perm)) for a, b in G.edges()]
    return LabeledGraph(labels, edges)


def test_identity_found():
    G = build_reduced(3, "ag")
    iso = find_isomorphism(G, G)
    assert iso is not None
    assert set(iso.forward) == set(G.labels)


def test_different_sizes_not_isomorphic():
    assert find_isomorphism(build_reduced(3, "ag"), build_reduced(4, "ag")) is None


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("n", [3, 4, 5])
def test_point_permuted_rebuild(n, seed):
    rng = random.Random(seed)
    G = build_reduced(n, "ag")
    perm = list(range(n))
    rng.shuffle(perm)
    H = shuffled_rebuild(G, perm, rng)
    assert nx.is_isomorphic(to_nx(G), to_nx(H))
    assert find_isomorphism(G, H) is not None


@pytest.mark.parametrize("n1,n2", [(3, 4), (4, 5), (2, 3)])
def test_agrees_with_networkx_on_non_isomorphic(n1, n2):
    G, H = build_reduced(n1, "ag"), build_reduced(n2, "ag")
    assert nx.is_isomorphic(to_nx(G), to_nx(H)) is False
    assert find_isomorphism(G, H) is None


def test_same_size_non_isomorphic():
    # same vertex and edge counts, different structure
    C6 = LabeledGraph(range(6), [(i, (i + 1) % 6) for i in range(6)])
    two_triangles = LabeledGraph(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert find_isomorphism(C6, two_triangles) is None


def test_budget_exceeded():
    G = build_blowup(4, "ag", 3)
    with pytest.raises(SearchBudgetExceeded):
        find_isomorphism(G, G, budget=1)


def test_graphiso_validates():
    G = build_reduced(3, "ag")
    swap = {A: A for A in G.labels}
    a, b = PointSet.of(3, 1), PointSet.of(3, 1, 2)
    swap[a], swap[b] = b, a
    with pytest.raises(PreconditionError):
        GraphIso(G, G, swap)
    iso = GraphIso(G, G, {A: A for A in G.labels})
    assert iso.inverse == iso.forward


def test_graphiso_json():
    G = build_reduced(3, "ag")
    iso = point_permutation_iso(G, [1, 2, 0])
    data = json.loads(json.dumps(iso.to_json()))
    assert [PointSet.of(3, 1).bits, PointSet.of(3, 2).bits] in data
    B = build_blowup(3, "ag", 2)
    lifted = extend_isomorphism(iso, 2, 2)
    assert [[1, 0], [2, 0]] in json.loads(json.dumps(lifted.to_json()))
    assert lifted.source.n_vertices == B.n_vertices


def test_restrict_class_permutation_lift():
    G = build_reduced(4, "ag")
    phi = point_permutation_iso(G, [2, 0, 3, 1])
    psi = extend_isomorphism(phi, 3, 3)
    assert restrict_isomorphism(psi).forward == phi.forward


def test_restrict_with_copy_shuffles():
    G = build_reduced(3, "ag")
    phi = point_permutation_iso(G, [1, 0, 2])
    psi = extend_isomorphism(phi, 3, 3, seed=11)
    assert any(u.copy != v.copy for u, v in psi.forward.items())
    assert restrict_isomorphism(psi).forward == phi.forward


def test_restrict_rejects_scattered_copies():
    B = build_blowup(3, "ag", 2)
    fwd = {v: v for v in B.labels}
    a, b = Vertex(PointSet.of(3, 1), 1), Vertex(PointSet.of(3, 2), 1)
    fwd[a], fwd[b] = b, a
    psi = GraphIso(B, B, fwd, validate=False)
    with pytest.raises(ModelViolation):
        restrict_isomorphism(psi)


def test_extend_identity():
    G = build_reduced(3, "ag")
    psi = extend_isomorphism(GraphIso(G, G, {A: A for A in G.labels}), 3, 3)
    assert all(u == v for u, v in psi.forward.items())


def test_extend_multiplicity_mismatch():
    G = build_reduced(3, "ag")
    phi = GraphIso(G, G, {A: A for A in G.labels})
    with pytest.raises(ExtensionError):
        extend_isomorphism(phi, 2, 3)
    src = uniform_multiplicity(3, 2)
    tgt = dict(src)
    tgt[PointSet.of(3, 1).bits] = ALEPH0
    with pytest.raises(ExtensionError):
        extend_isomorphism(phi, src, tgt)


def test_extend_accepts_class_maps():
    G = build_reduced(3, "ag")
    phi = point_permutation_iso(G, [2, 1, 0])
    mult = {A: Cardinal.finite(2) for A in G.labels}
    psi = extend_isomorphism(phi, mult, mult)
    assert psi.source.m == 2


@given(st.integers(2, 5), st.integers(2, 3), st.randoms(use_true_random=False), st.integers(0, 2**16))
@settings(max_examples=40, deadline=None)
def test_extend_restrict_roundtrip(n, m, rnd, seed):
    G = build_reduced(n, "ag")
    perm = list(range(n))
    rnd.shuffle(perm)
    phi = point_permutation_iso(G, perm)
    assert restrict_isomorphism(extend_isomorphism(phi, m, m, seed=seed)).forward == phi.forward


@pytest.mark.parametrize("n,m", [(3, 2), (3, 3), (4, 2)])
def test_found_blowup_iso_restricts(n, m):
    B = build_blowup(n, "ag", m)
    psi = find_isomorphism(B, B)
    phi = restrict_isomorphism(psi)
    assert phi.source.n_vertices == 2**n - 2


def test_are_equivalent():
    assert are_equivalent(4, 4)
    assert not are_equivalent(3, 4)
    assert are_equivalent(5, 5)
    assert find_isomorphism(build_reduced(5, "ag"), build_reduced(5, "ag")) is not None
    with pytest.raises(PreconditionError):
        are_equivalent(1, 3)


def test_point_permutation_rejects_non_permutation():
    with pytest.raises(PreconditionError):
        point_permutation_iso(build_reduced(3, "ag"), [0, 0, 1])
