import json

import pytest

from cpgraph.model import ALEPH0, FiniteIsolated, GraphKind, InfiniteIsolated
from cpgraph.predict import NOT_CLAIMED, compare, format_table, predicted_report


def test_finite_predictions():
    r = predicted_report(FiniteIsolated(5))
    assert r["chromatic[G]"].predicted == 10
    assert r["clique[AG]"].predicted == 10
    assert r["vertices[G]"].predicted == 30
    assert r["uniquely_complemented[G]"].predicted is False
    assert predicted_report(FiniteIsolated(3))["uniquely_complemented[AG]"].predicted is True


def test_two_points_only_claims_coincidence():
    r = predicted_report(FiniteIsolated(2))
    assert r["coincide[model]"].predicted is True
    assert r["diameter[G]"].predicted is NOT_CLAIMED
    assert r["dt[AG]"].predicted is NOT_CLAIMED


def test_infinite_predictions():
    r = predicted_report(InfiniteIsolated())
    assert r["dt[AG]"].predicted == ALEPH0
    assert r["dt_total[AG]"].predicted == ALEPH0
    assert r["chromatic[G]"].predicted == ALEPH0
    assert r["clique[AG]"].predicted == ALEPH0
    assert r["hypertriangulated[AG]"].predicted is True
    assert r["coincide[model]"].predicted is False
    assert r["uniquely_complemented[AG]"].predicted is NOT_CLAIMED


def test_compare_infinite_never_computes():
    r = compare(InfiniteIsolated())
    assert all(e.computed is None for e in r.entries.values())
    assert r.all_agree


@pytest.mark.parametrize("n", range(3, 9))
def test_compare_all_agree(n):
    r = compare(FiniteIsolated(n), (GraphKind.AG,), 2)
    assert r.all_agree, [e.key for e in r.disagreements]
    claimed = [e for e in r.entries.values() if e.claimed]
    assert all(e.agrees for e in claimed if e.computed is not None)


def test_compare_three_kinds_with_witness():
    r = compare(FiniteIsolated(3), list(GraphKind), 3)
    assert r.all_agree
    e = r["coincide[model]"]
    assert e.computed is False and e.witness is not None
    A, B = e.witness
    assert A.bits & B.bits != 0  # in the weak graph, not in the zero-divisor graph


def test_compare_four_points_every_entry_agrees():
    r = compare(FiniteIsolated(4), (GraphKind.AG,), 2)
    assert all(e.agrees for e in r.entries.values())


def test_report_json_and_table():
    r = compare(FiniteIsolated(4))
    data = json.loads(json.dumps(r.to_json()))
    assert data["all_agree"] is True
    assert {"name": "chromatic", "scope": "G"}.items() <= data["entries"][12].items()
    table = format_table(r)
    assert "chromatic" in table and "NO" not in table


def test_large_n_skips_heavy_entries():
    r = compare(FiniteIsolated(16))
    assert r["vertices[G]"].agrees is True
    assert r["diameter[G]"].computed is None
