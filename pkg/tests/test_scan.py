import csv
import io
import json

import pytest

from bracekit.errors import Graph6Error, GraphError
from bracekit.fixtures import fixture
from bracekit.graph import graph6_decode, graph6_encode
from bracekit.isomorphism import are_isomorphic
from bracekit.scan import (
    Budgets,
    emit_report,
    evaluate,
    load_report,
    parse_predicates,
    predicate,
    scan_corpus,
)

from conftest import DATA


def _lines(*names):
    return [graph6_encode(fixture(n)) + "\n" for n in names]


def test_empty_stream():
    report = scan_corpus([], ["cubic"], ["2fh"])
    doc = json.loads(emit_report(report))
    assert doc["records"] == []
    assert doc["aggregate"]["graphs"] == 0
    assert doc["aggregate"]["counts"] == {n: {"true": 0, "false": 0, "inconclusive": 0} for n in ("cubic", "2fh")}


def test_filters_short_circuit():
    report = scan_corpus(_lines("Prism", "K33"), ["bipartite", "cubic"], ["2fh"])
    prism, k33 = report.records
    assert prism.properties == {"bipartite": False}
    assert not prism.passed_filters
    assert k33.properties == {"bipartite": True, "cubic": True, "2fh": True}
    assert [r.index for r in report.survivors] == [1]


def test_aggregate_matches_records():
    report = scan_corpus(_lines("K33", "Cube", "Prism", "Heawood", "C4"), ["bipartite"], ["2fh", "pfaffian"])
    agg = report.aggregate()
    for name, tally in agg["counts"].items():
        values = [r.properties[name] for r in report.records if name in r.properties]
        assert tally == {
            "true": values.count(True),
            "false": values.count(False),
            "inconclusive": values.count(None),
        }
    assert agg["survivors"] == [3, 4]  # Heawood and C4


def test_witnesses_are_recorded():
    report = scan_corpus(_lines("Cube", "Heawood"), [], ["2fh", "pfaffian"])
    cube, heawood = report.records
    assert "2fh" in cube.witnesses  # a disconnected 2-factor
    assert "pfaffian" in heawood.witnesses


def test_budget_exhaustion_is_data():
    report = scan_corpus(_lines("Heawood", "K33"), [], ["2fh"], Budgets(matchings=6))
    heawood, k33 = report.records
    assert heawood.properties["2fh"] is None and heawood.budget_flags
    assert k33.properties["2fh"] is True
    assert report.inconclusive
    assert report.aggregate()["budget_exceeded"] == 1


def test_parse_error_names_the_line():
    with pytest.raises(Graph6Error, match="line 2"):
        scan_corpus(["Bw\n", "Bx!\n"], [], [])


def test_predicates():
    assert parse_predicates("cubic, girth>=6") == ["cubic", "girth>=6"]
    assert parse_predicates(["brace", "pfaffian,2fh"]) == ["brace", "pfaffian", "2fh"]
    with pytest.raises(GraphError):
        parse_predicates("cubic,planar")
    budgets = Budgets()
    assert predicate("v2mod4")(fixture("Heawood"), budgets)[0]
    assert not predicate("v2mod4")(fixture("Cube"), budgets)[0]
    assert predicate("c4c")(fixture("Heawood"), budgets)[0]
    assert not predicate("c4c")(fixture("C4"), budgets)[0]  # not cubic
    assert predicate("pfaffian")(fixture("Fig7a"), budgets)[0]  # no perfect matching: vacuous
    assert predicate("non-pfaffian")(fixture("K33"), budgets)[0]
    assert not predicate("girth>=5")(fixture("Cube"), budgets)[0]


def test_budgets_from_env(monkeypatch):
    monkeypatch.setenv("BRACEKIT_MATCHING_BUDGET", "7")
    monkeypatch.setenv("BRACEKIT_SUBSET_BUDGET", "5")
    b = Budgets.from_env()
    assert (b.matchings, b.subsets) == (7, 5)


def test_json_round_trip_and_schema():
    report = scan_corpus(_lines("K33"), ["cubic"], ["2fh"])
    doc = load_report(emit_report(report))
    assert doc["schema"] == "bracekit.scan/1"
    rec = doc["records"][0]
    assert graph6_decode(rec["graph6"]) == fixture("K33")
    assert rec["properties"] == {"cubic": True, "2fh": True}
    with pytest.raises(GraphError):
        load_report(json.dumps({"schema": "other/9"}))


def test_csv_has_one_row_per_graph():
    report = scan_corpus(_lines("K33", "Prism"), ["bipartite"], ["2fh"])
    rows = list(csv.DictReader(io.StringIO(emit_report(report, "csv"))))
    assert len(rows) == 2
    assert rows[0]["2fh"] == "true" and rows[1]["2fh"] == "" and rows[0]["survivor"] == "true"
    with pytest.raises(GraphError):
        emit_report(report, "xml")


def test_parallel_matches_serial_bytes():
    lines = open(DATA / "cubic_bipartite_6_14.g6").readlines()
    one = emit_report(scan_corpus(lines, ["brace"], ["2fh", "pfaffian"], workers=1))
    two = emit_report(scan_corpus(lines, ["brace"], ["2fh", "pfaffian"], workers=2))
    assert one == two


def test_cubic_bipartite_survivors():
    lines = open(DATA / "cubic_bipartite_6_14.g6").readlines()
    report = scan_corpus(lines, ["cubic", "bipartite", "brace"], ["2fh"])
    survivors = [graph6_decode(r.graph6) for r in report.survivors]
    assert len(survivors) == 2
    assert are_isomorphic(survivors[0], fixture("K33"))
    assert are_isomorphic(survivors[1], fixture("Heawood"))


def test_evaluate_directly():
    rec = evaluate(7, fixture("Cube"), ["cubic"], ["2fh"], Budgets())
    assert rec.index == 7 and rec.passed_filters and rec.properties["2fh"] is False
