import json

import pytest

from bracekit.cli import EXIT_BUDGET, EXIT_FALSE, EXIT_INPUT, EXIT_OK, main
from bracekit.fixtures import fixture
from bracekit.graph import graph6_decode, graph6_encode
from bracekit.isomorphism import are_isomorphic

from conftest import DATA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_fixture(capsys):
    code, out, _ = run(capsys, "check", "Heawood", "--prop", "brace,2fh", "--prop", "girth>=6")
    assert code == EXIT_OK
    assert "brace=true 2fh=true girth>=6=true" in out


def test_check_false_property(capsys):
    code, out, _ = run(capsys, "check", "Cube", "--prop", "2fh", "--matching-covered")
    assert code == EXIT_FALSE and "2fh=false" in out and "matching-covered=true" in out


def test_check_budget(capsys, monkeypatch):
    monkeypatch.setenv("BRACEKIT_MATCHING_BUDGET", "3")
    code, out, _ = run(capsys, "check", "Heawood", "--prop", "2fh")
    assert code == EXIT_BUDGET and "inconclusive" in out


def test_check_graph6_string_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "check", graph6_encode(fixture("K33")), "--prop", "cubic")
    assert code == EXIT_OK
    path = tmp_path / "two.g6"
    path.write_text(graph6_encode(fixture("K33")) + "\n" + graph6_encode(fixture("Prism")) + "\n")
    code, out, _ = run(capsys, "check", str(path), "--prop", "bipartite")
    assert code == EXIT_FALSE and out.count("\n") == 2


def test_bad_input(capsys):
    code, _, err = run(capsys, "check", "Nonsense!", "--prop", "cubic")
    assert code == EXIT_INPUT and err.startswith("bracekit:")
    code, _, err = run(capsys, "check", "K33", "--prop", "planar")
    assert code == EXIT_INPUT and "unknown predicate" in err


def test_star_and_decompose(capsys):
    code, out, err = run(capsys, "star", "K33", "0", "Heawood", "0", "--pairing", "2,0,1", "-v")
    assert code == EXIT_OK and "principal cut" in err
    g6 = out.strip()
    assert graph6_decode(g6).n == 18
    code, out, _ = run(capsys, "decompose", g6)
    assert code == EXIT_OK and "2 pieces" in out
    pieces = [graph6_decode(line.split()[-1]) for line in out.splitlines()[1:]]
    assert any(are_isomorphic(p, fixture("Heawood")) for p in pieces)


def test_star_rejects_bad_pairing(capsys):
    code, _, err = run(capsys, "star", "K33", "0", "K33", "0", "--pairing", "0,0,1")
    assert code == EXIT_INPUT


def test_trisum(capsys):
    code, out, _ = run(capsys, "trisum", "Cube", "Cube", "Cube", "--cycle", "0,1,2,3",
                       "--remove", "0-1", "--remove", "1-2", "--remove", "2-3", "--remove", "3-0")
    assert code == EXIT_OK
    g = graph6_decode(out.strip())
    assert (g.n, g.m) == (16, 24) and g.is_cubic()


def test_family(capsys, tmp_path):
    recipe = tmp_path / "fam.txt"
    recipe.write_text("K33\nHeawood 2\n")
    code, out, _ = run(capsys, "family", str(recipe))
    assert code == EXIT_OK and graph6_decode(out.strip()).n == 18
    recipe.write_text("K33\nHeawood 99\n")
    code, _, err = run(capsys, "family", str(recipe))
    assert code == EXIT_INPUT and "step 2" in err


def test_scan_report_and_figures(capsys, tmp_path):
    report = tmp_path / "out.json"
    figs = tmp_path / "figs"
    code, _, err = run(capsys, "scan", str(DATA / "cubic_bipartite_6_14.g6"), "--filter", "cubic,bipartite,brace",
                       "--check", "2fh", "--report", str(report), "--figures", str(figs), "--workers", "2")
    assert code == EXIT_OK and "2 survivors" in err
    doc = json.loads(report.read_text())
    assert len(doc["aggregate"]["survivors"]) == 2
    assert sorted(p.name for p in figs.iterdir()) == ["order_histogram.png", "predicate_counts.png"]


def test_scan_csv_to_stdout(capsys):
    code, out, _ = run(capsys, "scan", str(DATA / "cubic_bipartite_6_14.g6"), "--filter", "brace", "--format", "csv")
    assert code == EXIT_OK and len(out.strip().splitlines()) == 23


def test_scan_budget_exit(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("BRACEKIT_MATCHING_BUDGET", "3")
    code, _, _ = run(capsys, "scan", str(DATA / "cubic_bipartite_6_14.g6"), "--check", "2fh",
                     "--report", str(tmp_path / "r.json"))
    assert code == EXIT_BUDGET


def test_paper_suite_subset(capsys):
    code, out, _ = run(capsys, "paper-suite", "--only", "fixture sanity")
    assert code == EXIT_OK and out.startswith("PASS")


def test_help_lists_exit_codes(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "exit status" in capsys.readouterr().out
