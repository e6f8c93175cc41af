import pytest
from hypothesis import assume, given, settings

from bracekit.errors import BudgetExceeded, GraphError, NoPerfectMatching
from bracekit.fixtures import FIXTURE_IDS, fixture
from bracekit.graph import Graph
from bracekit.matching import enumerate_perfect_matchings, has_perfect_matching
from bracekit.pfaffian import (
    Orientation,
    Verdict,
    _Classes,
    alternating_cycles,
    canonical_cycle,
    check_pfaffian_girth_theorem,
    find_pfaffian_orientation,
    is_oddly_oriented,
    is_pfaffian,
    is_pfaffian_orientation,
    nice_cycles,
    spanning_forest,
)

from conftest import bipartite_with_perfect_matching, cubic_graphs, graphs, pfaffian_squared

WITH_PM = [n for n in FIXTURE_IDS if has_perfect_matching(fixture(n))]


def _pf_matches_count(g: Graph, o: Orientation) -> bool:
    """Independent check: Pf(A)^2 = det(A) equals (#perfect matchings)^2."""
    return pfaffian_squared(g, o.arcs()) == len(enumerate_perfect_matchings(g)) ** 2


@pytest.mark.parametrize("name, expected", [("Heawood", True), ("Cube", True), ("C4", True), ("K33", False)])
def test_named_graphs(name, expected):
    g = fixture(name)
    o = find_pfaffian_orientation(g)
    assert (o is not None) is expected
    if o is not None:
        assert _pf_matches_count(g, o)
        assert is_pfaffian_orientation(g, o)


def test_k33_exhausts_every_switching_class():
    g = fixture("K33")
    classes = _Classes.of(g)
    assert len(classes.free) == g.m - g.n + 1 == 4
    assert find_pfaffian_orientation(g, method="enumeration") is None
    assert not any(_pf_matches_count(g, classes.orientation(i)) for i in range(1 << len(classes.free)))


@pytest.mark.parametrize("name", WITH_PM)
def test_methods_agree(name):
    g = fixture(name)
    a = find_pfaffian_orientation(g, method="elimination")
    b = find_pfaffian_orientation(g, method="enumeration")
    assert a == b
    if a is not None:
        assert _pf_matches_count(g, a)


@pytest.mark.parametrize("name", [n for n in WITH_PM if fixture(n).n <= 10])
def test_nice_cycles_equal_alternating_cycles(name):
    g = fixture(name)
    union = set()
    for m in enumerate_perfect_matchings(g):
        union |= {canonical_cycle(c) for c in alternating_cycles(g, m)}
    assert {canonical_cycle(c) for c in nice_cycles(g)} == union


@settings(max_examples=40)
@given(bipartite_with_perfect_matching(max_half=4))
def test_orientation_search_against_determinant(g):
    o = find_pfaffian_orientation(g)
    classes = _Classes.of(g)
    assume(len(classes.free) <= 8)
    exists = any(_pf_matches_count(g, classes.orientation(i)) for i in range(1 << len(classes.free)))
    assert (o is not None) == exists
    if o is not None:
        assert _pf_matches_count(g, o)


@settings(max_examples=25)
@given(cubic_graphs(max_n=10))
def test_non_bipartite_graphs_too(g):
    assume(has_perfect_matching(g))
    a = find_pfaffian_orientation(g)
    b = find_pfaffian_orientation(g, method="enumeration")
    assert a == b
    if a is not None:
        assert _pf_matches_count(g, a)


@settings(max_examples=30)
@given(graphs(max_n=8))
def test_switching_preserves_pfaffian_property(g):
    assume(has_perfect_matching(g) and g.m > 0)
    o = find_pfaffian_orientation(g)
    assume(o is not None)
    for v in range(g.n):
        assert is_pfaffian_orientation(g, o.switched(v))


def test_orientation_helpers():
    g = fixture("C4")
    o = Orientation.from_arcs(g, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert o.forward(0, 1) and not o.forward(1, 0)
    cycle = (0, 1, 2, 3)
    assert not is_oddly_oriented(o, cycle)
    assert is_oddly_oriented(o.switched(1), cycle) == is_oddly_oriented(o, cycle)  # two cycle edges flip
    assert is_oddly_oriented(Orientation.from_arcs(g, [(1, 0), (1, 2), (2, 3), (3, 0)]), cycle)
    with pytest.raises(GraphError):
        Orientation.from_arcs(g, [(0, 1)])
    with pytest.raises(GraphError):
        Orientation.from_arcs(g, [(0, 2), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(GraphError):
        is_oddly_oriented(o, (0, 1, 2))


def test_spanning_forest_size():
    g = fixture("Heawood")
    assert len(spanning_forest(g)) == g.n - 1
    two = Graph(4, [(0, 1), (2, 3)])
    assert len(spanning_forest(two)) == 2


def test_errors_and_budgets():
    with pytest.raises(NoPerfectMatching):
        find_pfaffian_orientation(fixture("Fig7a"))
    with pytest.raises(NoPerfectMatching):
        nice_cycles(fixture("Fig4a"))
    with pytest.raises(BudgetExceeded):
        find_pfaffian_orientation(fixture("Heawood"), method="enumeration", class_budget=4)
    with pytest.raises(BudgetExceeded):
        find_pfaffian_orientation(fixture("Heawood"), cycle_budget=2)
    with pytest.raises(GraphError):
        find_pfaffian_orientation(fixture("C4"), method="magic")


def test_nice_cycle_counts():
    assert len(nice_cycles(fixture("C4"))) == 1
    assert len(nice_cycles(fixture("K33"))) == 15
    assert len(nice_cycles(fixture("Cube"))) == 24


def test_girth_theorem_check():
    assert check_pfaffian_girth_theorem(fixture("Heawood")).verdict is Verdict.PASS
    assert check_pfaffian_girth_theorem(fixture("Cube")).reason == "girth 4"
    assert check_pfaffian_girth_theorem(fixture("K33")).reason == "not Pfaffian"
    with pytest.raises(GraphError):
        check_pfaffian_girth_theorem(fixture("Prism"))
    assert check_pfaffian_girth_theorem(fixture("Heawood"), cycle_budget=1).verdict is Verdict.INCONCLUSIVE
    assert is_pfaffian(fixture("Cube"))
