import networkx as nx
import pytest
from hypothesis import assume, given, settings

from bracekit.errors import BudgetExceeded, GraphError, TooSmall
from bracekit.fixtures import FIXTURE_IDS, fixture
from bracekit.graph import Graph, is_bipartite, is_connected
from bracekit.matching import (
    enumerate_perfect_matchings,
    find_perfect_matching,
    hall_surplus_ok,
    has_perfect_matching,
    is_brace,
    is_k_extendable,
    is_matching,
    is_matching_covered,
    is_perfect_matching,
    iter_perfect_matchings,
    konig_partition,
    perfect_matching_with,
)

from conftest import bipartite_graphs, bipartite_with_perfect_matching, brute_perfect_matchings, graphs, to_nx

PM_COUNTS = {"C4": 2, "K4": 3, "K4minus": 2, "K33": 6, "Cube": 9, "Prism": 4, "Heawood": 24}


@pytest.mark.parametrize("name, count", PM_COUNTS.items())
def test_fixture_matching_counts(name, count):
    pms = enumerate_perfect_matchings(fixture(name))
    assert len(pms) == count
    assert {frozenset(m) for m in pms} == brute_perfect_matchings(fixture(name))


@given(graphs(max_n=10))
def test_enumeration_matches_brute_force(g):
    pms = list(iter_perfect_matchings(g))
    assert len(set(pms)) == len(pms)
    assert pms == sorted(pms)
    assert {frozenset(m) for m in pms} == brute_perfect_matchings(g)
    assert all(is_perfect_matching(g, m) for m in pms)


@given(graphs(max_n=12))
def test_existence_matches_networkx(g):
    h = to_nx(g)
    expected = g.n % 2 == 0 and len(nx.max_weight_matching(h, maxcardinality=True)) == g.n // 2
    assert has_perfect_matching(g) == expected
    m = find_perfect_matching(g)
    assert (m is not None) == expected
    if m is not None:
        assert is_perfect_matching(g, m)


@given(graphs(max_n=9))
def test_matching_covered_matches_brute_force(g):
    pms = brute_perfect_matchings(g)
    covered = set().union(*pms) if pms else set()
    expected = is_connected(g) and g.n % 2 == 0 and bool(pms) and covered == set(g.edges)
    assert is_matching_covered(g) == expected


@given(bipartite_graphs(max_side=5))
def test_forced_and_forbidden(g):
    pms = brute_perfect_matchings(g)
    for e in sorted(g.edges)[:3]:
        want_in = any(e in m for m in pms)
        got = perfect_matching_with(g, forced=[e])
        assert (got is not None) == want_in
        want_out = any(e not in m for m in pms)
        got = perfect_matching_with(g, forbidden=[e])
        assert (got is not None) == want_out
        if got is not None:
            assert e not in got and is_perfect_matching(g, got)


def test_forced_must_be_matching():
    with pytest.raises(GraphError):
        perfect_matching_with(fixture("K33"), forced=[(0, 3), (0, 4)])
    assert not is_matching(fixture("K33"), [(0, 1)])


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded) as info:
        enumerate_perfect_matchings(fixture("Heawood"), budget=10)
    assert info.value.limit == 10


@settings(max_examples=60, deadline=None)
@given(bipartite_with_perfect_matching())
def test_hall_surplus_equals_extendability(g):
    # without a perfect matching, extendability can hold vacuously (a star has no 2-matching)
    assume(is_connected(g))
    for k in (1, 2):
        if g.n < 2 * k + 2:
            continue
        assert hall_surplus_ok(g, k) == is_k_extendable(g, k)


def test_star_is_vacuously_extendable_but_no_brace():
    star = Graph(6, [(0, v) for v in range(1, 6)])
    assert is_k_extendable(star, 2)
    assert not is_brace(star)


def test_too_small_for_extendability():
    with pytest.raises(TooSmall):
        is_k_extendable(fixture("C4"), 2)


@pytest.mark.parametrize("name", FIXTURE_IDS)
def test_brace_definition(name):
    g = fixture(name)
    if g.n == 4:
        expected = is_bipartite(g) and g.m == 4
    elif g.n >= 6 and g.n % 2 == 0 and is_bipartite(g) and is_connected(g):
        expected = is_k_extendable(g, 2)
    else:
        expected = False
    assert is_brace(g) == expected


def test_known_braces():
    assert is_brace(fixture("C4")) and is_brace(fixture("K33"))
    assert is_brace(fixture("Cube")) and is_brace(fixture("Heawood"))
    assert not is_brace(fixture("Prism"))  # not bipartite
    assert not is_brace(Graph(6, [(0, 3), (1, 4), (2, 5), (0, 4), (1, 5)]))


@pytest.mark.parametrize("name", ["K33", "Cube", "Heawood", "C4"])
def test_konig_partition(name):
    g = fixture(name)
    parts = konig_partition(g)
    assert sorted(e for p in parts for e in p) == sorted(g.edges)
    assert all(is_perfect_matching(g, p) for p in parts)


def test_konig_rejects_non_regular():
    with pytest.raises(GraphError):
        konig_partition(fixture("Prism"))
    with pytest.raises(GraphError):
        konig_partition(Graph(3, [(0, 1), (1, 2)]))
