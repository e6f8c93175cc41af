from itertools import combinations

import pytest
from hypothesis import assume, given, settings

from bracekit.constructions import star_product
from bracekit.cuts import (
    contract_side,
    cut_around,
    decompose,
    find_nontrivial_tight_cut,
    is_induced_matching,
    is_quasi_tight,
    is_tight,
    tight_cut_contractions,
    verify_cut_balance,
    verify_tight_cut_shape,
)
from bracekit.errors import BudgetExceeded, CutHypothesisError, GraphError, NotMatchingCovered, NotTight
from bracekit.fixtures import fixture, principal_cut_side
from bracekit.graph import Graph, is_bipartite
from bracekit.isomorphism import are_isomorphic
from bracekit.matching import is_brace, is_matching_covered

from conftest import bipartite_with_perfect_matching, brute_perfect_matchings, cubic_graphs


def brute_tight_sides(g: Graph) -> list[frozenset[int]]:
    """Non-trivial cut sides (containing vertex 0) met exactly once by every perfect matching."""
    pms = brute_perfect_matchings(g)
    out = []
    for size in range(2, g.n - 1):
        for rest in combinations(range(1, g.n), size - 1):
            X = frozenset((0,) + rest)
            delta = {e for e in g.edges if (e[0] in X) != (e[1] in X)}
            if all(len(delta & m) == 1 for m in pms):
                out.append(X)
    return out


def _matching_covered(g):
    assume(is_matching_covered(g))
    return g


@settings(max_examples=40)
@given(cubic_graphs(max_n=10))
def test_tight_cut_search_matches_brute_force_cubic(g):
    g = _matching_covered(g)
    found = find_nontrivial_tight_cut(g, subset_budget=g.n)
    brute = brute_tight_sides(g)
    assert (found is None) == (not brute)
    if found is not None:
        assert not found.trivial and is_tight(g, found)


@settings(max_examples=40)
@given(bipartite_with_perfect_matching(max_half=5))
def test_tight_cut_search_matches_brute_force_bipartite(g):
    g = _matching_covered(g)
    found = find_nontrivial_tight_cut(g, subset_budget=g.n)
    assert (found is None) == (not brute_tight_sides(g))
    assert (found is None) == is_brace(g)


@settings(max_examples=30)
@given(cubic_graphs(max_n=10))
def test_decomposition_pieces_have_no_tight_cut(g):
    g = _matching_covered(g)
    result = decompose(g, subset_budget=g.n)
    for piece in result.pieces:
        assert not brute_tight_sides(piece.graph)
        assert is_matching_covered(piece.graph)
        assert (piece.kind == "brace") == is_bipartite(piece.graph)
    # same multiset of pieces whichever cut is taken first
    other = decompose(g, subset_budget=g.n, order="descending")
    assert len(other.pieces) == len(result.pieces)
    assert sorted(p.kind for p in other.pieces) == sorted(p.kind for p in result.pieces)


def test_star_product_decomposes_back():
    K, H = fixture("K33"), fixture("Heawood")
    g = star_product(K, 0, H, 0).graph
    pieces = decompose(g).pieces
    assert [p.kind for p in pieces] == ["brace", "brace"]
    assert {are_isomorphic(p.graph, K) for p in pieces} == {True, False}
    assert any(are_isomorphic(p.graph, H) for p in pieces)


def test_contractions_and_errors():
    K = fixture("K33")
    g = star_product(K, 0, K, 0).graph
    c = find_nontrivial_tight_cut(g)
    first, second = tight_cut_contractions(g, c)
    assert first.graph.n == len(c.X) + 1 and first.marker == len(c.X)
    assert are_isomorphic(first.graph, K) and are_isomorphic(second.graph, K)
    with pytest.raises(GraphError):
        tight_cut_contractions(g, cut_around(g, [0]))
    loose = cut_around(g, [0, 1])
    with pytest.raises(NotTight):
        tight_cut_contractions(g, loose)
    with pytest.raises(NotMatchingCovered):
        is_tight(fixture("K4minus"), cut_around(fixture("K4minus"), [0]))


def test_contract_side_shape():
    c = contract_side(fixture("Cube"), [0, 1, 2])
    assert c.kept == (0, 1, 2) and c.graph.n == 4


def test_quasi_tight_fixture_cuts():
    prism = fixture("Prism")
    assert not is_quasi_tight(prism, cut_around(prism, principal_cut_side("Prism")))
    for name in ("Fig4b", "Fig7b"):
        g = fixture(name)
        assert is_quasi_tight(g, cut_around(g, principal_cut_side(name)))  # vacuous: no perfect matching


def test_cut_must_belong_to_graph():
    with pytest.raises(GraphError):
        is_quasi_tight(fixture("K33"), cut_around(fixture("Cube"), [0]))


def test_subset_budget_is_reported():
    # the Petersen graph is a brick on 10 vertices: a full search covers odd sides up to 5
    petersen = Graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                     + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    with pytest.raises(BudgetExceeded):
        find_nontrivial_tight_cut(petersen, subset_budget=3)
    assert find_nontrivial_tight_cut(petersen, subset_budget=5) is None


@pytest.mark.parametrize("name", ["K33", "Heawood"])
def test_tight_cut_shape_on_fixtures(name):
    rep = verify_tight_cut_shape(fixture(name))
    assert rep.mismatches == ()
    assert rep.cuts_checked == 2 ** (fixture(name).n - 1) - 1 - fixture(name).n


def test_tight_cut_shape_on_products():
    K, H = fixture("K33"), fixture("Heawood")
    for g in (star_product(K, 0, K, 0).graph, star_product(K, 0, H, 0).graph):
        rep = verify_tight_cut_shape(g)
        assert rep.mismatches == () and rep.tight >= 1


def test_induced_matching():
    cube = fixture("Cube")
    assert is_induced_matching(cube, [])
    assert not is_induced_matching(cube, [(0, 1), (1, 2)])


def test_cut_balance_holds_on_principal_cut():
    K = fixture("K33")
    sp = star_product(K, 0, K, 0)
    bal = verify_cut_balance(sp.graph, sp.cut)
    assert bal.holds
    assert bal.x_a - bal.x_b == 1 == bal.rest_b - bal.rest_a


def test_cut_balance_hypotheses():
    with pytest.raises(CutHypothesisError, match="bipartite"):
        verify_cut_balance(fixture("Prism"), cut_around(fixture("Prism"), [0, 1, 2]))
    cube = fixture("Cube")
    with pytest.raises(CutHypothesisError, match="both colour classes"):
        verify_cut_balance(cube, cut_around(cube, [0, 1]))


@settings(max_examples=40)
@given(bipartite_with_perfect_matching(max_half=5))
def test_cut_balance_property(g):
    """Whenever the hypotheses hold, the balance equations and the once-meeting conclusion hold."""
    for size in range(1, g.n):
        for X in combinations(range(g.n), size):
            if 0 not in X:
                continue
            try:
                bal = verify_cut_balance(g, cut_around(g, X))
            except CutHypothesisError:
                continue
            assert bal.holds
