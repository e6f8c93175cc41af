"""Shared helpers and independent oracles for the test suite."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from bracekit.graph import Graph, read_graph6_lines

DATA = Path(__file__).parent / "data"

# brute-force oracles are slow and uneven; time limits live in the acceptance tests
settings.register_profile("bracekit", deadline=None, print_blob=True)
settings.load_profile("bracekit")


def corpus(name: str) -> list[Graph]:
    with open(DATA / name) as fh:
        return [g for _, _, g in read_graph6_lines(fh)]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), list(h.edges()))


# --------------------------------------------------------------------------
# brute-force oracles (deliberately naive)


def brute_perfect_matchings(g: Graph) -> set[frozenset]:
    """All edge subsets of size n/2 covering every vertex."""
    if g.n % 2:
        return set()
    out = set()
    for sub in combinations(sorted(g.edges), g.n // 2):
        if len({v for e in sub for v in e}) == g.n:
            out.add(frozenset(sub))
    return out


def brute_two_factors(g: Graph) -> set[frozenset]:
    """Spanning subgraphs with every degree 2, found as n-edge subsets."""
    out = set()
    for sub in combinations(sorted(g.edges), g.n):
        deg = [0] * g.n
        for u, v in sub:
            deg[u] += 1
            deg[v] += 1
        if all(d == 2 for d in deg):
            out.add(frozenset(sub))
    return out


def determinant(rows: list[list[int]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    n, det = len(a), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def pfaffian_squared(g: Graph, arcs) -> Fraction:
    """det of the skew adjacency matrix of an orientation, which is Pf^2."""
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in arcs:
        a[u][v], a[v][u] = 1, -1
    return determinant(a)


def brute_vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """No separator of fewer than k vertices, checked over all small vertex sets.

    A single vertex counts as 1-connected (it is connected).
    """
    h = to_nx(g)
    if g.n <= k:
        return g.n == 1 and k == 1
    for size in range(k):
        for cut in combinations(range(g.n), size):
            rest = h.subgraph(set(range(g.n)) - set(cut))
            if not nx.is_connected(rest):
                return False
    return True


# --------------------------------------------------------------------------
# hypothesis strategies


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def bipartite_graphs(draw, max_side: int = 5):
    a = draw(st.integers(1, max_side))
    b = draw(st.integers(1, max_side))
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(a + b, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def bipartite_with_perfect_matching(draw, min_half: int = 3, max_half: int = 5):
    """Balanced bipartite graphs containing the matching i -- half + i."""
    h = draw(st.integers(min_half, max_half))
    pairs = [(u, h + v) for u in range(h) for v in range(h) if u != v]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(2 * h, [(i, h + i) for i in range(h)] + [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def cubic_graphs(draw, max_n: int = 12):
    import random

    from bracekit.graph import random_regular_graph

    n = draw(st.sampled_from([n for n in range(4, max_n + 1, 2)]))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_regular_graph(n, 3, random.Random(seed))


@pytest.fixture(scope="session")
def cubic_bipartite_corpus() -> list[Graph]:
    return corpus("cubic_bipartite_6_14.g6")


# --------------------------------------------------------------------------
# acceptance summary: one line per criterion at the end of the run

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "tests": 0, "failed": [], "skipped": 0, "seconds": 0.0})
    if report.when == "call" or (report.when == "setup" and not report.passed):
        entry["tests"] += 1
        entry["seconds"] += report.duration
        if report.failed:
            entry["failed"].append(item.name)
        elif report.skipped:
            entry["skipped"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        ran = e["tests"] - e["skipped"]
        if e["failed"]:
            status = "FAIL"
        elif ran == 0:
            status = "SKIP"
        else:
            status = "PASS"
        extra = f"; failed: {', '.join(e['failed'])}" if e["failed"] else ""
        skipped = f", {e['skipped']} skipped" if e["skipped"] else ""
        terminalreporter.write_line(
            f"criterion {number:>2} {status}  {e['title']}  ({ran} tests{skipped}, {e['seconds']:.1f} s{extra})"
        )
