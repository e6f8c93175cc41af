"""Edge cuts, (quasi-)tightness, tight cut contractions and the brick/brace decomposition."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Literal

from .errors import BudgetExceeded, CutHypothesisError, GraphError, NotMatchingCovered, NotTight
from .graph import Edge, Graph, bipartition, edge, is_bipartite, is_k_connected, iter_bits, reach_mask
from .matching import DEFAULT_MATCHING_BUDGET, enumerate_perfect_matchings, is_matching_covered

DEFAULT_SUBSET_BUDGET = int(os.environ.get("BRACEKIT_SUBSET_BUDGET", 12))


@dataclass(frozen=True)
class EdgeCut:
    n: int
    X: frozenset[int]
    delta: frozenset[Edge]

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.X

    @property
    def trivial(self) -> bool:
        return len(self.X) == 1 or len(self.X) == self.n - 1

    def crossing(self, edges: Iterable[Edge]) -> int:
        return sum(1 for e in edges if edge(*e) in self.delta)


def cut_around(g: Graph, X: Iterable[int]) -> EdgeCut:
    X = frozenset(X)
    if not X or len(X) >= g.n:
        raise GraphError("cut side must be a nonempty proper vertex subset")
    if any(not 0 <= v < g.n for v in X):
        raise GraphError("cut side contains vertices outside the graph")
    delta = frozenset(e for e in g.edges if (e[0] in X) != (e[1] in X))
    return EdgeCut(g.n, X, delta)


def _check_host(g: Graph, c: EdgeCut) -> None:
    if c.n != g.n or c != cut_around(g, c.X):
        raise GraphError("cut does not belong to this graph")


def is_quasi_tight(g: Graph, c: EdgeCut, budget: int = DEFAULT_MATCHING_BUDGET) -> bool:
    """Every perfect matching meets the cut exactly once (vacuous without perfect matchings)."""
    _check_host(g, c)
    return all(c.crossing(m) == 1 for m in enumerate_perfect_matchings(g, budget))


def is_tight(g: Graph, c: EdgeCut, budget: int = DEFAULT_MATCHING_BUDGET) -> bool:
    if not is_matching_covered(g):
        raise NotMatchingCovered("tightness is only defined on matching covered graphs")
    return is_quasi_tight(g, c, budget)


def is_induced_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    edges = list(edges)
    ends = [set(e) for e in edges]
    for i, j in combinations(range(len(edges)), 2):
        if ends[i] & ends[j]:
            return False
        if any(g.has_edge(a, b) for a in ends[i] for b in ends[j]):
            return False
    return True


def _side_with_zero(g: Graph, X: frozenset[int]) -> frozenset[int]:
    return X if 0 in X else frozenset(range(g.n)) - X


def _three_matching_cuts(g: Graph, descending: bool = False) -> Iterator[EdgeCut]:
    """Induced 3-edge matchings whose removal disconnects the graph, lexicographic order."""
    triples = combinations(g.edge_list, 3)
    if descending:
        triples = reversed(list(triples))
    for trio in triples:
        if not is_induced_matching(g, trio):
            continue
        h = g.without_edges(trio)
        side = reach_mask(h, 0, h.all_mask)
        if side == h.all_mask:
            continue
        X = frozenset(iter_bits(side))
        c = cut_around(g, X)
        if c.delta == frozenset(trio):
            yield c


def _subset_candidates(g: Graph, limit: int, descending: bool) -> Iterator[frozenset[int]]:
    sizes = [s for s in range(3, min(limit, g.n // 2) + 1) if s % 2 == 1]
    if descending:
        sizes.reverse()
    seen: set[frozenset[int]] = set()
    for s in sizes:
        subsets = combinations(range(g.n), s)
        if descending:
            subsets = reversed(list(subsets))
        for sub in subsets:
            X = _side_with_zero(g, frozenset(sub))
            if 2 * s == g.n:
                if X in seen:
                    continue
                seen.add(X)
            yield X


def is_cubic_3c_bipartite(g: Graph) -> bool:
    return g.is_cubic() and is_bipartite(g) and is_k_connected(g, 3)


def find_nontrivial_tight_cut(
    g: Graph,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
    matching_budget: int = DEFAULT_MATCHING_BUDGET,
    order: Literal["ascending", "descending"] = "ascending",
) -> EdgeCut | None:
    """A non-trivial tight cut of a matching covered graph, or None when there is none.

    Cubic 3-connected bipartite hosts use the induced-3-matching characterisation;
    everything else falls back to testing odd vertex subsets up to
    ``subset_budget`` vertices on the smaller side.  If that search could not
    cover all cuts, BudgetExceeded is raised instead of returning None.
    """
    if not is_matching_covered(g):
        raise NotMatchingCovered("tight cuts are searched only in matching covered graphs")
    descending = order == "descending"
    if is_cubic_3c_bipartite(g):
        return next(_three_matching_cuts(g, descending), None)

    pms = enumerate_perfect_matchings(g, matching_budget)
    pm_masks = [sum(1 << g.edge_index[e] for e in m) for m in pms]
    bip = bipartition(g)
    tried = 0
    for X in _subset_candidates(g, subset_budget, descending):
        tried += 1
        if bip is not None:
            if abs(len(X & bip.class_a) - len(X & bip.class_b)) != 1:
                continue
        c = cut_around(g, X)
        dmask = sum(1 << g.edge_index[e] for e in c.delta)
        if all(bin(pm & dmask).count("1") == 1 for pm in pm_masks):
            return c
    largest = g.n // 2 if (g.n // 2) % 2 else g.n // 2 - 1
    if subset_budget < largest:
        raise BudgetExceeded("tight-cut subset search", subset_budget, tried)
    return None


@dataclass(frozen=True)
class Contraction:
    graph: Graph
    marker: int  # the vertex standing for the contracted side
    kept: tuple[int, ...]  # kept[i] = original vertex now numbered i


def contract_side(g: Graph, keep: Iterable[int]) -> Contraction:
    """Shrink everything outside ``keep`` to one new vertex numbered ``len(keep)``."""
    kept = tuple(sorted(set(keep)))
    pos = {v: i for i, v in enumerate(kept)}
    marker = len(kept)
    edges = set()
    for u, v in g.edges:
        a, b = pos.get(u, marker), pos.get(v, marker)
        if a != b:  # drop loops; the set drops parallels
            edges.add(edge(a, b))
    return Contraction(Graph(marker + 1, edges), marker, kept)


def tight_cut_contractions(
    g: Graph, c: EdgeCut, budget: int = DEFAULT_MATCHING_BUDGET
) -> tuple[Contraction, Contraction]:
    """Contract the complement of X (first result) and X itself (second result)."""
    _check_host(g, c)
    if c.trivial:
        raise GraphError("contractions of a trivial cut just return the graph")
    if not is_tight(g, c, budget):
        raise NotTight("cut is not tight")
    return contract_side(g, c.X), contract_side(g, c.complement)


@dataclass(frozen=True)
class Piece:
    kind: Literal["brick", "brace"]
    graph: Graph


@dataclass
class DecompositionResult:
    pieces: list[Piece] = field(default_factory=list)
    cut_trace: list[tuple[Graph, EdgeCut]] = field(default_factory=list)


def decompose(
    g: Graph,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
    matching_budget: int = DEFAULT_MATCHING_BUDGET,
    order: Literal["ascending", "descending"] = "ascending",
) -> DecompositionResult:
    """Tight cut decomposition into bricks and braces."""
    if not is_matching_covered(g):
        raise NotMatchingCovered("only matching covered graphs can be decomposed")
    result = DecompositionResult()
    todo = [g]
    while todo:
        h = todo.pop(0)
        c = find_nontrivial_tight_cut(h, subset_budget, matching_budget, order)
        if c is None:
            result.pieces.append(Piece("brace" if is_bipartite(h) else "brick", h))
            continue
        result.cut_trace.append((h, c))
        first, second = contract_side(h, c.X), contract_side(h, c.complement)
        todo.extend([first.graph, second.graph])
    return result


@dataclass(frozen=True)
class CutBalance:
    x_a: int
    x_b: int
    rest_a: int
    rest_b: int
    every_matching_once: bool

    @property
    def holds(self) -> bool:
        return self.x_a - self.x_b == 1 == self.rest_b - self.rest_a and self.every_matching_once


def verify_cut_balance(g: Graph, c: EdgeCut, budget: int = DEFAULT_MATCHING_BUDGET) -> CutBalance:
    """Colour-class counts on both sides of a cut whose X-side endpoints share one class.

    Class A is taken to be the class holding those endpoints.  Raises
    CutHypothesisError when the graph is not bipartite, the endpoints are mixed,
    or no perfect matching meets the cut exactly once.
    """
    _check_host(g, c)
    bip = bipartition(g)
    if bip is None:
        raise CutHypothesisError("graph is not bipartite")
    if not c.delta:
        raise CutHypothesisError("cut is empty")
    inner = {u if u in c.X else v for u, v in c.delta}
    sides = {bip.side(v) for v in inner}
    if len(sides) != 1:
        raise CutHypothesisError("X-side endpoints of the cut lie in both colour classes")
    a_cls = bip.class_a if sides == {0} else bip.class_b
    b_cls = frozenset(range(g.n)) - a_cls
    pms = enumerate_perfect_matchings(g, budget)
    counts = [c.crossing(m) for m in pms]
    if 1 not in counts:
        raise CutHypothesisError("no perfect matching meets the cut exactly once")
    rest = c.complement
    return CutBalance(
        x_a=len(c.X & a_cls),
        x_b=len(c.X & b_cls),
        rest_a=len(rest & a_cls),
        rest_b=len(rest & b_cls),
        every_matching_once=all(k == 1 for k in counts),
    )


@dataclass(frozen=True)
class ShapeReport:
    cuts_checked: int  # non-trivial cuts with X containing vertex 0
    tight: int
    mismatches: tuple[frozenset[int], ...]  # sides where the two properties disagree


def verify_tight_cut_shape(g: Graph, budget: int = DEFAULT_MATCHING_BUDGET, max_vertices: int = 24) -> ShapeReport:
    """Compare 'tight' with 'induced matching of 3 edges' on every non-trivial cut.

    Walks all vertex subsets containing vertex 0 in Gray-code order, keeping
    the cut as an edge bitmask (XOR of incidence masks).
    """
    if not is_matching_covered(g):
        raise NotMatchingCovered("tightness needs a matching covered graph")
    if g.n > max_vertices:
        raise BudgetExceeded("vertex subsets (log2)", max_vertices, g.n)
    pm_masks = [sum(1 << g.edge_index[e] for e in m) for m in enumerate_perfect_matchings(g, budget)]
    inc = [0] * g.n
    for i, (u, v) in enumerate(g.edge_list):
        inc[u] ^= 1 << i
        inc[v] ^= 1 << i
    rest = g.n - 1
    side = 1  # vertex mask; vertex 0 always in
    delta = inc[0]
    checked = tight = 0
    bad = []
    for step in range(1, 1 << rest):
        flip = (step & -step).bit_length()  # vertex index 1..rest
        side ^= 1 << flip
        delta ^= inc[flip]
        size = bin(side).count("1")
        if size == 1 or size >= g.n - 1:
            continue
        checked += 1
        is_t = all(bin(pm & delta).count("1") == 1 for pm in pm_masks)
        tight += is_t
        cut_edges = [g.edge_list[i] for i in iter_bits(delta)]
        shaped = len(cut_edges) == 3 and is_induced_matching(g, cut_edges)
        if is_t != shaped:
            bad.append(frozenset(iter_bits(side)))
    return ShapeReport(checked, tight, tuple(bad))
