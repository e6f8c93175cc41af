"""2-factors and 2-factor Hamiltonicity."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

from .errors import BudgetExceeded, GraphError
from .graph import Edge, Graph, edge
from .matching import DEFAULT_MATCHING_BUDGET, iter_perfect_matchings

TwoFactor = tuple[Edge, ...]


class Hamiltonicity(NamedTuple):
    hamiltonian: bool
    witness: TwoFactor | None  # first disconnected 2-factor, when not hamiltonian
    examined: int  # 2-factors looked at before deciding

    def __bool__(self) -> bool:
        return self.hamiltonian


def cycles_of(edges: Iterable[Edge]) -> list[list[int]]:
    """Split a 2-regular edge set into its cycles, each starting at its smallest vertex."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v, nb in adj.items():
        if len(nb) != 2:
            raise GraphError(f"vertex {v} has degree {len(nb)} in a supposed 2-factor")
    seen: set[int] = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, min(adj[start])
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(cyc)
    return out


def is_two_factor(g: Graph, edges: Iterable[Edge]) -> bool:
    deg = [0] * g.n
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
        deg[u] += 1
        deg[v] += 1
    return all(d == 2 for d in deg)


def _general_two_factors(g: Graph) -> Iterator[TwoFactor]:
    n = g.n
    adj = g.adjacency
    deg = [0] * n
    chosen: list[Edge] = []

    def feasible(v: int) -> bool:
        # every later vertex must still be able to reach degree 2
        for w in range(v + 1, n):
            spare = sum(1 for x in adj[w] if x > v)
            if deg[w] > 2 or deg[w] + spare < 2:
                return False
        return True

    def rec(v: int) -> Iterator[TwoFactor]:
        if v == n:
            yield tuple(sorted(chosen))
            return
        need = 2 - deg[v]
        if need < 0:
            return
        later = [w for w in adj[v] if w > v and deg[w] < 2]
        for pick in combinations(later, need):
            for w in pick:
                deg[w] += 1
                chosen.append((v, w))
            deg[v] += need
            if feasible(v):
                yield from rec(v + 1)
            deg[v] -= need
            for w in pick:
                deg[w] -= 1
                chosen.pop()

    if min(g.degrees()) >= 2:
        yield from rec(0)


def iter_two_factors(g: Graph) -> Iterator[TwoFactor]:
    """All 2-factors; for cubic graphs these are the perfect-matching complements."""
    if g.is_cubic():
        for m in iter_perfect_matchings(g):
            yield tuple(sorted(g.edges - set(m)))
    else:
        yield from _general_two_factors(g)


def enumerate_two_factors(g: Graph, budget: int = DEFAULT_MATCHING_BUDGET) -> list[TwoFactor]:
    if budget < 1:
        raise GraphError("budget must be at least 1")
    out = []
    for f in iter_two_factors(g):
        if len(out) >= budget:
            raise BudgetExceeded("2-factors", budget, len(out))
        out.append(f)
    return out


def has_two_factor(g: Graph) -> bool:
    return next(iter_two_factors(g), None) is not None


def is_two_factor_hamiltonian(g: Graph, budget: int = DEFAULT_MATCHING_BUDGET) -> Hamiltonicity:
    """Every 2-factor is a single cycle; vacuously true without 2-factors."""
    count = 0
    for f in iter_two_factors(g):
        if count >= budget:
            raise BudgetExceeded("2-factors", budget, count)
        count += 1
        if len(cycles_of(f)) > 1:
            return Hamiltonicity(False, f, count)
    return Hamiltonicity(True, None, count)


def is_strictly_two_factor_hamiltonian(g: Graph, budget: int = DEFAULT_MATCHING_BUDGET) -> bool:
    """2-factor Hamiltonian and actually has a 2-factor."""
    verdict = is_two_factor_hamiltonian(g, budget)
    return verdict.hamiltonian and verdict.examined > 0


def pairs_share_two_factor(g: Graph, edges: Iterable[Edge]) -> dict[tuple[Edge, Edge], TwoFactor | None]:
    """For each pair of the given edges, some 2-factor containing both (or None)."""
    edges = [edge(*e) for e in edges]
    found: dict[tuple[Edge, Edge], TwoFactor | None] = {p: None for p in combinations(edges, 2)}
    missing = set(found)
    for f in iter_two_factors(g):
        fs = set(f)
        for p in list(missing):
            if p[0] in fs and p[1] in fs:
                found[p] = f
                missing.discard(p)
        if not missing:
            break
    return found
