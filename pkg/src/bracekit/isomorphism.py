"""Exact isomorphism for small graphs: colour refinement, then backtracking."""

from __future__ import annotations

from .graph import Graph


def _refine(graphs: list[Graph]) -> list[list[int]]:
    """Joint colour refinement, so colours are comparable across the graphs."""
    colours = [[g.degree(v) for v in range(g.n)] for g in graphs]
    while True:
        sigs = [
            [(col[v], tuple(sorted(col[w] for w in g.neighbours(v)))) for v in range(g.n)]
            for g, col in zip(graphs, colours)
        ]
        palette = {s: i for i, s in enumerate(sorted({s for sig in sigs for s in sig}))}
        new = [[palette[s] for s in sig] for sig in sigs]
        if all(len(set(a)) == len(set(b)) for a, b in zip(new, colours)):
            return new
        colours = new


def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """A list ``phi`` with ``phi[v]`` the image of vertex ``v``, or None."""
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    c1, c2 = _refine([g1, g2])
    if sorted(c1) != sorted(c2):
        return None

    # rarest colours first, then grow along edges so adjacency prunes early
    freq: dict[int, int] = {}
    for c in c1:
        freq[c] = freq.get(c, 0) + 1
    order: list[int] = []
    placed = set()
    while len(order) < g1.n:
        frontier = [v for v in range(g1.n) if v not in placed and any(w in placed for w in g1.neighbours(v))]
        pool = frontier or [v for v in range(g1.n) if v not in placed]
        v = min(pool, key=lambda x: (freq[c1[x]], x))
        order.append(v)
        placed.add(v)

    phi = [-1] * g1.n
    used = [False] * g2.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        mapped = [w for w in g1.neighbours(v) if phi[w] >= 0]
        for x in range(g2.n):
            if used[x] or c2[x] != c1[v]:
                continue
            if any(not g2.has_edge(x, phi[w]) for w in mapped):
                continue
            # non-edges must stay non-edges as well
            if sum(1 for y in g2.neighbours(x) if used[y]) != len(mapped):
                continue
            phi[v] = x
            used[x] = True
            if extend(i + 1):
                return True
            phi[v] = -1
            used[x] = False
        return False

    return phi if extend(0) else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
