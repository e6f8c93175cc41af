"""Simple undirected graphs on vertices ``0..n-1`` plus basic structure.

Graphs are immutable; every operation here is a pure function.  Adjacency is
also kept as integer bitmasks because most exhaustive searches in the package
work on vertex subsets.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import Graph6Error, GraphError

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalised edge key with the smaller endpoint first."""
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        seen = set()
        for pair in self.edges:
            u, v = pair
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {pair} out of range for n={self.n}")
            e = edge(u, v)
            if e in seen:
                raise GraphError(f"parallel edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", frozenset(seen))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple(edges))  # __post_init__ normalises and validates

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr_masks[u] >> v & 1)

    def is_regular(self, k: int) -> bool:
        return all(len(a) == k for a in self.adjacency)

    def is_cubic(self) -> bool:
        return self.is_regular(3)

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        gone = {edge(*e) for e in removed}
        return Graph(self.n, self.edges - gone)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph renumbered in increasing order; also returns the old labels."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        sub = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(keep), sub), keep

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


# --------------------------------------------------------------------------
# graph6

_G6_HEADER = ">>graph6<<"


def _g6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph6 cannot encode n={n}")


def graph6_encode(g: Graph) -> str:
    bits = []
    masks = g.nbr_masks
    for j in range(1, g.n):
        mj = masks[j]
        for i in range(j):
            bits.append(mj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _g6_size(g.n) + "".join(body)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("latin-1")
    text = text.rstrip("\r\n")
    base = 0
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not text:
        raise Graph6Error("empty graph6 string", base)
    if text[0] in ":;&":
        raise Graph6Error(f"unsupported format prefix {text[0]!r}", base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"illegal character {ch!r}", base + i)

    vals = [ord(ch) - 63 for ch in text]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte size field", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size field", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    if n == 0:
        raise Graph6Error("graph with zero vertices", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - pos
    if have < need:
        raise Graph6Error(f"truncated bit vector: need {need} bytes, got {have}", base + len(vals))
    if have > need:
        raise Graph6Error(f"{have - need} trailing bytes after bit vector", base + pos + need)

    edges = []
    k = 0
    i, j = 0, 1
    for idx in range(pos, pos + need):
        v = vals[idx]
        for shift in range(5, -1, -1):
            if k >= nbits:
                if v >> shift & 1:
                    raise Graph6Error("nonzero padding bits", base + idx)
                continue
            if v >> shift & 1:
                edges.append((i, j))
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph]]:
    """Yield ``(line_number, text, graph)`` for each non-blank line.

    Parse errors are re-raised with the 1-based line number prepended.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        if text.startswith(_G6_HEADER):
            text = text[len(_G6_HEADER):]
            if not text:
                continue
        try:
            g = graph6_decode(text)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from exc
        yield lineno, text, g


# --------------------------------------------------------------------------
# colouring, cycles, connectivity


@dataclass(frozen=True)
class Bipartition:
    class_a: frozenset[int]
    class_b: frozenset[int]

    def side(self, v: int) -> int:
        return 0 if v in self.class_a else 1


def bipartition(g: Graph) -> Bipartition | None:
    """Canonical 2-colouring: the lowest vertex of each component goes to class A."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    a = frozenset(v for v in range(g.n) if colour[v] == 0)
    return Bipartition(a, frozenset(range(g.n)) - a)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests (per-root BFS)."""
    best = math.inf
    adj = g.adjacency
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def reach_mask(g: Graph, start: int, alive: int) -> int:
    """Vertices reachable from ``start`` inside the vertex set ``alive``."""
    nbr = g.nbr_masks
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= nbr[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected_mask(g: Graph, alive: int) -> bool:
    if alive == 0:
        return True
    start = (alive & -alive).bit_length() - 1
    return reach_mask(g, start, alive) == alive


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g, g.all_mask)


def components(g: Graph) -> list[list[int]]:
    left = g.all_mask
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = reach_mask(g, start, left)
        out.append(list(iter_bits(comp)))
        left &= ~comp
    return out


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g`` is connected, has more than ``k`` vertices and no separator below ``k``.

    The vertex-count condition gives the complete-graph convention: ``K_n`` is
    ``(n-1)``-connected.  ``K_1`` counts as 1-connected.
    """
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    if not is_connected(g):
        return False
    if g.n <= k:
        return k == 1
    full = g.all_mask
    for size in range(1, k):
        for sep in combinations(range(g.n), size):
            alive = full
            for v in sep:
                alive &= ~(1 << v)
            if not is_connected_mask(g, alive):
                return False
    return True


def bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose deletion increases the number of components (iterative lowlink DFS)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out = set()
    counter = 0
    adj = g.adjacency
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    out.add(edge(parent, u))
    return frozenset(out)


def _has_cycle(g: Graph, comp_mask: int, removed: set[Edge]) -> bool:
    verts = list(iter_bits(comp_mask))
    inside = sum(
        1 for u, v in g.edges
        if (comp_mask >> u & 1) and (comp_mask >> v & 1) and (u, v) not in removed
    )
    return inside >= len(verts)


def is_cyclically_4_connected(g: Graph) -> bool:
    """For connected cubic graphs: no cut of at most 3 edges leaves two components with cycles.

    Enumerates edge sets of size <= 3 rather than vertex subsets; any bad cut is
    contained in such an edge set.
    """
    if not g.is_cubic():
        raise GraphError("cyclic 4-connectivity is only defined here for cubic graphs")
    if not is_connected(g):
        raise GraphError("graph must be connected")
    elist = g.edge_list
    for size in range(1, 4):
        for removed in combinations(elist, size):
            rm = set(removed)
            h = g.without_edges(removed)
            comps = components(h)
            if len(comps) < 2:
                continue
            cyclic = 0
            for comp in comps:
                mask = sum(1 << v for v in comp)
                if _has_cycle(g, mask, rm):
                    cyclic += 1
            if cyclic >= 2:
                return False
    return True


def random_regular_graph(n: int, k: int, rng, tries: int = 10_000) -> Graph:
    """Uniform-ish random simple ``k``-regular graph by the pairing model with restarts."""
    if n * k % 2 or k >= n:
        raise GraphError(f"no simple {k}-regular graph on {n} vertices")
    for _ in range(tries):
        points = [v for v in range(n) for _ in range(k)]
        rng.shuffle(points)
        pairs = {edge(points[i], points[i + 1]) for i in range(0, len(points), 2)}
        if len(pairs) == n * k // 2 and all(u != v for u, v in pairs):
            return Graph(n, pairs)
    raise GraphError(f"pairing model failed {tries} times for n={n}, k={k}")
