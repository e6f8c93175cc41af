"""Perfect matchings: enumeration, constrained existence, extendability, braces."""

from __future__ import annotations

import os
from typing import Iterable, Iterator

from .errors import BudgetExceeded, GraphError, TooSmall
from .graph import Edge, Graph, bipartition, edge, is_connected, iter_bits

Matching = tuple[Edge, ...]

DEFAULT_MATCHING_BUDGET = int(os.environ.get("BRACEKIT_MATCHING_BUDGET", 10**7))


def is_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    covered = 0
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
        bits = (1 << u) | (1 << v)
        if covered & bits:
            return False
        covered |= bits
    return True


def is_perfect_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    edges = list(edges)
    return 2 * len(edges) == g.n and is_matching(g, edges)


def iter_perfect_matchings(g: Graph, alive: int | None = None) -> Iterator[Matching]:
    """Perfect matchings of ``g`` (restricted to ``alive``) in lexicographic order.

    Branches on the lowest uncovered vertex with partners in ascending order,
    so each matching comes out as its own sorted edge list.
    """
    nbr = g.nbr_masks
    if alive is None:
        alive = g.all_mask
    if bin(alive).count("1") % 2:
        return
    dead: set[int] = set()
    chosen: list[Edge] = []

    def rec(left: int) -> Iterator[Matching]:
        if left == 0:
            yield tuple(chosen)
            return
        if left in dead:
            return
        u = (left & -left).bit_length() - 1
        rest = left & ~(1 << u)
        found = False
        for w in iter_bits(nbr[u] & rest):
            chosen.append((u, w))
            for m in rec(rest & ~(1 << w)):
                found = True
                yield m
            chosen.pop()
        if not found:
            dead.add(left)

    yield from rec(alive)


def enumerate_perfect_matchings(g: Graph, budget: int = DEFAULT_MATCHING_BUDGET) -> list[Matching]:
    if budget < 1:
        raise GraphError("budget must be at least 1")
    out = []
    for m in iter_perfect_matchings(g):
        if len(out) >= budget:
            raise BudgetExceeded("perfect matchings", budget, len(out))
        out.append(m)
    return out


class _Matcher:
    """Memoised perfect-matching existence on vertex subsets of one graph."""

    def __init__(self, g: Graph, banned: frozenset[Edge] = frozenset()):
        masks = list(g.nbr_masks)
        for u, v in banned:
            masks[u] &= ~(1 << v)
            masks[v] &= ~(1 << u)
        self.nbr = masks
        self.memo: dict[int, Matching | None] = {0: ()}

    def find(self, alive: int) -> Matching | None:
        if alive in self.memo:
            return self.memo[alive]
        result = None
        if bin(alive).count("1") % 2 == 0:
            # branch on the live vertex with fewest live neighbours
            best_u, best_opts = -1, -1
            for v in iter_bits(alive):
                opts = self.nbr[v] & alive
                if opts == 0:
                    best_u = -2
                    break
                if best_u < 0 or bin(opts).count("1") < bin(best_opts).count("1"):
                    best_u, best_opts = v, opts
            if best_u >= 0:
                rest = alive & ~(1 << best_u)
                for w in iter_bits(best_opts):
                    sub = self.find(rest & ~(1 << w))
                    if sub is not None:
                        result = tuple(sorted(sub + (edge(best_u, w),)))
                        break
        self.memo[alive] = result
        return result


def _bipartite_matching(g: Graph, alive: int, banned: frozenset[Edge] = frozenset()) -> Matching | None:
    """Augmenting-path perfect matching for bipartite hosts (Kuhn's algorithm)."""
    bip = bipartition(g)
    left = [v for v in sorted(bip.class_a) if alive >> v & 1]
    right_count = sum(1 for v in bip.class_b if alive >> v & 1)
    if len(left) != right_count:
        return None
    adj = {
        u: [w for w in g.neighbours(u) if alive >> w & 1 and edge(u, w) not in banned]
        for u in left
    }
    mate: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in mate or augment(mate[w], seen):
                mate[w] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            return None
    return tuple(sorted(edge(u, w) for w, u in mate.items()))


def find_perfect_matching(g: Graph) -> Matching | None:
    if g.n % 2:
        return None
    if bipartition(g) is not None:
        return _bipartite_matching(g, g.all_mask)
    return _Matcher(g).find(g.all_mask)


def has_perfect_matching(g: Graph) -> bool:
    return find_perfect_matching(g) is not None


def perfect_matching_with(
    g: Graph, forced: Iterable[Edge] = (), forbidden: Iterable[Edge] = ()
) -> Matching | None:
    """A perfect matching containing ``forced`` and avoiding ``forbidden``, or None."""
    forced = [edge(*e) for e in forced]
    forbidden = frozenset(edge(*e) for e in forbidden)
    if not is_matching(g, forced):
        raise GraphError(f"forced edges {forced} are not a matching of the graph")
    if forbidden & set(forced):
        raise GraphError("forced and forbidden edges overlap")
    alive = g.all_mask
    for u, v in forced:
        alive &= ~((1 << u) | (1 << v))
    if bipartition(g) is not None:
        rest = _bipartite_matching(g, alive, forbidden)
    else:
        rest = _Matcher(g, forbidden).find(alive)
    if rest is None:
        return None
    return tuple(sorted(forced + list(rest)))


def is_matching_covered(g: Graph) -> bool:
    if not is_connected(g) or g.n % 2:
        return False
    if bipartition(g) is None:
        matcher = _Matcher(g)
        for u, v in g.edge_list:
            if matcher.find(g.all_mask & ~((1 << u) | (1 << v))) is None:
                return False
        return True
    return all(perfect_matching_with(g, forced=[e]) is not None for e in g.edge_list)


def size_k_matchings(g: Graph, k: int) -> Iterator[Matching]:
    """All matchings with exactly ``k`` edges, in lexicographic order."""
    elist = g.edge_list

    def rec(start: int, covered: int, chosen: list[Edge]) -> Iterator[Matching]:
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i in range(start, len(elist)):
            u, v = elist[i]
            bits = (1 << u) | (1 << v)
            if covered & bits:
                continue
            chosen.append(elist[i])
            yield from rec(i + 1, covered | bits, chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def is_k_extendable(g: Graph, k: int) -> bool:
    """Every matching of exactly ``k`` edges lies in a perfect matching (brute force)."""
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    if g.n < 2 * k + 2:
        raise TooSmall(f"{k}-extendability needs at least {2 * k + 2} vertices, got {g.n}")
    matcher = _Matcher(g)
    full = g.all_mask
    for m in size_k_matchings(g, k):
        alive = full
        for u, v in m:
            alive &= ~((1 << u) | (1 << v))
        if matcher.find(alive) is None:
            return False
    return True


def hall_surplus_ok(g: Graph, k: int) -> bool:
    """Neighbourhood-surplus test for bipartite extendability.

    For a connected bipartite graph with equal colour classes, ``k``-extendable
    is equivalent to ``|N(S)| >= |S| + k`` for every nonempty ``S`` inside one
    class with ``|S| <= half - k``.  Used as the fast route in :func:`is_brace`;
    agreement with :func:`is_k_extendable` is checked exhaustively in the tests.
    """
    bip = bipartition(g)
    if bip is None or not is_connected(g):
        raise GraphError("surplus test needs a connected bipartite graph")
    side = sorted(bip.class_a)
    if 2 * len(side) != g.n:
        return False
    half = len(side)
    nbr = g.nbr_masks
    union = [0] * (1 << half)
    for s in range(1, 1 << half):
        low = s & -s
        i = low.bit_length() - 1
        union[s] = union[s ^ low] | nbr[side[i]]
        size = bin(s).count("1")
        if size <= half - k and bin(union[s]).count("1") < size + k:
            return False
    return True


def is_brace(g: Graph) -> bool:
    """Connected bipartite and either C4 or 2-extendable on at least six vertices."""
    if not is_connected(g) or bipartition(g) is None:
        return False
    if g.n == 4:
        return g.m == 4 and g.is_regular(2)
    if g.n < 6 or g.n % 2:
        return False
    if min(g.degrees()) < 3:
        return False
    return hall_surplus_ok(g, 2)


def konig_partition(g: Graph) -> list[Matching]:
    """Split a k-regular bipartite graph into k disjoint perfect matchings."""
    if bipartition(g) is None:
        raise GraphError("König partition needs a bipartite graph")
    degs = set(g.degrees())
    if len(degs) != 1 or 0 in degs:
        raise GraphError("König partition needs a k-regular graph with k >= 1")
    k = degs.pop()
    rest = g
    parts = []
    for _ in range(k):
        m = _bipartite_matching(rest, rest.all_mask)
        if m is None:  # impossible for regular bipartite graphs
            raise AssertionError("regular bipartite graph without a perfect matching")
        parts.append(m)
        rest = rest.without_edges(m)
    return parts

