"""Star products, trisums and iterated star products of K33 / Heawood."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .cuts import EdgeCut, cut_around, is_induced_matching
from .errors import ConstructionError, GraphError
from .graph import Edge, Graph, bipartition, edge


@dataclass(frozen=True)
class StarProduct:
    graph: Graph
    cut: EdgeCut  # principal 3-edge cut; X is the image of the first factor
    map1: dict[int, int]  # old vertex of g1 -> new vertex (v1 absent)
    map2: dict[int, int]
    pairing: dict[int, int]  # neighbour of v1 -> neighbour of v2, old labels


def default_pairing(g1: Graph, v1: int, g2: Graph, v2: int) -> dict[int, int]:
    """Sorted neighbours of ``v1`` matched to sorted neighbours of ``v2``."""
    return dict(zip(g1.neighbours(v1), g2.neighbours(v2)))


def star_product(
    g1: Graph, v1: int, g2: Graph, v2: int, pairing: Mapping[int, int] | None = None
) -> StarProduct:
    """Delete ``v1`` and ``v2`` and join their neighbourhoods along ``pairing``.

    g1 keeps its numbering with ``v1`` squeezed out; g2's vertices follow.
    """
    for name, g, v in (("first", g1, v1), ("second", g2, v2)):
        if not 0 <= v < g.n:
            raise ConstructionError(f"{name} vertex {v} is not in the graph")
        if g.degree(v) != 3:
            raise ConstructionError(f"{name} vertex {v} has degree {g.degree(v)}, need 3")
    if pairing is None:
        pairing = default_pairing(g1, v1, g2, v2)
    pairing = dict(pairing)
    if set(pairing) != set(g1.neighbours(v1)) or sorted(pairing.values()) != list(g2.neighbours(v2)):
        raise ConstructionError(f"pairing {pairing} is not a bijection N({v1}) -> N({v2})")

    map1 = {u: (u if u < v1 else u - 1) for u in range(g1.n) if u != v1}
    off = g1.n - 1
    map2 = {u: off + (u if u < v2 else u - 1) for u in range(g2.n) if u != v2}
    edges: list[Edge] = []
    edges += [(map1[a], map1[b]) for a, b in g1.edges if v1 not in (a, b)]
    edges += [(map2[a], map2[b]) for a, b in g2.edges if v2 not in (a, b)]
    edges += [(map1[a], map2[b]) for a, b in pairing.items()]
    g = Graph(g1.n + g2.n - 2, edges)
    cut = cut_around(g, map1.values())
    return StarProduct(g, cut, map1, map2, pairing)


def principal_cut_is_induced_matching(g: Graph, cut: EdgeCut) -> bool:
    return len(cut.delta) == 3 and is_induced_matching(g, cut.delta)


def trisum(
    graphs: Sequence[Graph],
    cycles: Sequence[Sequence[int]],
    remove: Iterable[tuple[int, int]] = (),
) -> Graph:
    """Glue three bipartite graphs along a common 4-cycle and delete some of its edges.

    ``cycles[i]`` lists the 4-cycle of ``graphs[i]`` in cyclic order; the
    ``j``-th entries of all three are identified and become vertex ``j`` of
    the result.  Remaining vertices follow graph by graph in increasing order.
    ``remove`` holds cycle edges as position pairs, e.g. ``(0, 1)``.
    """
    if len(graphs) != 3 or len(cycles) != 3:
        raise ConstructionError("a trisum takes exactly three graphs and three cycles")
    cycle_edges = {edge(j, (j + 1) % 4) for j in range(4)}
    S = {edge(*p) for p in remove}
    if not S <= cycle_edges:
        raise ConstructionError(f"edges {sorted(S - cycle_edges)} are not edges of the shared 4-cycle")
    edges: set[Edge] = set()
    nxt = 4
    for i, (g, cyc) in enumerate(zip(graphs, cycles)):
        cyc = list(cyc)
        if len(cyc) != 4 or len(set(cyc)) != 4 or any(not 0 <= v < g.n for v in cyc):
            raise ConstructionError(f"graph {i}: {cyc} is not four distinct vertices")
        for j in range(4):
            if not g.has_edge(cyc[j], cyc[(j + 1) % 4]):
                raise ConstructionError(f"graph {i}: {cyc} is not a 4-cycle")
        for a, b in combinations(cyc, 2):
            if g.has_edge(a, b) and edge(cyc.index(a), cyc.index(b)) not in cycle_edges:
                raise ConstructionError(f"graph {i}: chord {a}-{b} would make the intersection more than a 4-cycle")
        if g.n == 4:
            raise ConstructionError(f"graph {i} has no vertex outside the shared cycle")
        if bipartition(g) is None:
            raise ConstructionError(f"graph {i} is not bipartite")
        new = {v: j for j, v in enumerate(cyc)}
        for v in range(g.n):
            if v not in new:
                new[v] = nxt
                nxt += 1
        edges |= {edge(new[a], new[b]) for a, b in g.edges}
    union = Graph(nxt, edges)
    if bipartition(union) is None:
        raise ConstructionError("the three colourings clash on the union")
    return union.without_edges(S)


# --------------------------------------------------------------------------
# iterated star products


@dataclass(frozen=True)
class FamilyStep:
    base: str
    vertex: int | None  # vertex of the running graph; None for the first step
    pairing: tuple[int, ...] | None  # permutation of the base neighbours


@dataclass
class FamilyResult:
    graph: Graph
    cuts: list[tuple[Graph, EdgeCut]] = field(default_factory=list)


def parse_recipe(text: str) -> list[FamilyStep]:
    """Recipe grammar, one step per line, ``#`` starts a comment::

        K33                 first line: the starting base graph
        Heawood 4           star the running graph at vertex 4 with Heawood's vertex 0
        K33 7 2,0,1         explicit pairing: i-th neighbour of 7 -> pairing[i]-th neighbour of 0

    Neighbours are taken in increasing order on both sides.
    """
    steps: list[FamilyStep] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if not steps:
                if len(parts) != 1:
                    raise ValueError("the first step names only the base graph")
                steps.append(FamilyStep(parts[0], None, None))
                continue
            if len(parts) not in (2, 3):
                raise ValueError("expected 'base vertex [pairing]'")
            pairing = tuple(int(x) for x in parts[2].split(",")) if len(parts) == 3 else None
            steps.append(FamilyStep(parts[0], int(parts[1]), pairing))
        except ValueError as exc:
            raise ConstructionError(f"recipe line {lineno}: {exc}") from None
    if not steps:
        raise ConstructionError("empty recipe")
    return steps


def diwan_family(recipe: Sequence[FamilyStep] | str) -> FamilyResult:
    """Iterated star product; each step glues vertex 0 of a fresh base copy."""
    from .fixtures import fixture

    steps = parse_recipe(recipe) if isinstance(recipe, str) else list(recipe)
    if not steps:
        raise ConstructionError("empty recipe")
    try:
        g = fixture(steps[0].base)
    except GraphError as exc:
        raise ConstructionError(f"step 1: {exc}") from None
    result = FamilyResult(g)
    for idx, step in enumerate(steps[1:], 2):
        try:
            base = fixture(step.base)
            if step.vertex is None:
                raise ConstructionError("only the first step may omit the vertex")
            pairing = None
            if step.pairing is not None:
                if not 0 <= step.vertex < g.n:
                    raise ConstructionError(f"vertex {step.vertex} is not in the running graph")
                left, right = g.neighbours(step.vertex), base.neighbours(0)
                if sorted(step.pairing) != list(range(len(right))) or len(left) != len(right):
                    raise ConstructionError(f"pairing {step.pairing} is not a permutation of 0..{len(right) - 1}")
                pairing = {left[i]: right[p] for i, p in enumerate(step.pairing)}
            sp = star_product(g, step.vertex, base, 0, pairing)
        except (ConstructionError, GraphError) as exc:
            raise ConstructionError(f"step {idx}: {exc}") from None
        g = sp.graph
        result.cuts.append((g, sp.cut))
        result.graph = g
    return result
