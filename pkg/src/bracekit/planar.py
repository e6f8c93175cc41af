"""Rotation systems, face tracing and 4-cycle searches."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from typing import Iterator, Sequence

from .errors import GraphError, RotationError
from .graph import Edge, Graph, edge, is_connected

FourCycle = tuple[int, int, int, int]


@dataclass(frozen=True)
class RotationSystem:
    graph: Graph
    order: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        order = tuple(tuple(o) for o in self.order)
        if len(order) != self.graph.n:
            raise RotationError(f"rotation lists {len(order)} vertices, graph has {self.graph.n}")
        for v, seq in enumerate(order):
            if sorted(seq) != list(self.graph.neighbours(v)):
                raise RotationError(f"rotation at {v} is {list(seq)}, not a permutation of its neighbours")
        object.__setattr__(self, "order", order)

    def successor(self, v: int, u: int) -> int:
        seq = self.order[v]
        return seq[(seq.index(u) + 1) % len(seq)]


@dataclass(frozen=True)
class FaceTrace:
    faces: tuple[tuple[int, ...], ...]  # vertex walks, one per face
    genus: int

    @property
    def planar(self) -> bool:
        return self.genus == 0


def trace_faces(r: RotationSystem) -> FaceTrace:
    """Faces of the embedding: after arriving at v from u, leave towards the successor of u at v."""
    g = r.graph
    if not is_connected(g):
        raise RotationError("face tracing needs a connected graph")
    if g.m == 0:
        return FaceTrace(((0,),), 0)
    unused = {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
    faces = []
    for start in sorted(unused):
        if start not in unused:
            continue
        walk = []
        dart = start
        while dart in unused:
            unused.discard(dart)
            walk.append(dart[0])
            u, v = dart
            dart = (v, r.successor(v, u))
        faces.append(tuple(walk))
    euler = g.n - g.m + len(faces)
    if euler % 2:
        raise RotationError("Euler characteristic is odd; rotation is inconsistent")
    return FaceTrace(tuple(faces), (2 - euler) // 2)


def count_quadrilateral_faces(r: RotationSystem) -> int:
    trace = trace_faces(r)
    if not trace.planar:
        raise RotationError(f"rotation has genus {trace.genus}, not a planar embedding")
    return sum(1 for f in trace.faces if len(f) == 4)


# --------------------------------------------------------------------------
# rotation files


def parse_rotation(text: str, g: Graph) -> RotationSystem:
    """Parse lines ``v: n1 n2 n3`` (cyclic order); blank lines and ``#`` comments are skipped."""
    order: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        try:
            if not sep:
                raise ValueError("missing ':'")
            v = int(head)
            nbrs = tuple(int(x) for x in tail.split())
        except ValueError as exc:
            raise RotationError(f"rotation line {lineno}: {exc}") from None
        if v in order:
            raise RotationError(f"rotation line {lineno}: vertex {v} listed twice")
        order[v] = nbrs
    if set(order) != set(range(g.n)):
        raise RotationError(f"rotation must list vertices 0..{g.n - 1} exactly once")
    return RotationSystem(g, tuple(order[v] for v in range(g.n)))


def format_rotation(r: RotationSystem) -> str:
    return "".join(f"{v}: {' '.join(map(str, seq))}\n" for v, seq in enumerate(r.order))


def fixture_rotation(name: str) -> RotationSystem:
    """Bundled rotation of a planar fixture."""
    from .fixtures import PLANAR_FIXTURES, fixture

    if name not in PLANAR_FIXTURES:
        raise GraphError(f"no bundled rotation for {name!r}")
    text = (resources.files("bracekit") / "data" / "rotations" / f"{name}.rot").read_text()
    return parse_rotation(text, fixture(name))


# --------------------------------------------------------------------------
# 4-cycles


def canonical_four_cycle(c: Sequence[int]) -> FourCycle:
    """Least rotation/reflection of the cyclic sequence."""
    c = tuple(c)
    forms = [c[i:] + c[:i] for i in range(4)]
    rev = tuple(reversed(c))
    forms += [rev[i:] + rev[:i] for i in range(4)]
    return min(forms)


def all_four_cycles(g: Graph) -> list[FourCycle]:
    """Each 4-cycle once, as ``(s, b, c, d)`` with ``s`` smallest and ``b < d``."""
    out = []
    masks = g.nbr_masks
    for s in range(g.n):
        higher = [w for w in g.neighbours(s) if w > s]
        for b, d in combinations(higher, 2):
            common = masks[b] & masks[d] & ~((1 << (s + 1)) - 1)
            while common:
                low = common & -common
                out.append((s, b, low.bit_length() - 1, d))
                common ^= low
    return sorted(out)


def cycle_edge_set(c: Sequence[int]) -> frozenset[Edge]:
    return frozenset(edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def _check_four_cycle(g: Graph, c: Sequence[int]) -> None:
    if len(c) != 4 or len(set(c)) != 4 or any(not g.has_edge(a, b) for a, b in cycle_edge_set(c)):
        raise GraphError(f"{tuple(c)} is not a 4-cycle of the graph")


def edge_disjoint_partner(g: Graph, c: Sequence[int]) -> FourCycle | None:
    """The least 4-cycle sharing no edge with ``c``."""
    _check_four_cycle(g, c)
    used = cycle_edge_set(c)
    for d in all_four_cycles(g):
        if not used & cycle_edge_set(d):
            return d
    return None


def three_edge_disjoint_four_cycles(g: Graph) -> tuple[FourCycle, FourCycle, FourCycle] | None:
    cycles = all_four_cycles(g)
    sets = [cycle_edge_set(c) for c in cycles]
    for i, j, k in combinations(range(len(cycles)), 3):
        if not (sets[i] & sets[j] or sets[i] & sets[k] or sets[j] & sets[k]):
            return cycles[i], cycles[j], cycles[k]
    return None


def four_cycle_splits(g: Graph) -> Iterator[tuple[FourCycle, Graph, Graph]]:
    """Ways to write ``g`` as ``g1 ∪ g2`` meeting exactly in a 4-cycle.

    For every 4-cycle ``C`` whose vertex deletion leaves at least two
    components, the components are split into two nonempty groups and each
    group is returned together with ``C`` (first group holds the component
    of the smallest vertex).  Cycles with a chord are skipped.
    """
    from .graph import components

    for c in all_four_cycles(g):
        cset = set(c)
        if len(cset) == g.n:
            continue
        if any(g.has_edge(a, b) for a, b in [(c[0], c[2]), (c[1], c[3])]):
            continue
        rest, labels = g.induced(v for v in range(g.n) if v not in cset)
        comps = [frozenset(labels[v] for v in comp) for comp in components(rest)]
        if len(comps) < 2:
            continue
        first, others = comps[0], comps[1:]
        for size in range(0, len(others)):
            for pick in combinations(others, size):
                side1 = set(first).union(*pick) | cset
                side2 = set(range(g.n)) - side1 | cset
                g1, _ = g.induced(side1)
                g2, _ = g.induced(side2)
                yield c, g1, g2


def planar_rotation(g: Graph, budget: int = 1 << 20) -> RotationSystem | None:
    """Search every rotation system for a genus-0 one (or prove there is none).

    Not a planarity algorithm: it walks all products of cyclic orders, with
    vertex 0's order fixed up to reflection.  Meant for certifying small cubic
    examples.  Raises BudgetExceeded when there are more than ``budget``
    systems to try.
    """
    from itertools import permutations, product

    from .errors import BudgetExceeded

    if not is_connected(g):
        raise RotationError("face tracing needs a connected graph")
    choices = []
    total = 1
    for v in range(g.n):
        nb = g.neighbours(v)
        if len(nb) <= 2:
            opts = [nb]
        else:
            opts = [(nb[0],) + p for p in permutations(nb[1:])]
            if v == 0:
                opts = [o for o in opts if o[1] < o[-1]]  # mirror images give the same genus
        choices.append(opts)
        total *= len(opts)
    if total > budget:
        raise BudgetExceeded("rotation systems", budget, 0)
    for order in product(*choices):
        r = RotationSystem(g, order)
        if trace_faces(r).planar:
            return r
    return None
