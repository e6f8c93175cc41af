"""Named graphs transcribed from drawings.

Each table lists the drawing labels in vertex order (vertex ``i`` is
``labels[i]``), the edge list in drawing labels and, for the planar drawings,
the coordinates used to derive a rotation system.  Labels are the node names
used in the source drawings (``A1``, ``V3``...), so every vertex can be traced
back to a position in the picture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

from .errors import GraphError
from .graph import Graph, graph6_decode, graph6_encode


@dataclass(frozen=True)
class Drawing:
    labels: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    coords: dict[str, tuple[float, float]] | None = None
    note: str = ""

    def graph(self) -> Graph:
        pos = {lab: i for i, lab in enumerate(self.labels)}
        return Graph(len(self.labels), [(pos[a], pos[b]) for a, b in self.edges])


def _labels(prefix: str, count: int, start: int = 1) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(start, start + count))


# K_{3,3}: unfilled bottom row V1..V3 -> 0..2, filled top row U1..U3 -> 3..5.
_K33 = Drawing(
    labels=_labels("V", 3) + _labels("U", 3),
    edges=tuple((f"V{i}", f"U{j}") for i in range(1, 4) for j in range(1, 4)),
)

# Heawood: V1..V14 on a circle (odd ones filled) -> 0..13, 14-cycle plus chords.
_HEAWOOD = Drawing(
    labels=_labels("V", 14),
    edges=tuple((f"V{i}", f"V{i % 14 + 1}") for i in range(1, 15)) + (
        ("V1", "V6"), ("V2", "V11"), ("V3", "V8"), ("V4", "V13"),
        ("V5", "V10"), ("V7", "V12"), ("V9", "V14"),
    ),
    coords={f"V{i}": (math.cos(2 * math.pi * i / 14), math.sin(2 * math.pi * i / 14)) for i in range(1, 15)},
)

# Cube: outer square V1..V4 -> 0..3, inner square U1..U4 -> 4..7.
_CUBE = Drawing(
    labels=_labels("V", 4) + _labels("U", 4),
    edges=(
        ("V1", "V2"), ("V2", "V3"), ("V3", "V4"), ("V4", "V1"),
        ("U1", "U2"), ("U2", "U3"), ("U3", "U4"), ("U4", "U1"),
        ("V1", "U1"), ("V2", "U2"), ("V3", "U3"), ("V4", "U4"),
    ),
    coords={
        "V1": (0, 0), "V2": (3, 0), "V3": (3, 3), "V4": (0, 3),
        "U1": (1, 1), "U2": (2, 1), "U3": (2, 2), "U4": (1, 2),
    },
)

_C4 = Drawing(
    labels=_labels("A", 4),
    edges=(("A1", "A2"), ("A2", "A3"), ("A3", "A4"), ("A4", "A1")),
    coords={"A1": (0, 0), "A2": (1, 0), "A3": (1, 1), "A4": (0, 1)},
)

# K4 from the triangular-prism figure, left panel: A3 sits inside A1 A2 A4.
_K4 = Drawing(
    labels=_labels("A", 4),
    edges=(("A1", "A2"), ("A2", "A3"), ("A3", "A4"), ("A2", "A4"), ("A4", "A1"), ("A1", "A3")),
    coords={"A1": (0, 0), "A2": (0, 2), "A3": (1, 1), "A4": (2, 1)},
)

# K4 minus the edge A2A4 (first panel of the non-bipartite star-product figure).
_K4MINUS = Drawing(
    labels=_labels("A", 4),
    edges=(("A1", "A2"), ("A2", "A3"), ("A3", "A4"), ("A3", "A1"), ("A4", "A1")),
    coords={"A1": (0, 1), "A2": (1, 0), "A3": (2, 1), "A4": (1, 2)},
)

# Triangular prism = star product of two K4; dashed rungs A2A6, A1A5, A3A4.
_PRISM = Drawing(
    labels=_labels("A", 6),
    edges=(
        ("A1", "A2"), ("A2", "A3"), ("A4", "A5"), ("A5", "A6"),
        ("A2", "A6"), ("A4", "A6"), ("A1", "A5"), ("A1", "A3"), ("A3", "A4"),
    ),
    coords={"A1": (0, 0), "A2": (0, 2), "A3": (1, 1), "A4": (3, 1), "A5": (4, 0), "A6": (4, 2)},
)

# Two star products of K4^-: A1..A3 -> 0..2, B1..B3 -> 3..5.
_FIG2B = Drawing(
    labels=_labels("A", 3) + _labels("B", 3),
    edges=(
        ("A1", "B1"), ("A2", "B2"), ("A3", "B3"),
        ("A1", "B2"), ("B1", "A2"), ("A2", "B3"), ("B2", "A3"),
    ),
    note="bipartite, 2-factor Hamiltonian",
)
_FIG2C = Drawing(
    labels=_labels("A", 3) + _labels("B", 3),
    edges=(
        ("A1", "B1"), ("A2", "B2"), ("A3", "B3"),
        ("A1", "B2"), ("B2", "A3"), ("A2", "B3"), ("B1", "B3"),
    ),
    note="no 2-factor",
)

# Bipartite graph without a 2-factor: A1..A4 -> 0..3, B1..B3 -> 4..6.
_NO2F_7 = Drawing(
    labels=_labels("A", 4) + _labels("B", 3),
    edges=(
        ("A1", "B1"), ("A1", "B2"), ("A1", "B3"), ("A4", "B1"), ("A4", "B2"),
        ("A4", "B3"), ("A2", "B1"), ("A2", "B2"), ("A3", "B2"), ("A3", "B3"),
    ),
    note="bipartite, vacuously 2-factor Hamiltonian (no 2-factor)",
)
# Its star product with itself at A4: A1..A6 -> 0..5, B1..B6 -> 6..11.
_NO2F_12 = Drawing(
    labels=_labels("A", 6) + _labels("B", 6),
    edges=(
        ("A1", "B1"), ("A1", "B2"), ("A1", "B3"), ("A2", "B1"), ("A2", "B2"),
        ("A3", "B2"), ("A3", "B3"), ("A4", "B1"), ("A4", "B4"), ("A4", "B6"),
        ("A5", "B2"), ("A5", "B4"), ("A5", "B5"), ("A5", "B6"), ("A6", "B3"),
        ("A6", "B5"), ("A6", "B6"),
    ),
    note="bipartite, not 2-factor Hamiltonian; principal cut A4B1, A5B2, A6B3",
)

# Ladder-like bipartite graph: A1..A4 -> 0..3, B1..B4 -> 4..7.
_LADDER_8 = Drawing(
    labels=_labels("A", 4) + _labels("B", 4),
    edges=tuple((f"A{i}", f"B{i}") for i in range(1, 5))
    + tuple((f"A{i}", f"B{i + 1}") for i in range(1, 4))
    + tuple((f"B{i}", f"A{i + 1}") for i in range(1, 4)),
    note="bipartite, not 2-factor Hamiltonian",
)
# Its star product with itself.  The source drawing routes an edge from B3
# straight through A4 to C3; read as the two edges B3A4 and A4C3 (otherwise
# A4 would be a leaf and the graph non-bipartite).
_LADDER_14 = Drawing(
    labels=_labels("A", 4) + _labels("B", 3) + _labels("C", 4) + _labels("D", 3),
    edges=(
        ("A1", "B1"), ("A2", "B2"), ("A3", "B3"),
        ("C1", "D1"), ("C2", "D2"), ("C3", "D3"),
        ("A1", "B2"), ("A2", "B1"), ("A2", "C1"), ("A3", "B2"), ("A3", "C2"),
        ("A4", "B3"), ("A4", "C3"), ("D1", "C2"), ("C3", "D2"), ("C4", "D2"),
        ("C4", "D3"),
    ),
    note="bipartite, 2-factor Hamiltonian; principal cut A2C1, A3C2, A4C3",
)

_BRIDGE_16_EDGES = (
    (1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5), (4, 6), (6, 7),
    (6, 12), (7, 8), (7, 9), (8, 10), (8, 11), (9, 10), (9, 11), (10, 11),
    (12, 13), (12, 15), (13, 14), (13, 16), (14, 15), (14, 16), (15, 16),
)
# Cubic graph with bridges and no perfect matching: A1..A16 -> 0..15.
_BRIDGE_16 = Drawing(
    labels=_labels("A", 16),
    edges=tuple((f"A{a}", f"A{b}") for a, b in _BRIDGE_16_EDGES),
    note="cubic, bridges at A6, no perfect matching",
)
# Star product of the above (at A14) with K4 (triangle C1 C2 C3):
# A1..A13 -> 0..12, A15 -> 13, A16 -> 14, C1..C3 -> 15..17.
_BRIDGE_18 = Drawing(
    labels=_labels("A", 13) + ("A15", "A16") + _labels("C", 3),
    edges=tuple((f"A{a}", f"A{b}") for a, b in _BRIDGE_16_EDGES if 14 not in (a, b)) + (
        ("C1", "C2"), ("C1", "C3"), ("C2", "C3"),
        ("C1", "A13"), ("C2", "A16"), ("C3", "A15"),
    ),
    note="cubic, no perfect matching; principal cut C1A13, C2A16, C3A15",
)

DRAWINGS: dict[str, Drawing] = {
    "C4": _C4,
    "K4": _K4,
    "K4minus": _K4MINUS,
    "K33": _K33,
    "Cube": _CUBE,
    "Prism": _PRISM,
    "Heawood": _HEAWOOD,
    "Fig2b": _FIG2B,
    "Fig2c": _FIG2C,
    "Fig4a": _NO2F_7,
    "Fig4b": _BRIDGE_18,
    "Fig5a": _NO2F_7,
    "Fig5b": _NO2F_12,
    "Fig6a": _LADDER_8,
    "Fig6b": _LADDER_14,
    "Fig7a": _BRIDGE_16,
    "Fig7b": _BRIDGE_18,
}

FIXTURE_IDS: tuple[str, ...] = tuple(DRAWINGS)

# Principal 3-edge cuts of the star-product fixtures, in drawing labels;
# the first listed endpoint of each edge lies on the side kept as X.
PRINCIPAL_CUTS: dict[str, tuple[tuple[str, str], ...]] = {
    "Prism": (("A2", "A6"), ("A1", "A5"), ("A3", "A4")),
    "Fig4b": (("A13", "C1"), ("A16", "C2"), ("A15", "C3")),
    "Fig5b": (("B1", "A4"), ("B2", "A5"), ("B3", "A6")),
    "Fig6b": (("A2", "C1"), ("A3", "C2"), ("A4", "C3")),
    "Fig7b": (("A13", "C1"), ("A16", "C2"), ("A15", "C3")),
}

PLANAR_FIXTURES = ("C4", "K4", "K4minus", "Cube", "Prism")

_cache: dict[str, Graph] = {}


def fixture(name: str) -> Graph:
    try:
        drawing = DRAWINGS[name]
    except KeyError:
        raise GraphError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_IDS)}") from None
    if name not in _cache:
        _cache[name] = drawing.graph()
    return _cache[name]


def vertex_of(name: str, label: str) -> int:
    return DRAWINGS[name].labels.index(label)


def principal_cut_side(name: str) -> frozenset[int]:
    """Vertex set X of the principal cut of a star-product fixture (the side with the
    first endpoints), found as the component of G minus the cut containing them."""
    from .graph import reach_mask, iter_bits

    g = fixture(name)
    cut = [(vertex_of(name, a), vertex_of(name, b)) for a, b in PRINCIPAL_CUTS[name]]
    h = g.without_edges(cut)
    side = reach_mask(h, cut[0][0], h.all_mask)
    return frozenset(iter_bits(side))


def drawing_rotation(name: str) -> list[list[int]]:
    """Counter-clockwise neighbour order at each vertex of a straight-line planar drawing."""
    drawing = DRAWINGS[name]
    if drawing.coords is None or name not in PLANAR_FIXTURES:
        raise GraphError(f"fixture {name!r} has no planar drawing")
    g = fixture(name)
    pts = [drawing.coords[lab] for lab in drawing.labels]
    order = []
    for v in range(g.n):
        x0, y0 = pts[v]
        order.append(sorted(g.neighbours(v), key=lambda w: math.atan2(pts[w][1] - y0, pts[w][0] - x0)))
    return order


def bundled_graph6() -> list[tuple[str, str]]:
    """``(name, graph6)`` pairs from the packaged fixture bundle and its index sidecar."""
    data = resources.files("bracekit") / "data"
    lines = (data / "fixtures.g6").read_text().split()
    names = (data / "fixtures.idx").read_text().split()
    if len(lines) != len(names):
        raise GraphError("fixture bundle and index have different lengths")
    return list(zip(names, lines))


def export_bundle() -> tuple[str, str]:
    """Text of the graph6 bundle and its name index, in ``FIXTURE_IDS`` order."""
    g6 = "".join(graph6_encode(fixture(name)) + "\n" for name in FIXTURE_IDS)
    idx = "".join(name + "\n" for name in FIXTURE_IDS)
    return g6, idx


def load_bundled_corpus(filename: str) -> list[Graph]:
    text = (resources.files("bracekit") / "data" / filename).read_text()
    return [graph6_decode(line) for line in text.split()]
