"""Executable checks of the matching-theory statements on bundled graphs.

Every entry is a named statement plus the instances it is checked on.  An
entry PASSes when the statement holds on all of them and every caption-level
fact it relies on (``CAPTION_FACTS``) agrees with what is computed.  Budget
exhaustion gives INCONCLUSIVE, never PASS.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable

from .constructions import diwan_family, principal_cut_is_induced_matching, star_product, trisum
from .cuts import (
    contract_side,
    cut_around,
    decompose,
    find_nontrivial_tight_cut,
    is_quasi_tight,
    verify_cut_balance,
    verify_tight_cut_shape,
)
from .errors import BudgetExceeded, CutHypothesisError
from .factors import (
    cycles_of,
    has_two_factor,
    is_strictly_two_factor_hamiltonian,
    is_two_factor_hamiltonian,
    pairs_share_two_factor,
    _general_two_factors,
)
from .fixtures import FIXTURE_IDS, PLANAR_FIXTURES, PRINCIPAL_CUTS, fixture, load_bundled_corpus, vertex_of
from .graph import (
    Graph,
    bipartition,
    bridges,
    girth,
    is_bipartite,
    is_connected,
    is_k_connected,
    random_regular_graph,
)
from .isomorphism import are_isomorphic
from .matching import (
    enumerate_perfect_matchings,
    has_perfect_matching,
    is_brace,
    is_k_extendable,
    is_matching_covered,
    konig_partition,
)
from .pfaffian import Verdict, check_pfaffian_girth_theorem, is_pfaffian
from .planar import (
    RotationSystem,
    all_four_cycles,
    count_quadrilateral_faces,
    edge_disjoint_partner,
    fixture_rotation,
    four_cycle_splits,
    planar_rotation,
    three_edge_disjoint_four_cycles,
    trace_faces,
)

# Facts stated in figure captions and prose about the named graphs.
CAPTION_FACTS: dict[str, dict[str, object]] = {
    "K33": {"vertices": 6, "edges": 9, "girth": 4, "2fh": True, "pfaffian": False, "brace": True},
    "Heawood": {"vertices": 14, "edges": 21, "girth": 6, "2fh": True, "pfaffian": True, "brace": True},
    "Cube": {"vertices": 8, "edges": 12, "2fh": False, "pfaffian": True, "brace": True},
    "K4": {"2fh": True},
    "Prism": {"2fh": False, "cut_quasi_tight": False},
    "Fig2b": {"bipartite": True, "2fh": True},
    "Fig2c": {"has_2factor": False, "2fh": True},
    "Fig4a": {"has_2factor": False},
    "Fig4b": {"has_pm": False, "cut_quasi_tight": True},
    "Fig5a": {"bipartite": True, "2fh": True},
    "Fig5b": {"bipartite": True, "2fh": False},
    "Fig6a": {"bipartite": True, "2fh": False},
    "Fig6b": {"bipartite": True, "2fh": True},
    "Fig7a": {"cubic": True, "has_bridge": True, "has_pm": False},
    "Fig7b": {"has_pm": False, "cut_quasi_tight": True},
}


@dataclass(frozen=True)
class Entry:
    name: str
    verdict: Verdict
    evidence: str


@dataclass
class SuiteReport:
    entries: list[Entry]

    @property
    def ok(self) -> bool:
        return all(e.verdict is Verdict.PASS for e in self.entries)

    def lines(self) -> list[str]:
        return [f"{e.verdict.value:<12} {e.name}: {e.evidence}" for e in self.entries]

    def __getitem__(self, name: str) -> Entry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


class _Failed(Exception):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise _Failed(message)


class _Context:
    """Fixtures (with overrides), caption facts and a few shared constructions."""

    def __init__(self, overrides: dict[str, Graph], facts: dict[str, dict[str, object]]):
        self.overrides = overrides
        self.facts = facts

    def g(self, name: str) -> Graph:
        return self.overrides.get(name) or fixture(name)

    def cut_side(self, name: str) -> frozenset[int]:
        from .graph import iter_bits, reach_mask

        g = self.g(name)
        cut = [(vertex_of(name, a), vertex_of(name, b)) for a, b in PRINCIPAL_CUTS[name]]
        h = g.without_edges(cut)
        return frozenset(iter_bits(reach_mask(h, cut[0][0], h.all_mask)))

    def computed(self, name: str, fact: str) -> object:
        g = self.g(name)
        if fact == "vertices":
            return g.n
        if fact == "edges":
            return g.m
        if fact == "girth":
            return girth(g)
        if fact == "2fh":
            return is_two_factor_hamiltonian(g).hamiltonian
        if fact == "pfaffian":
            return is_pfaffian(g)
        if fact == "brace":
            return is_brace(g)
        if fact == "bipartite":
            return is_bipartite(g)
        if fact == "cubic":
            return g.is_cubic()
        if fact == "has_2factor":
            return has_two_factor(g)
        if fact == "has_pm":
            return has_perfect_matching(g)
        if fact == "has_bridge":
            return bool(bridges(g))
        if fact == "cut_quasi_tight":
            return is_quasi_tight(g, cut_around(g, self.cut_side(name)))
        raise KeyError(fact)

    def check_facts(self, name: str, keys: Iterable[str]) -> list[str]:
        notes = []
        for key in keys:
            if key not in self.facts.get(name, {}):
                continue
            want, got = self.facts[name][key], self.computed(name, key)
            _require(want == got, f"{name}: caption says {key}={want}, computed {got}")
            notes.append(f"{name}.{key}={got}")
        return notes


def _cubic_bipartite_products(ctx: _Context) -> dict[str, Graph]:
    K, H, C = ctx.g("K33"), ctx.g("Heawood"), ctx.g("Cube")
    return {
        "K33*K33": star_product(K, 0, K, 0).graph,
        "K33*Heawood": star_product(K, 0, H, 0).graph,
        "Cube*K33": star_product(C, 0, K, 0).graph,
        "Cube*Cube": star_product(C, 0, C, 0).graph,
    }


def _trisum_instances(ctx: _Context) -> dict[str, Graph]:
    C = ctx.g("Cube")
    face = (0, 1, 2, 3)
    all_c = [(0, 1), (1, 2), (2, 3), (0, 3)]
    return {
        "Cube^3 trisum, S=E(C)": trisum((C, C, C), (face,) * 3, all_c),
        "Cube^3 trisum, S={}": trisum((C, C, C), (face,) * 3, ()),
    }


# --------------------------------------------------------------------------
# entries


def _fixture_sanity(ctx):
    notes = []
    for name in ("K33", "Heawood", "Cube"):
        notes += ctx.check_facts(name, ("vertices", "edges", "girth"))
    return "; ".join(notes)


def _konig(ctx):
    graphs = {n: ctx.g(n) for n in FIXTURE_IDS if ctx.g(n).is_cubic() and is_bipartite(ctx.g(n))}
    graphs.update(_cubic_bipartite_products(ctx))
    for name, g in graphs.items():
        parts = konig_partition(g)
        union = [e for p in parts for e in p]
        _require(len(parts) == 3 and len(union) == len(set(union)) == g.m, f"{name}: bad partition")
        _require(all(2 * len(p) == g.n for p in parts), f"{name}: a part is not perfect")
    return f"{len(graphs)} cubic bipartite graphs split into 3 perfect matchings"


def _tight_cut_shape(ctx):
    hosts = {"K33": ctx.g("K33"), "Heawood": ctx.g("Heawood")}
    prods = _cubic_bipartite_products(ctx)
    hosts.update({k: prods[k] for k in ("K33*K33", "K33*Heawood")})
    total = 0
    for name, g in hosts.items():
        _require(is_k_connected(g, 3), f"{name} is not 3-connected")
        rep = verify_tight_cut_shape(g)
        _require(not rep.mismatches, f"{name}: {len(rep.mismatches)} cuts disagree")
        total += rep.cuts_checked
    return f"{total} non-trivial cuts over {', '.join(hosts)}; tight <=> induced 3-matching everywhere"


def _contractions(ctx, g: Graph):
    c = find_nontrivial_tight_cut(g)
    if c is None:
        return None
    return c, contract_side(g, c.X), contract_side(g, c.complement)


def _tight_cut_preservation(ctx):
    count = 0
    for name, g in _cubic_bipartite_products(ctx).items():
        todo = [g]
        while todo:
            h = todo.pop()
            res = _contractions(ctx, h)
            if res is None:
                continue
            for part in res[1:]:
                p = part.graph
                _require(p.is_cubic() and is_bipartite(p) and is_k_connected(p, 3), f"{name}: contraction breaks shape")
                count += 1
                todo.append(p)
    return f"{count} contractions, all cubic, bipartite and 3-connected"


def _tight_cut_2fh(ctx):
    notes = []
    for name, g in _cubic_bipartite_products(ctx).items():
        c, c1, c2 = _contractions(ctx, g)
        whole = is_two_factor_hamiltonian(g).hamiltonian
        parts = [is_two_factor_hamiltonian(x.graph).hamiltonian for x in (c1, c2)]
        _require(whole == all(parts), f"{name}: 2FH={whole} but contractions {parts}")
        notes.append(f"{name} {whole}/{parts[0]},{parts[1]}")
    return "; ".join(notes)


def _principal_induced(ctx):
    K, H, C = ctx.g("K33"), ctx.g("Heawood"), ctx.g("Cube")
    n = 0
    for g1, g2 in ((K, K), (K, H), (H, K), (C, K), (H, H)):
        for v in (0, 1):
            sp = star_product(g1, v, g2, 0)
            _require(principal_cut_is_induced_matching(sp.graph, sp.cut), "principal cut not induced")
            n += 1
    return f"{n} cubic bipartite star products"


def _star_from_cut(ctx):
    K, H, C = ctx.g("K33"), ctx.g("Heawood"), ctx.g("Cube")
    n = 0
    for (a, ga), (b, gb) in [(("K33", K), ("K33", K)), (("K33", K), ("Heawood", H)), (("Cube", C), ("K33", K))]:
        g = star_product(ga, 0, gb, 0).graph
        c, c1, c2 = _contractions(ctx, g)
        # rebuild the star product from the two contractions along the cut edges
        pos1 = {v: i for i, v in enumerate(c1.kept)}
        pos2 = {v: i for i, v in enumerate(c2.kept)}
        pairing = {}
        for u, v in c.delta:
            x, y = (u, v) if u in c.X else (v, u)
            pairing[pos1[x]] = pos2[y]
        rebuilt = star_product(c1.graph, c1.marker, c2.graph, c2.marker, pairing).graph
        _require(are_isomorphic(rebuilt, g), f"{a}*{b}: contractions do not rebuild the host")
        pieces = [p.graph for p in decompose(g).pieces]
        _require(len(pieces) == 2, f"{a}*{b}: {len(pieces)} pieces")
        ok = (are_isomorphic(pieces[0], ga) and are_isomorphic(pieces[1], gb)) or (
            are_isomorphic(pieces[0], gb) and are_isomorphic(pieces[1], ga)
        )
        _require(ok, f"{a}*{b}: pieces are not the factors")
        n += 1
    return f"{n} products rebuilt from their tight-cut contractions and decomposed back to the factors"


def _reduction_to_braces(ctx):
    corpus = load_bundled_corpus("cubic_bipartite_6_14.g6")
    K, H = ctx.g("K33"), ctx.g("Heawood")
    fh = three = 0
    for g in corpus:
        whole = is_two_factor_hamiltonian(g).hamiltonian
        if whole:
            fh += 1
            _require(is_k_connected(g, 3), "2FH cubic bipartite graph that is not 3-connected")
        if not is_k_connected(g, 3):
            continue  # tight cuts of 2-connected hosts need not be 3-edge cuts
        three += 1
        pieces = [p.graph for p in decompose(g).pieces]
        parts = [is_two_factor_hamiltonian(p).hamiltonian for p in pieces]
        _require(whole == all(parts), f"{g}: 2FH={whole}, braces {parts}")
        if whole:
            _require(all(are_isomorphic(p, K) or are_isomorphic(p, H) for p in pieces), "2FH brace other than K33/Heawood")
    return (f"{len(corpus)} cubic bipartite graphs (n<=14): the {fh} 2FH ones are 3-connected; "
            f"on the {three} 3-connected ones 2FH <=> all braces 2FH")


def _decomposition_unique(ctx):
    graphs = list(_cubic_bipartite_products(ctx).values()) + [ctx.g(n) for n in ("Prism", "K33", "Cube")]
    graphs += [g for g in load_bundled_corpus("cubic_bipartite_6_14.g6") if g.n <= 12]
    for g in graphs:
        a = [p.graph for p in decompose(g, order="ascending").pieces]
        b = [p.graph for p in decompose(g, order="descending").pieces]
        used = [False] * len(b)
        _require(len(a) == len(b), "piece counts differ between cut orders")
        for x in a:
            j = next((j for j, y in enumerate(b) if not used[j] and are_isomorphic(x, y)), None)
            _require(j is not None, "piece multisets differ between cut orders")
            used[j] = True
    return f"{len(graphs)} graphs give the same pieces for ascending and descending cut orders"


def _pfaffian_pieces(ctx):
    graphs = {n: ctx.g(n) for n in FIXTURE_IDS if is_matching_covered(ctx.g(n))}
    graphs.update(_cubic_bipartite_products(ctx))
    for name, g in graphs.items():
        whole = is_pfaffian(g)
        parts = [is_pfaffian(p.graph) for p in decompose(g).pieces]
        _require(whole == all(parts), f"{name}: Pfaffian={whole}, pieces {parts}")
    return f"{len(graphs)} matching covered graphs: Pfaffian <=> all bricks and braces Pfaffian"


def _extendability(ctx):
    names = [n for n in FIXTURE_IDS if is_brace(ctx.g(n)) and ctx.g(n).n >= 6]
    for n in names:
        g = ctx.g(n)
        _require(is_k_extendable(g, 2), f"{n} is not 2-extendable")
        _require(is_k_extendable(g, 1) and is_k_connected(g, 3), f"{n}: 2-extendable without 1-extendable/3-connected")
    return f"checked on {', '.join(names)}"


def _planar_faces(ctx):
    notes = []
    _require(count_quadrilateral_faces(fixture_rotation("Cube")) == 6, "Cube does not have exactly 6 quadrilateral faces")
    for name in PLANAR_FIXTURES:
        g = ctx.g(name)
        if not is_brace(g) or name == "C4":
            continue
        r = RotationSystem(g, fixture_rotation(name).order)
        tr = trace_faces(r)
        _require(tr.planar, f"{name}: bundled rotation is not planar")
        _require(sum(len(f) for f in tr.faces) == 2 * g.m, "face lengths do not sum to 2|E|")
        _require(all(len(f) % 2 == 0 and len(f) >= 4 for f in tr.faces), "odd or short face in a bipartite brace")
        c4 = count_quadrilateral_faces(r)
        _require(c4 >= 6 and 2 * g.m >= 3 * g.n, f"{name}: {c4} quadrilateral faces")
        notes.append(f"{name}: {c4} quadrilateral faces")
    return "; ".join(notes)


def _four_cycle_split(ctx):
    graphs = dict(_trisum_instances(ctx))
    graphs["Cube"] = ctx.g("Cube")
    splits = 0
    for name, g in graphs.items():
        if not is_brace(g):
            continue
        for _, g1, g2 in four_cycle_splits(g):
            _require(is_brace(g1) and is_brace(g2), f"{name}: split into a non-brace")
            splits += 1
    _require(splits > 0, "no 4-cycle splits found to check")
    return f"{splits} splits of braces along a 4-cycle, both sides braces"


def _edge_disjoint_partner(ctx):
    checked = 0
    for name in PLANAR_FIXTURES:
        g = ctx.g(name)
        if name == "C4" or not is_brace(g):
            continue
        for c in all_four_cycles(g):
            _require(edge_disjoint_partner(g, c) is not None, f"{name}: {c} has no edge-disjoint partner")
            checked += 1
    return f"{checked} 4-cycles in planar braces other than C4 all have an edge-disjoint partner"


def _nonplanar_pfaffian(ctx):
    name, g = next(iter(_trisum_instances(ctx).items()))
    _require(is_brace(g), f"{name} is not a brace")
    _require(is_pfaffian(g), f"{name} is not Pfaffian")
    _require(planar_rotation(g) is None, f"{name} has a planar rotation")
    triple = three_edge_disjoint_four_cycles(g)
    _require(triple is not None, f"{name}: no three edge-disjoint 4-cycles")
    return f"{name}: cubic non-planar Pfaffian brace on {g.n} vertices, cycles {triple}"


def _girth_theorem(ctx):
    braces = {n: ctx.g(n) for n in FIXTURE_IDS if is_brace(ctx.g(n))}
    for i, g in enumerate(load_bundled_corpus("cubic_bipartite_6_14.g6")):
        if is_brace(g):
            braces[f"corpus#{i}"] = g
    notes = ctx.check_facts("Heawood", ("pfaffian", "girth")) + ctx.check_facts("K33", ("pfaffian",))
    high_girth_pfaffian = []
    for name, g in braces.items():
        v = check_pfaffian_girth_theorem(g)
        if v.verdict is Verdict.INCONCLUSIVE:
            raise BudgetExceeded(f"Pfaffian search on {name}", 0)
        _require(v.verdict is Verdict.PASS, f"{name}: {v.reason}")
        if girth(g) >= 6 and is_pfaffian(g):
            high_girth_pfaffian.append(g)
    _require(len(high_girth_pfaffian) >= 1 and all(are_isomorphic(g, fixture("Heawood")) for g in high_girth_pfaffian),
             "Heawood is not the unique Pfaffian brace of girth >= 6")
    return f"{len(braces)} braces pass; " + "; ".join(notes)


def _unique_pfaffian_2fh(ctx):
    corpus = load_bundled_corpus("cubic_bipartite_6_14.g6")
    hits = [g for g in corpus if is_brace(g) and is_two_factor_hamiltonian(g).hamiltonian and is_pfaffian(g)]
    _require(len(hits) == 1 and are_isomorphic(hits[0], fixture("Heawood")), f"{len(hits)} Pfaffian 2FH cubic braces")
    notes = ctx.check_facts("Heawood", ("2fh", "pfaffian", "brace"))
    return "only Heawood in the cubic bipartite corpus; " + "; ".join(notes)


def _star_products_k4minus(ctx):
    km = ctx.g("K4minus")
    deg3 = [v for v in range(km.n) if km.degree(v) == 3]
    found = {"Fig2b": False, "Fig2c": False}
    for v1 in deg3:
        for v2 in deg3:
            for perm in permutations(km.neighbours(v2)):
                g = star_product(km, v1, km, v2, dict(zip(km.neighbours(v1), perm))).graph
                for name in found:
                    found[name] |= are_isomorphic(g, ctx.g(name))
    _require(all(found.values()), f"not every figure is a star product of K4^-: {found}")
    _require(not is_bipartite(km), "K4^- should not be bipartite")
    notes = ctx.check_facts("Fig2b", ("bipartite", "2fh")) + ctx.check_facts("Fig2c", ("has_2factor", "2fh"))
    return "both figures are star products of two non-bipartite K4^-; " + "; ".join(notes)


def _bridgeless_star_lemma(ctx):
    """Cubic bridgeless star products: 2FH <=> factors 2FH and principal cut quasi-tight."""
    K4, prism = ctx.g("K4"), ctx.g("Prism")
    _require(are_isomorphic(star_product(K4, 0, K4, 0).graph, prism), "Prism is not K4*K4")
    notes = ctx.check_facts("K4", ("2fh",)) + ctx.check_facts("Prism", ("2fh", "cut_quasi_tight"))
    cases = [("Prism", prism, ctx.cut_side("Prism"), (K4, K4))]
    for name, g in _cubic_bipartite_products(ctx).items():
        a, b = name.split("*")
        cases.append((name, g, None, (ctx.g(a), ctx.g(b))))
    for name, g, side, factors in cases:
        _require(not bridges(g) and g.is_cubic(), f"{name} is not cubic bridgeless")
        if side is None:
            side = frozenset(range(factors[0].n - 1))
        lhs = is_two_factor_hamiltonian(g).hamiltonian
        rhs = all(is_two_factor_hamiltonian(f).hamiltonian for f in factors) and is_quasi_tight(g, cut_around(g, side))
        _require(lhs == rhs, f"{name}: 2FH={lhs}, right-hand side {rhs}")
    return f"{len(cases)} bridgeless cubic star products; " + "; ".join(notes)


def _bridge_examples(ctx):
    notes = ctx.check_facts("Fig7a", ("cubic", "has_bridge", "has_pm"))
    notes += ctx.check_facts("Fig7b", ("has_pm", "cut_quasi_tight"))
    notes += ctx.check_facts("Fig4a", ("has_2factor",))
    notes += ctx.check_facts("Fig4b", ("has_pm", "cut_quasi_tight"))
    g7a, g7b, K4 = ctx.g("Fig7a"), ctx.g("Fig7b"), ctx.g("K4")
    v = vertex_of("Fig7a", "A14")
    _require(any(are_isomorphic(star_product(g7a, v, K4, 0, dict(zip(g7a.neighbours(v), p))).graph, g7b)
                 for p in permutations(K4.neighbours(0))), "Fig7b is not a star product of Fig7a and K4")
    return "; ".join(notes) + f"; bridges of Fig7a: {len(bridges(g7a))}"


def _find_star(g: Graph, factor: Graph) -> bool:
    """Is ``g`` a star product of two copies of ``factor`` (any vertices, any pairing)?"""
    deg3 = [v for v in range(factor.n) if factor.degree(v) == 3]
    for v1 in deg3:
        for v2 in deg3:
            for perm in permutations(factor.neighbours(v2)):
                sp = star_product(factor, v1, factor, v2, dict(zip(factor.neighbours(v1), perm)))
                if are_isomorphic(sp.graph, g):
                    return True
    return False


def _proposition_refuted(ctx):
    f5a, f5b, f6a, f6b = (ctx.g(n) for n in ("Fig5a", "Fig5b", "Fig6a", "Fig6b"))
    _require(_find_star(f5b, f5a), "Fig5b is not a star product of two Fig5a")
    _require(_find_star(f6b, f6a), "Fig6b is not a star product of two Fig6a")
    notes = ctx.check_facts("Fig5a", ("bipartite", "2fh")) + ctx.check_facts("Fig5b", ("bipartite", "2fh"))
    notes += ctx.check_facts("Fig6a", ("bipartite", "2fh")) + ctx.check_facts("Fig6b", ("bipartite", "2fh"))
    # reverse direction fails: factors 2FH, product not
    _require(is_two_factor_hamiltonian(f5a).hamiltonian and not is_two_factor_hamiltonian(f5b).hamiltonian,
             "Fig5 pair does not refute factors-2FH => product-2FH")
    # forward direction fails, even when 2FH must come with a 2-factor
    _require(is_strictly_two_factor_hamiltonian(f6b) and not is_two_factor_hamiltonian(f6a).hamiltonian,
             "Fig6 pair does not refute product-2FH => factors-2FH")
    return "; ".join(notes)


def _qualifying_cuts(ctx):
    """Principal cuts of the bipartite star products handled by the suite."""
    for name, g in _cubic_bipartite_products(ctx).items():
        a = name.split("*")[0]
        yield name, g, frozenset(range(ctx.g(a).n - 1))
    for name in ("Fig5b", "Fig6b"):
        yield name, ctx.g(name), ctx.cut_side(name)


def _cut_balance(ctx):
    held = skipped = 0
    for name, g, side in _qualifying_cuts(ctx):
        for X in (side, frozenset(range(g.n)) - side):
            try:
                bal = verify_cut_balance(g, cut_around(g, X))
            except CutHypothesisError:
                skipped += 1
                continue
            _require(bal.holds, f"{name}: balance fails {bal}")
            held += 1
    _require(held > 0, "no qualifying cut met")
    return f"balance equations hold on {held} qualifying cut sides ({skipped} sides fail the hypotheses)"


def _bipartite_cubic_star(ctx):
    n = 0
    for name, g in _cubic_bipartite_products(ctx).items():
        a, b = name.split("*")
        lhs = is_two_factor_hamiltonian(g).hamiltonian
        rhs = is_two_factor_hamiltonian(ctx.g(a)).hamiltonian and is_two_factor_hamiltonian(ctx.g(b)).hamiltonian
        _require(lhs == rhs, f"{name}: 2FH={lhs} but factors give {rhs}")
        n += 1
    return f"{n} cubic bipartite star products"


def _shared_two_factor(ctx):
    n = 0
    for name, g in _cubic_bipartite_products(ctx).items():
        a, b = name.split("*")
        cut = cut_around(g, range(ctx.g(a).n - 1))
        pairs = pairs_share_two_factor(g, cut.delta)
        _require(all(f is not None for f in pairs.values()), f"{name}: some cut pair shares no 2-factor")
        lhs = is_two_factor_hamiltonian(g).hamiltonian
        rhs = is_two_factor_hamiltonian(ctx.g(a)).hamiltonian and is_two_factor_hamiltonian(ctx.g(b)).hamiltonian
        _require(lhs == rhs, f"{name}: equivalence fails")
        n += 1
    return f"{n} products: every pair of principal-cut edges lies in a common 2-factor, and the equivalence holds"


def _complements(ctx):
    names = [n for n in FIXTURE_IDS if ctx.g(n).is_cubic()]
    for n in names:
        g = ctx.g(n)
        direct = set(_general_two_factors(g))
        via_pm = {tuple(sorted(g.edges - set(m))) for m in enumerate_perfect_matchings(g)}
        _require(direct == via_pm, f"{n}: 2-factors differ from perfect-matching complements")
        if is_two_factor_hamiltonian(g).hamiltonian:
            _require(all(len(cycles_of(f)) == 1 for f in via_pm), f"{n}: G - M not Hamiltonian")
    return f"{len(names)} cubic fixtures"


def _random_cubic(seed: int = 2024, count: int = 100) -> list[Graph]:
    rng = random.Random(seed)
    return [random_regular_graph(rng.choice(range(4, 17, 2)), 3, rng) for _ in range(count)]


def _matching_covered_cubic(ctx):
    graphs = [ctx.g(n) for n in FIXTURE_IDS if ctx.g(n).is_cubic()] + _random_cubic()
    for g in graphs:
        _require(is_matching_covered(g) == is_k_connected(g, 2), f"{g}: matching covered vs 2-connected disagree")
    return f"{len(graphs)} cubic graphs (fixtures and seeded random)"


def _petersen(ctx):
    graphs = [ctx.g(n) for n in FIXTURE_IDS if ctx.g(n).is_cubic()] + _random_cubic()
    checked = 0
    for g in graphs:
        if not bridges(g):
            _require(has_perfect_matching(g), f"{g}: bridgeless cubic without perfect matching")
            checked += 1
    return f"{checked} bridgeless cubic graphs all have perfect matchings"


def _family(ctx):
    recipes = ["K33", "K33\nK33 0", "K33\nHeawood 0", "K33\nHeawood 2\nK33 9 2,0,1", "Heawood\nHeawood 5 1,2,0"]
    for text in recipes:
        g = diwan_family(text).graph
        _require(g.is_cubic() and is_bipartite(g) and is_two_factor_hamiltonian(g).hamiltonian,
                 f"recipe {text!r} gives a graph that is not cubic bipartite 2FH")
    return f"{len(recipes)} recipes give cubic bipartite 2FH graphs"


ENTRIES: list[tuple[str, Callable[[_Context], str]]] = [
    ("fixture sanity", _fixture_sanity),
    ("König partition", _konig),
    ("tight-cut shape (McCuaig)", _tight_cut_shape),
    ("tight-cut contractions stay cubic, bipartite, 3-connected (McCuaig)", _tight_cut_preservation),
    ("tight-cut contractions preserve 2-factor Hamiltonicity", _tight_cut_2fh),
    ("principal cut is an induced 3-matching", _principal_induced),
    ("tight-cut contractions rebuild the star product", _star_from_cut),
    ("reduction to braces", _reduction_to_braces),
    ("decomposition does not depend on cut order", _decomposition_unique),
    ("Pfaffian iff all bricks and braces are (Vazirani-Yannakakis)", _pfaffian_pieces),
    ("2-extendable braces are 1-extendable and 3-connected (Plummer)", _extendability),
    ("planar braces have six quadrilateral faces", _planar_faces),
    ("4-cycle splits of braces are braces (McCuaig)", _four_cycle_split),
    ("edge-disjoint partner 4-cycles in planar braces", _edge_disjoint_partner),
    ("non-planar Pfaffian braces have three edge-disjoint 4-cycles", _nonplanar_pfaffian),
    ("Pfaffian braces other than Heawood have girth 4", _girth_theorem),
    ("Heawood is the only Pfaffian 2FH cubic brace", _unique_pfaffian_2fh),
    ("bipartite star products of non-bipartite K4^-", _star_products_k4minus),
    ("bridgeless cubic star products: 2FH iff factors 2FH and cut quasi-tight", _bridgeless_star_lemma),
    ("bridges and missing perfect matchings", _bridge_examples),
    ("bipartite star-product proposition fails both ways", _proposition_refuted),
    ("cut balance in bipartite graphs", _cut_balance),
    ("cubic bipartite star products: 2FH iff factors 2FH", _bipartite_cubic_star),
    ("principal-cut pairs share 2-factors", _shared_two_factor),
    ("cubic 2-factors are perfect-matching complements", _complements),
    ("cubic graphs: matching covered iff 2-connected", _matching_covered_cubic),
    ("Petersen: bridgeless cubic graphs have perfect matchings", _petersen),
    ("iterated star products of K33 and Heawood are 2FH", _family),
]


def paper_suite(
    fixtures: dict[str, Graph] | None = None,
    facts: dict[str, dict[str, object]] | None = None,
    only: Iterable[str] | None = None,
) -> SuiteReport:
    """Run every entry.  ``fixtures`` replaces named graphs and ``facts`` overrides
    caption facts (both exist for fault-injection tests)."""
    merged = {k: dict(v) for k, v in CAPTION_FACTS.items()}
    for name, upd in (facts or {}).items():
        merged.setdefault(name, {}).update(upd)
    ctx = _Context(dict(fixtures or {}), merged)
    wanted = set(only) if only is not None else None
    entries = []
    for name, fn in ENTRIES:
        if wanted is not None and name not in wanted:
            continue
        try:
            evidence = fn(ctx)
            verdict = Verdict.PASS
        except BudgetExceeded as exc:
            verdict, evidence = Verdict.INCONCLUSIVE, str(exc)
        except _Failed as exc:
            verdict, evidence = Verdict.FAIL, str(exc)
        except Exception as exc:  # a broken fixture must show up as a failure, not a crash
            verdict, evidence = Verdict.FAIL, f"{type(exc).__name__}: {exc}"
        entries.append(Entry(name, verdict, evidence))
    return SuiteReport(entries)
