"""``bracekit`` command line.

Exit codes: 0 success (every property holds / every entry passes), 1 a
property is false or an entry fails, 2 some computation ran out of budget
(and nothing failed outright), 3 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .constructions import diwan_family, star_product, trisum
from .cuts import decompose
from .errors import BracekitError, BudgetExceeded
from .fixtures import FIXTURE_IDS, fixture
from .graph import Graph, graph6_decode, graph6_encode, read_graph6_lines
from .matching import is_matching_covered
from .scan import PREDICATE_NAMES, Budgets, emit_report, parse_predicates, predicate, scan_corpus

EXIT_OK, EXIT_FALSE, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


def load_graphs(target: str) -> list[tuple[str, Graph]]:
    """A fixture name, a graph6 file (``-`` for stdin) or a literal graph6 string."""
    if target in FIXTURE_IDS:
        return [(target, fixture(target))]
    if target == "-":
        return [(f"#{i}", g) for i, _, g in read_graph6_lines(sys.stdin)]
    path = Path(target)
    if path.exists():
        with path.open() as fh:
            return [(f"{path.name}#{i}", g) for i, _, g in read_graph6_lines(fh)]
    return [(target, graph6_decode(target))]


def load_one(target: str) -> Graph:
    graphs = load_graphs(target)
    if len(graphs) != 1:
        raise BracekitError(f"{target}: expected one graph, found {len(graphs)}")
    return graphs[0][1]


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


# --------------------------------------------------------------------------
# verbs


def cmd_check(args) -> int:
    props = parse_predicates(args.prop) if args.prop else []
    budgets = Budgets.from_env()
    false = over = False
    for label, g in load_graphs(args.target):
        cells = []
        for name in props + (["matching-covered"] if args.matching_covered else []):
            try:
                value = is_matching_covered(g) if name == "matching-covered" else predicate(name)(g, budgets)[0]
            except BudgetExceeded as exc:
                cells.append(f"{name}=inconclusive ({exc})")
                over = True
                continue
            cells.append(f"{name}={str(value).lower()}")
            false |= not value
        print(f"{label} n={g.n} m={g.m} " + " ".join(cells))
    return EXIT_FALSE if false else EXIT_BUDGET if over else EXIT_OK


def cmd_decompose(args) -> int:
    kw = {"subset_budget": args.subset_budget} if args.subset_budget is not None else {}
    for label, g in load_graphs(args.target):
        result = decompose(g, **kw)
        print(f"{label}: {len(result.pieces)} pieces, {len(result.cut_trace)} tight cuts")
        for piece in result.pieces:
            print(f"  {piece.kind:<6} n={piece.graph.n:<3} {graph6_encode(piece.graph)}")
    return EXIT_OK


def cmd_star(args) -> int:
    g1, g2 = load_one(args.first), load_one(args.second)
    pairing = None
    if args.pairing:
        perm = _ints(args.pairing)
        left, right = g1.neighbours(args.v1), g2.neighbours(args.v2)
        if sorted(perm) != list(range(len(right))):
            raise BracekitError(f"--pairing must be a permutation of 0..{len(right) - 1}")
        pairing = {left[i]: right[p] for i, p in enumerate(perm)}
    sp = star_product(g1, args.v1, g2, args.v2, pairing)
    print(graph6_encode(sp.graph))
    if args.verbose:
        print("principal cut:", " ".join(f"{u}-{v}" for u, v in sorted(sp.cut.delta)), file=sys.stderr)
    return EXIT_OK


def cmd_trisum(args) -> int:
    graphs = [load_one(t) for t in args.graphs]
    cycles = [_ints(c) for c in args.cycle]
    if len(cycles) == 1:
        cycles *= 3
    remove = []
    for item in args.remove or []:
        a, _, b = item.partition("-")
        remove.append((int(a), int(b)))
    print(graph6_encode(trisum(graphs, cycles, remove)))
    return EXIT_OK


def cmd_family(args) -> int:
    text = sys.stdin.read() if args.recipe == "-" else Path(args.recipe).read_text()
    result = diwan_family(text)
    print(graph6_encode(result.graph))
    if args.verbose:
        for step, (g, cut) in enumerate(result.cuts, 2):
            print(f"step {step}: n={g.n} cut {sorted(cut.delta)}", file=sys.stderr)
    return EXIT_OK


def cmd_scan(args) -> int:
    filters = parse_predicates(args.filter)
    checks = parse_predicates(args.check)
    if args.input == "-":
        report = scan_corpus(sys.stdin, filters, checks, Budgets.from_env(), args.workers)
    else:
        with open(args.input) as fh:
            report = scan_corpus(fh, filters, checks, Budgets.from_env(), args.workers)
    text = emit_report(report, args.format)
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)
    if args.figures:
        from .plotting import write_figures

        write_figures(report, args.figures)
    agg = report.aggregate()
    print(
        f"{agg['graphs']} graphs, {agg['passed_filters']} passed filters, "
        f"{len(agg['survivors'])} survivors, {agg['budget_exceeded']} over budget",
        file=sys.stderr,
    )
    return EXIT_BUDGET if report.inconclusive else EXIT_OK


def cmd_paper_suite(args) -> int:
    from .pfaffian import Verdict
    from .suite import paper_suite

    report = paper_suite(only=args.only or None)
    for line in report.lines():
        print(line)
    verdicts = {e.verdict for e in report.entries}
    if Verdict.FAIL in verdicts:
        return EXIT_FALSE
    if Verdict.INCONCLUSIVE in verdicts:
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bracekit",
        description="Matching-theory checks on small graphs and graph6 corpora.",
        epilog="exit status: 0 ok, 1 property false / entry failed, 2 budget exceeded, 3 bad input. "
        "Budgets default from BRACEKIT_MATCHING_BUDGET, BRACEKIT_CYCLE_BUDGET, BRACEKIT_SUBSET_BUDGET.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    graph_help = f"fixture name ({', '.join(FIXTURE_IDS)}), graph6 file, '-' or a graph6 string"

    p = sub.add_parser("check", help="evaluate properties of graphs")
    p.add_argument("target", help=graph_help)
    p.add_argument("--prop", action="append", help=f"property, repeatable or comma-separated: {', '.join(PREDICATE_NAMES)}")
    p.add_argument("--matching-covered", action="store_true", help="also test matching coveredness")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="tight cut decomposition into bricks and braces")
    p.add_argument("target", help=graph_help)
    p.add_argument("--subset-budget", type=int, help="largest cut side searched in non-cubic hosts")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("star", help="star product of two graphs at degree-3 vertices")
    p.add_argument("first", help=graph_help)
    p.add_argument("v1", type=int)
    p.add_argument("second", help=graph_help)
    p.add_argument("v2", type=int)
    p.add_argument("--pairing", help="i-th neighbour of v1 goes to the pairing[i]-th neighbour of v2, e.g. 2,0,1")
    p.add_argument("-v", "--verbose", action="store_true", help="print the principal cut on stderr")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("trisum", help="glue three bipartite graphs along a 4-cycle")
    p.add_argument("graphs", nargs=3, help=graph_help)
    p.add_argument("--cycle", action="append", required=True, help="a,b,c,d; give once for all graphs or three times")
    p.add_argument("--remove", action="append", help="shared-cycle edge to delete as positions, e.g. 0-1")
    p.set_defaults(func=cmd_trisum)

    p = sub.add_parser("family", help="iterated star products from a recipe file")
    p.add_argument("recipe", help="recipe file or '-'")
    p.add_argument("-v", "--verbose", action="store_true", help="print each principal cut on stderr")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("scan", help="filter and check every graph of a graph6 corpus")
    p.add_argument("input", nargs="?", default="-", help="graph6 file (default stdin)")
    p.add_argument("--filter", action="append", help="predicates that must hold, left to right")
    p.add_argument("--check", action="append", help="predicates evaluated on graphs passing the filters")
    p.add_argument("--report", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--figures", metavar="DIR", help="also write summary figures (PNG) into DIR")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("paper-suite", help="run every bundled statement check")
    p.add_argument("--only", action="append", help="run just the named entry (repeatable)")
    p.set_defaults(func=cmd_paper_suite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"bracekit: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (BracekitError, ValueError, OSError) as exc:
        print(f"bracekit: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
