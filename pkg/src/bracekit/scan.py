"""Corpus scanning: predicates over graph6 streams and report emission."""

from __future__ import annotations

import csv
import io
import json
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .errors import BudgetExceeded, GraphError
from .factors import is_two_factor_hamiltonian
from .graph import Graph, graph6_encode, girth, is_bipartite, is_connected, is_cyclically_4_connected, read_graph6_lines
from .matching import has_perfect_matching, is_brace
from .pfaffian import find_pfaffian_orientation

SCHEMA = "bracekit.scan/1"


@dataclass(frozen=True)
class Budgets:
    matchings: int = 10**7
    cycles: int = 10**6
    subsets: int = 12

    @classmethod
    def from_env(cls) -> "Budgets":
        env = os.environ
        return cls(
            matchings=int(env.get("BRACEKIT_MATCHING_BUDGET", cls.matchings)),
            cycles=int(env.get("BRACEKIT_CYCLE_BUDGET", cls.cycles)),
            subsets=int(env.get("BRACEKIT_SUBSET_BUDGET", cls.subsets)),
        )


# Each predicate returns (value, witness or None).
Predicate = Callable[[Graph, Budgets], tuple[bool, Any]]


def _cubic(g: Graph, b: Budgets):
    return g.is_cubic(), None


def _bipartite(g: Graph, b: Budgets):
    return is_bipartite(g), None


def _brace(g: Graph, b: Budgets):
    return is_brace(g), None


def _girth_at_least(k: int) -> Predicate:
    def pred(g: Graph, b: Budgets):
        gi = girth(g)
        return gi >= k, None

    return pred


def _two_factor_hamiltonian(g: Graph, b: Budgets):
    verdict = is_two_factor_hamiltonian(g, b.matchings)
    witness = [list(e) for e in verdict.witness] if verdict.witness else None
    return verdict.hamiltonian, witness


def _pfaffian(g: Graph, b: Budgets):
    if not has_perfect_matching(g):
        return True, None  # no perfect matching: every orientation qualifies vacuously
    o = find_pfaffian_orientation(g, cycle_budget=b.cycles)
    return o is not None, (None if o is None else [list(a) for a in o.arcs()])


def _non_pfaffian(g: Graph, b: Budgets):
    value, _ = _pfaffian(g, b)
    return not value, None


def _v2mod4(g: Graph, b: Budgets):
    return g.n % 4 == 2, None


def _c4c(g: Graph, b: Budgets):
    if not g.is_cubic() or not is_connected(g):
        return False, None
    return is_cyclically_4_connected(g), None


_FIXED: dict[str, Predicate] = {
    "cubic": _cubic,
    "bipartite": _bipartite,
    "brace": _brace,
    "2fh": _two_factor_hamiltonian,
    "pfaffian": _pfaffian,
    "non-pfaffian": _non_pfaffian,
    "v2mod4": _v2mod4,
    "c4c": _c4c,
}
_GIRTH = re.compile(r"girth>=(\d+)$")

PREDICATE_NAMES = tuple(_FIXED) + ("girth>=k",)


def predicate(name: str) -> Predicate:
    if name in _FIXED:
        return _FIXED[name]
    match = _GIRTH.match(name)
    if match:
        return _girth_at_least(int(match.group(1)))
    raise GraphError(f"unknown predicate {name!r}; choose from {', '.join(PREDICATE_NAMES)}")


def parse_predicates(text: str | Sequence[str] | None) -> list[str]:
    """Comma-separated names (or a list), validated."""
    if not text:
        return []
    names = text.split(",") if isinstance(text, str) else [n for s in text for n in s.split(",")]
    names = [n.strip() for n in names if n.strip()]
    for n in names:
        predicate(n)
    return names


@dataclass
class Record:
    index: int
    graph6: str
    n: int
    m: int
    passed_filters: bool
    properties: dict[str, bool | None] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    budget_flags: list[str] = field(default_factory=list)

    def as_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "passed_filters": self.passed_filters,
            "properties": self.properties,
            "witnesses": self.witnesses,
            "budget_flags": self.budget_flags,
        }


def evaluate(index: int, g: Graph, filters: Sequence[str], checks: Sequence[str], budgets: Budgets) -> Record:
    """Filters short-circuit left to right; checks run only on graphs passing every filter."""
    rec = Record(index, graph6_encode(g), g.n, g.m, False)

    def run(name: str) -> bool | None:
        try:
            value, witness = predicate(name)(g, budgets)
        except BudgetExceeded as exc:
            rec.budget_flags.append(f"{name}: {exc}")
            rec.properties[name] = None
            return None
        rec.properties[name] = value
        if witness is not None:
            rec.witnesses[name] = witness
        return value

    for name in filters:
        if run(name) is not True:
            return rec
    rec.passed_filters = True
    for name in checks:
        if name not in rec.properties:
            run(name)
    return rec


def _evaluate_star(args):
    return evaluate(*args)


@dataclass
class ScanReport:
    filters: list[str]
    checks: list[str]
    records: list[Record]

    def is_survivor(self, r: Record) -> bool:
        return r.passed_filters and all(r.properties.get(c) is True for c in self.checks)

    @property
    def survivors(self) -> list[Record]:
        return [r for r in self.records if self.is_survivor(r)]

    def aggregate(self) -> dict[str, Any]:
        counts = {}
        for name in list(dict.fromkeys(self.filters + self.checks)):
            tally = {"true": 0, "false": 0, "inconclusive": 0}
            for r in self.records:
                if name in r.properties:
                    v = r.properties[name]
                    tally["inconclusive" if v is None else "true" if v else "false"] += 1
            counts[name] = tally
        return {
            "graphs": len(self.records),
            "passed_filters": sum(r.passed_filters for r in self.records),
            "budget_exceeded": sum(1 for r in self.records if r.budget_flags),
            "counts": counts,
            "survivors": [r.index for r in self.survivors],
        }

    @property
    def inconclusive(self) -> bool:
        return any(r.budget_flags for r in self.records)


def scan_corpus(
    lines: Iterable[str],
    filters: Sequence[str] = (),
    checks: Sequence[str] = (),
    budgets: Budgets | None = None,
    workers: int = 1,
) -> ScanReport:
    """Evaluate ``filters`` then ``checks`` on every graph6 line; records keep input order.

    Parsing happens up front, so a malformed line aborts the scan with its
    line number before any evaluation starts.
    """
    filters, checks = list(filters), list(checks)
    for name in filters + checks:
        predicate(name)
    budgets = budgets or Budgets.from_env()
    graphs = [g for _, _, g in read_graph6_lines(lines)]
    jobs = [(i, g, filters, checks, budgets) for i, g in enumerate(graphs)]
    if workers <= 1 or len(jobs) < 2:
        records = [evaluate(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_evaluate_star, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    return ScanReport(filters, checks, records)


def emit_report(report: ScanReport, fmt: str = "json") -> str:
    """Deterministic serialisation.

    JSON layout (schema ``bracekit.scan/1``)::

        {"records": [{"index", "graph6", "n", "m", "passed_filters",
                      "properties": {name: true|false|null},
                      "witnesses": {name: ...}, "budget_flags": [str]}],
         "aggregate": {"graphs", "passed_filters", "budget_exceeded",
                       "counts": {name: {"true", "false", "inconclusive"}},
                       "survivors": [index]},
         "schema": "bracekit.scan/1", "filters": [...], "checks": [...]}

    ``null`` marks a predicate abandoned because a budget ran out.  The CSV
    form has one row per graph and one column per predicate.
    """
    if fmt == "json":
        doc = {
            "records": [r.as_dict() for r in report.records],
            "aggregate": report.aggregate(),
            "schema": SCHEMA,
            "filters": report.filters,
            "checks": report.checks,
        }
        return json.dumps(doc, indent=1) + "\n"
    if fmt == "csv":
        names = list(dict.fromkeys(report.filters + report.checks))
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "graph6", "n", "m", "passed_filters", *names, "survivor", "budget_flags"])
        for r in report.records:
            cells = []
            for name in names:
                v = r.properties.get(name, "")
                cells.append("inconclusive" if v is None else "" if v == "" else str(v).lower())
            writer.writerow([r.index, r.graph6, r.n, r.m, str(r.passed_filters).lower(), *cells,
                             str(report.is_survivor(r)).lower(), "; ".join(r.budget_flags)])
        return buf.getvalue()
    raise GraphError(f"unknown report format {fmt!r}")


def load_report(text: str) -> dict[str, Any]:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise GraphError(f"unsupported report schema {doc.get('schema')!r}")
    return doc
