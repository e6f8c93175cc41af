"""Figures for scan reports (matplotlib, file output only)."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .scan import ScanReport  # noqa: E402


def plot_predicate_counts(report: ScanReport, path: Path) -> Path:
    agg = report.aggregate()["counts"]
    names = list(agg)
    fig, ax = plt.subplots(figsize=(max(4.0, 1.2 * len(names) + 1), 3.5))
    bottom = [0] * len(names)
    for key, colour in (("true", "#4c72b0"), ("false", "#c9c9c9"), ("inconclusive", "#dd8452")):
        vals = [agg[n][key] for n in names]
        ax.bar(names, vals, bottom=bottom, label=key, color=colour)
        bottom = [b + v for b, v in zip(bottom, vals)]
    ax.set_ylabel("graphs evaluated")
    ax.set_title(f"{len(report.records)} graphs, {len(report.survivors)} survivors")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_order_histogram(report: ScanReport, path: Path) -> Path:
    everything = Counter(r.n for r in report.records)
    passed = Counter(r.n for r in report.records if r.passed_filters)
    survived = Counter(r.n for r in report.survivors)
    orders = sorted(everything)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    width = 0.28
    xs = range(len(orders))
    ax.bar([x - width for x in xs], [everything[n] for n in orders], width, label="all", color="#c9c9c9")
    ax.bar(list(xs), [passed[n] for n in orders], width, label="passed filters", color="#4c72b0")
    ax.bar([x + width for x in xs], [survived[n] for n in orders], width, label="survivors", color="#55a868")
    ax.set_xticks(list(xs), [str(n) for n in orders])
    ax.set_xlabel("vertices")
    ax.set_yscale("symlog")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def write_figures(report: ScanReport, directory: str | Path) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    return [
        plot_predicate_counts(report, out / "predicate_counts.png"),
        plot_order_histogram(report, out / "order_histogram.png"),
    ]
