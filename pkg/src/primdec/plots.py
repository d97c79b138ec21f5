"""Figure rendering for experiment reports.

Only the CLI report path imports this module, so matplotlib stays an
optional concern for library users.
"""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .theoremlab import GrowthReport


def growth_csv(report: GrowthReport) -> str:
    """Delimited per-grid-point data: one row per (point, prime)."""
    lines = ["exponents,total,prime,min_power,ratio,decomposition_ok"]
    for pt in report.points:
        total = sum(pt.exponents)
        for prime, m in pt.min_powers:
            lines.append(
                "%s,%d,%s,%d,%.6f,%s"
                % (
                    ";".join(str(e) for e in pt.exponents),
                    total,
                    str(prime).replace(", ", "+").strip("()"),
                    m,
                    m / total,
                    pt.decomposition_ok,
                )
            )
    return "\n".join(lines) + "\n"


def plot_growth(report: GrowthReport, path: str) -> None:
    """Minimal prime power against |n|, with the fitted linear bound."""
    series = {}
    for pt in report.points:
        total = sum(pt.exponents)
        for prime, m in pt.min_powers:
            series.setdefault(str(prime), []).append((total, m))
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, pts in sorted(series.items()):
        pts.sort()
        ax.plot(
            [p[0] for p in pts],
            [p[1] for p in pts],
            marker="o",
            linestyle="none",
            label="m_P, P = %s" % label,
        )
    max_total = max(sum(pt.exponents) for pt in report.points)
    xs = list(range(0, max_total + 1))
    ax.plot(
        xs,
        [report.k_empirical * x for x in xs],
        color="black",
        linestyle="--",
        label="k|n|, k = %d" % report.k_empirical,
    )
    ax.set_xlabel("|n|")
    ax.set_ylabel("minimal prime power")
    ax.set_title("Linear growth of primary components")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
