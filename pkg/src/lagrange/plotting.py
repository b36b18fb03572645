"""Figures for decompositions, written to files (Agg backend)."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .cascade import DependencyTable, LagrangeDecomposition  # noqa: E402


def plot_decomposition(D: LagrangeDecomposition, path, title: str | None = None):
    """Bar chart of widths and faithful component orders per level (log scale)."""
    levels = list(range(1, D.length + 1))
    widths = D.widths
    orders = D.component_orders()
    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * len(levels) + 2), 3.5))
    step = 0.38
    ax.bar([x - step / 2 for x in levels], widths, width=step, label="width (cosets)")
    ax.bar([x + step / 2 for x in levels], orders, width=step, label="component order")
    if max(orders + widths + [1]) > 50:
        ax.set_yscale("log")
    ax.set_xticks(levels)
    ax.set_xlabel("level")
    ax.set_ylabel("size")
    total = math.prod(widths)
    ax.set_title(title or f"length {D.length}, {total} states")
    ax.legend(frameon=False, fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_dependency_table(table: DependencyTable, path, title: str | None = None):
    """One panel per level: which coset index each prefix sends each point to."""
    n = len(table.levels)
    fig, axes = plt.subplots(1, max(n, 1), figsize=(3.2 * max(n, 1), 3.2), squeeze=False)
    for i, level in enumerate(table.levels):
        ax = axes[0][i]
        prefixes = sorted(level)
        grid = [list(level[p]) for p in prefixes]
        ax.imshow(grid, aspect="auto", interpolation="nearest", cmap="viridis")
        ax.set_title(f"level {i + 1}", fontsize="small")
        ax.set_xlabel("coset index")
        ax.set_ylabel("prefix")
        if len(prefixes) <= 12:
            ax.set_yticks(range(len(prefixes)))
            ax.set_yticklabels([",".join(map(str, p)) or "-" for p in prefixes], fontsize="x-small")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
