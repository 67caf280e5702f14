"""Figure rendering for the CLI: counting curves and permutation diagrams.

All functions write PNG files and return the path written.  matplotlib's
Agg backend is forced so rendering works headless.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .grassmann import CornerReport, associated_grassmannian, corner_report
from .patterns import format_perm
from .perms import Perm, descents, perm


def _path(directory: str, name: str) -> str:
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, name)


def save_count_plot(ranks, counts, label: str, directory: str) -> str:
    """Plot a counting sequence against rank."""
    ranks, counts = list(ranks), list(counts)
    slug = "".join(c if c.isalnum() else "-" for c in label).strip("-") or "counts"
    target = _path(directory, f"counts-{slug}.png")
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(ranks, counts, marker="o")
    ax.set_xlabel("rank")
    ax.set_ylabel("count")
    ax.set_title(label)
    ax.set_xticks(ranks)
    if counts and min(counts) > 0 and max(counts) > 1000:
        ax.set_yscale("log")
    fig.tight_layout()
    fig.savefig(target, dpi=150)
    plt.close(fig)
    return target


def save_permutation_diagram(pi: Perm, directory: str) -> str:
    """Dot diagram of a permutation on an n-by-n grid."""
    pi = perm(pi)
    n = len(pi)
    target = _path(directory, f"perm-{format_perm(pi)}.png")
    fig, ax = plt.subplots(figsize=(3.5, 3.5))
    ax.scatter(range(1, n + 1), pi, s=60, zorder=3)
    for g in range(n + 1):
        ax.axhline(g + 0.5, color="0.85", lw=0.6, zorder=1)
        ax.axvline(g + 0.5, color="0.85", lw=0.6, zorder=1)
    ax.set_xlim(0.5, n + 0.5)
    ax.set_ylim(0.5, n + 0.5)
    ax.set_xticks(range(1, n + 1))
    ax.set_yticks(range(1, n + 1))
    ax.set_aspect("equal")
    ax.set_title(format_perm(pi))
    fig.tight_layout()
    fig.savefig(target, dpi=150)
    plt.close(fig)
    return target


def _draw_partition(ax, report: CornerReport) -> None:
    rows, cols = report.box_rows, report.box_cols
    # box outline
    ax.plot([0, cols, cols, 0, 0], [0, 0, -rows, -rows, 0], color="0.3", lw=1.2)
    # partition cells, top row first
    padded = list(report.partition) + [0] * (rows - len(report.partition))
    for r, width in enumerate(padded):
        for c in range(width):
            ax.add_patch(
                plt.Rectangle((c, -r - 1), 1, 1, facecolor="0.8", edgecolor="0.4")
            )
    for x, y, dist in report.inner_corners:
        ax.plot([x], [y - rows], marker="s", color="tab:blue", ms=6)
        ax.annotate(str(dist), (x, y - rows), textcoords="offset points",
                    xytext=(5, 5), fontsize=8, color="tab:blue")
    for x, y, tag in report.outer_corners:
        color = {"too_wide": "tab:red", "too_deep": "tab:orange",
                 "balanced": "tab:green", "boundary": "0.5"}[tag]
        ax.plot([x], [y - rows], marker="o", color=color, ms=6)
    ax.set_xlim(-0.7, cols + 0.7)
    ax.set_ylim(-rows - 0.7, 0.7)
    ax.set_aspect("equal")
    ax.axis("off")


def save_partition_diagrams(pi: Perm, directory: str) -> list[str]:
    """One partition-in-a-box diagram per descent, with corners marked."""
    pi = perm(pi)
    written = []
    for d in descents(pi):
        rho = associated_grassmannian(pi, d)
        report = corner_report(rho)
        target = _path(directory, f"partition-{format_perm(pi)}-d{d}.png")
        fig, ax = plt.subplots(figsize=(3.5, 3.5))
        _draw_partition(ax, report)
        shape = ",".join(map(str, report.partition)) or "empty"
        ax.set_title(f"descent {d}: {shape} in {report.box_rows}x{report.box_cols}")
        fig.tight_layout()
        fig.savefig(target, dpi=150)
        plt.close(fig)
        written.append(target)
    return written
