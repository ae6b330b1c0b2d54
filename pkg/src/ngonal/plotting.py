"""Matplotlib figures: braid diagrams with their loops, and bench timings."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .rbd import Diagram, DiagramLoop  # noqa: E402

LOOP_COLORS = ("tab:blue", "tab:orange", "tab:green", "tab:red", "tab:purple",
               "tab:brown", "tab:pink", "tab:olive", "tab:cyan")


def _bounds(d: Diagram, margin: float = 0.1) -> tuple[float, float, float, float]:
    x0, x1 = d.vertical_lines[0], d.vertical_lines[-1]
    y0, y1 = d.horizontal_lines[0], d.horizontal_lines[-1]
    mx, my = margin * (x1 - x0), margin * (y1 - y0)
    return x0 - mx, x1 + mx, y0 - my, y1 + my


def _draw_loop(ax, loop: DiagramLoop, color: str, offset: float, arrow: float) -> None:
    # nudge inward so overlapping loops stay distinguishable
    pts = [complex(v.real - offset, v.imag) for v in loop.vertices]
    xs, ys = [p.real for p in pts], [p.imag for p in pts]
    label = "loop at infinity" if loop.is_infinity else f"loop {loop.fiber_index}"
    ax.plot(xs, ys, color=color, lw=1.2, label=label)
    for a, b in zip(pts, pts[1:]):
        if abs(b - a) == 0:
            continue
        mid = (a + b) / 2
        tip = mid + (b - a) / abs(b - a) * arrow
        ax.add_patch(FancyArrowPatch((mid.real, mid.imag), (tip.real, tip.imag),
                                     arrowstyle="-|>", mutation_scale=10, color=color))


def diagram_figure(d: Diagram, loops: Sequence[DiagramLoop] = (), title: str = ""):
    fig, ax = plt.subplots(figsize=(6.5, 5))
    for x in d.vertical_lines:
        ax.axvline(x, color="0.75", lw=0.8, zorder=0)
    for y in d.horizontal_lines:
        ax.axhline(y, color="0.75", lw=0.8, zorder=0)
    span = d.vertical_lines[-1] - d.vertical_lines[0]
    for k, loop in enumerate(loops):
        _draw_loop(ax, loop, LOOP_COLORS[k % len(LOOP_COLORS)], offset=0.004 * span * k, arrow=1e-3 * span)
    ax.scatter([f.real for f in d.fibers], [f.imag for f in d.fibers],
               marker="x", color="k", zorder=3, label="singular fibers")
    ax.plot([d.base_point.real], [d.base_point.imag], "o", color="k", ms=5, zorder=3)
    ax.annotate("b", (d.base_point.real, d.base_point.imag), textcoords="offset points", xytext=(4, 4))
    x0, x1, y0, y1 = _bounds(d)
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_xlabel("Re x")
    ax.set_ylabel("Im x")
    if title:
        ax.set_title(title)
    if loops:
        ax.legend(fontsize=7, loc="upper left")
    fig.tight_layout()
    return fig


def save_diagram(d: Diagram, path: str | Path, loops: Sequence[DiagramLoop] = (), title: str = "") -> Path:
    fig = diagram_figure(d, loops, title)
    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path


def save_bench(rows, path: str | Path) -> Path:
    """Mean and max runtime per total degree."""
    fig, ax = plt.subplots(figsize=(5, 3.5))
    degs = [r.degree for r in rows]
    ax.plot(degs, [r.mean_ms for r in rows], "o-", label="mean")
    ax.plot(degs, [r.max_ms for r in rows], "s--", label="max")
    ax.set_xlabel("total degree")
    ax.set_ylabel("time per curve (ms)")
    ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path
