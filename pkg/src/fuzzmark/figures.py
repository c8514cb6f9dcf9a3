"""Figure rendering for analysis reports.

Draws the model geometry to scale — bars or overlapping trapezoids —
with the centroid marked and the midline threshold drawn, and writes it
as SVG. Output is byte-deterministic: the SVG backend's hash salt is
pinned and the date metadata is dropped, so identical inputs produce
identical files.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Polygon as MplPolygon, Rectangle

from .comparison import midline_threshold
from .core import (
    CentroidPoint,
    LevelDistribution,
    ModelKind,
    cells_for,
    figure_extent,
)

_HASH_SALT = "fuzzmark"
_FILL = "#4878a8"
_EDGE = "#1f3f5f"
_CENTROID = "#c03028"
_THRESHOLD = "#707070"


def _draw_model(ax, dist: LevelDistribution, kind: ModelKind, point: CentroidPoint) -> None:
    lo, hi = figure_extent(kind, dist.n)
    if kind is ModelKind.RECTANGULAR:
        for i, w in enumerate(dist.weights):
            if w > 0:
                ax.add_patch(
                    Rectangle((i, 0), 1, w, facecolor=_FILL, edgecolor=_EDGE, alpha=0.55)
                )
        tick_at = [i + 0.5 for i in range(dist.n)]
    else:
        for cell in cells_for(dist, kind):
            if cell.height > 0:
                ax.add_patch(
                    MplPolygon(
                        cell.vertices(), closed=True,
                        facecolor=_FILL, edgecolor=_EDGE, alpha=0.45,
                    )
                )
        tick_at = [c.center_x for c in cells_for(dist, kind)]

    threshold = midline_threshold(kind, dist.n)
    ax.axvline(threshold, color=_THRESHOLD, linestyle="--", linewidth=1.0)
    ax.plot([point.x], [point.y], "o", color=_CENTROID, markersize=6, zorder=5)
    ax.annotate(
        f"({point.x:.4g}, {point.y:.4g})",
        (point.x, point.y),
        textcoords="offset points",
        xytext=(8, 8),
        color=_CENTROID,
        fontsize=9,
    )
    ax.set_xticks(tick_at)
    ax.set_xticklabels(dist.labels)
    top = max(max(dist.weights), point.y)
    ax.set_xlim(lo - 0.02 * (hi - lo), hi + 0.02 * (hi - lo))
    ax.set_ylim(0, top * 1.2 if top > 0 else 1.0)


def render_svg(
    cohorts: list[tuple[str, LevelDistribution, CentroidPoint]],
    kind: ModelKind,
    path: str,
) -> None:
    """Render one panel per cohort to `path` as deterministic SVG."""
    n = len(cohorts)
    with plt.rc_context({"svg.hashsalt": _HASH_SALT}):
        fig, axes = plt.subplots(
            n, 1, figsize=(7.0, 3.0 * n), squeeze=False, constrained_layout=True
        )
        for ax, (label, dist, point) in zip(axes[:, 0], cohorts):
            _draw_model(ax, dist, kind, point)
            ax.set_title(label, fontsize=10)
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
