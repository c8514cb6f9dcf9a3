"""First-principles centroid oracle: polygons, shoelace, and quadrature.

Everything in `core` is a closed-form shortcut for a center-of-mass
integral

    x_c = (integral of x dA) / (integral of dA)
    y_c = (integral of y dA) / (integral of dA)

over a plane figure. This module evaluates those integrals directly, two
independent ways, so the closed forms can be checked without trusting
them:

* exact polygon area/centroid via the shoelace (surveyor's) formulas;
* composite midpoint-rule quadrature over a single-valued height profile.

Composite figures are deliberately mass-additive: overlapping pieces
contribute their full mass, matching the point-mass treatment of the
trapezoidal model (this is the quantity the closed forms describe, not
the centroid of the geometric union).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import (
    CentroidPoint,
    LevelDistribution,
    ModelKind,
    composite_center_of_mass,
    trapezoid_cell,
)
from .errors import DegenerateFigure, InvalidGeometry, NegativeWeight

MIN_AREA = 1e-15
# Figure builders drop cells whose area is below float noise; the mass
# fraction lost is <= 1e-14, shifting composite centroids by well under
# the 1e-12 the closed forms are tested to.
_MIN_PIECE_AREA = 1e-14


@dataclass(frozen=True)
class Polygon:
    """Simple polygon as counter-clockwise vertices; closure is implicit."""

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple((float(x), float(y)) for x, y in self.vertices)
        )
        if len(self.vertices) < 3:
            raise InvalidGeometry(f"a polygon needs >= 3 vertices, got {len(self.vertices)}")


@dataclass(frozen=True)
class MassedFigure:
    """Pieces (Polygon, density) whose masses add even where they overlap."""

    pieces: tuple[tuple[Polygon, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple((p, float(d)) for p, d in self.pieces))
        for _, density in self.pieces:
            if density <= 0:
                raise NegativeWeight(f"piece density must be > 0, got {density}")

    def mass(self) -> float:
        return sum(d * polygon_area_centroid(p)[0] for p, d in self.pieces)

    def centroid(self) -> CentroidPoint:
        """Mass-additive composite centroid of all pieces."""
        points = []
        for poly, density in self.pieces:
            area, c = polygon_area_centroid(poly)
            points.append((density * area, c.x, c.y))
        return composite_center_of_mass(points)


def polygon_area_centroid(poly: Polygon) -> tuple[float, CentroidPoint]:
    """Exact area and centroid of a simple CCW polygon (shoelace formulas).

    area = (1/2) * sum(x_i*y_{i+1} - x_{i+1}*y_i)
    c_x  = (1/(6*area)) * sum((x_i + x_{i+1}) * cross_i)   (c_y analogous)

    Raises DegenerateFigure when |area| <= 1e-15 and InvalidGeometry when
    the vertex order turns out clockwise (negative area).
    """
    verts = poly.vertices
    twice_area = 0.0
    cx = 0.0
    cy = 0.0
    for (x0, y0), (x1, y1) in zip(verts, verts[1:] + verts[:1]):
        cross = x0 * y1 - x1 * y0
        twice_area += cross
        cx += (x0 + x1) * cross
        cy += (y0 + y1) * cross
    area = twice_area / 2.0
    if abs(area) <= MIN_AREA:
        raise DegenerateFigure(f"polygon area {area} is too small for a centroid")
    if area < 0:
        raise InvalidGeometry("polygon vertices are clockwise; reverse them")
    return area, CentroidPoint(cx / (6.0 * area), cy / (6.0 * area))


def integrate_centroid(
    height: Callable[[np.ndarray], np.ndarray],
    domain: tuple[float, float],
    cells: int,
    breakpoints: Sequence[float] = (),
) -> CentroidPoint:
    """Midpoint-rule centroid of the region under a height profile.

    For the region {(x, y): lo <= x <= hi, 0 <= y <= height(x)} the
    centroid integrals reduce to one-dimensional ones,

        area = I[h],  x-moment = I[x*h],  y-moment = I[h^2 / 2],

    each approximated by the composite midpoint rule with `cells`
    subintervals in total. Known discontinuities or kinks of the profile
    can be passed as `breakpoints`; the rule then aligns panel edges with
    them (cells are apportioned by panel length), which restores the
    rule's O(cells^-2) accuracy for piecewise-linear profiles and makes
    piecewise-constant ones exact. `height` may be vectorized over numpy
    arrays or a plain scalar function.
    """
    lo, hi = float(domain[0]), float(domain[1])
    if not hi > lo:
        raise InvalidGeometry(f"empty domain [{lo}, {hi}]")
    if cells < 1:
        raise ValueError(f"cells must be >= 1, got {cells}")

    edges = [lo] + sorted(b for b in breakpoints if lo < b < hi) + [hi]
    spans = [(a, b) for a, b in zip(edges, edges[1:]) if b > a]
    # Apportion the subintervals to panels by length (largest remainder),
    # every panel getting at least one.
    length = hi - lo
    quota = [(b - a) / length * cells for a, b in spans]
    counts = [max(1, int(q)) for q in quota]
    order = sorted(range(len(spans)), key=lambda k: (int(quota[k]) - quota[k], k))
    i = 0
    while sum(counts) < cells:
        counts[order[i % len(order)]] += 1
        i += 1
    while sum(counts) > cells:
        k = max(range(len(counts)), key=lambda j: counts[j])
        if counts[k] <= 1:
            break
        counts[k] -= 1

    area = 0.0
    moment_x = 0.0
    moment_y = 0.0
    for (a, b), m in zip(spans, counts):
        dx = (b - a) / m
        mids = a + (np.arange(m) + 0.5) * dx
        h = np.asarray(height(mids), dtype=float)
        if h.shape != mids.shape:
            h = np.fromiter((float(height(x)) for x in mids), float, count=m)
        if np.any(h < 0):
            raise InvalidGeometry("height profile must be >= 0 on the domain")
        area += float(h.sum()) * dx
        moment_x += float((mids * h).sum()) * dx
        moment_y += float((h * h).sum()) / 2.0 * dx
    if area <= MIN_AREA:
        raise DegenerateFigure("profile encloses (near-)zero area")
    return CentroidPoint(moment_x / area, moment_y / area)


def rectangular_figure(dist: LevelDistribution) -> MassedFigure:
    """Bar chart of a distribution as unit-density rectangles.

    Bar i spans [i-1, i] with height y_i; zero-height levels are dropped
    and adjacent equal-height bars are merged into one rectangle. The
    bars are disjoint, so the mass-additive composite centroid is also
    the true centroid of the union.
    """
    spans: list[tuple[float, float, float]] = []  # (x_lo, x_hi, height)
    for i, w in enumerate(dist.weights, start=1):
        if w <= _MIN_PIECE_AREA:  # bar width is 1, so the area is w
            continue
        if spans and spans[-1][1] == i - 1 and spans[-1][2] == w:
            spans[-1] = (spans[-1][0], float(i), w)
        else:
            spans.append((float(i - 1), float(i), w))
    if not spans:
        raise DegenerateFigure("distribution has no mass")
    pieces = [
        (Polygon(((x0, 0.0), (x1, 0.0), (x1, h), (x0, h))), 1.0)
        for x0, x1, h in spans
    ]
    return MassedFigure(tuple(pieces))


def bar_height(dist: LevelDistribution) -> Callable[[np.ndarray], np.ndarray]:
    """Vectorized height profile of the bar chart on [0, n] (for quadrature)."""
    weights = np.asarray(dist.weights, dtype=float)

    def height(x: np.ndarray) -> np.ndarray:
        idx = np.clip(np.floor(np.asarray(x, dtype=float)).astype(int), 0, dist.n - 1)
        return weights[idx]

    return height


def trapezoidal_figure(dist: LevelDistribution, base: float) -> MassedFigure:
    """Trapezoid cells of a distribution as unit-density polygons.

    One cell per nonzero level, with the same geometry as the closed-form
    model; adjacent cells overlap by 0.3*base, and the overlap counts
    toward both (mass-additive), so MassedFigure.centroid reproduces the
    point-mass reduction the closed forms rest on.
    """
    pieces = []
    for i, w in enumerate(dist.weights, start=1):
        cell = trapezoid_cell(i, base, w)
        if cell.mass <= _MIN_PIECE_AREA:
            continue
        pieces.append((Polygon(cell.vertices()), 1.0))
    if not pieces:
        raise DegenerateFigure("distribution has no mass")
    return MassedFigure(tuple(pieces))


def oracle_centroid(dist: LevelDistribution, kind: ModelKind) -> CentroidPoint:
    """Closed-form-free centroid of a distribution under any model kind."""
    if kind is ModelKind.RECTANGULAR:
        return rectangular_figure(dist).centroid()
    return trapezoidal_figure(dist, kind.trapezoid_base).centroid()
