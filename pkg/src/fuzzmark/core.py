"""Grade-level distributions and closed-form centroid models.

A cohort's outcome is a distribution of mass over ordered achievement
levels (worst to best). Two plane-figure models collapse it to a single
representative point, the center of mass of the figure:

* rectangular: one unit-width bar per level, bar i spanning [i-1, i]
  with height equal to the level's weight y_i;
* trapezoidal: one isosceles trapezoid per level, lower base b, upper
  base 0.4*b, pitched 0.7*b apart so each adjacent pair shares 30% of
  its base. The overlap deliberately lets marginal mass count toward
  both neighbouring levels, so the figure is treated as the system of
  the cells' point masses rather than as a geometric union.

With weights summing to 1 the centroids have closed forms (i = 1..n):

  rectangular        x = (1/2)*sum((2i-1)*y_i)    y = (1/2)*sum(y_i^2)
  trapezoid, b = 10  X = 7*sum(i*y_i) - 2         Y = (3/7)*sum(y_i^2)
  trapezoid, b = 1   X = 0.7*sum(i*y_i) - 0.2     Y = (3/7)*sum(y_i^2)

The ordinate keeps the factor 3/7 at both base scales because the cell
heights are the weights themselves and do not rescale with the base.
The `oracle` module re-derives everything here from first principles
(exact polygon centroids and quadrature); the test suite holds the two
paths together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    EmptyDistribution,
    InvalidGeometry,
    NegativeWeight,
    NotNormalized,
    ShapeMismatch,
    WrongModel,
)

# Fixed cell proportions of the trapezoidal model. The closed forms above
# hard-code these ratios; they are not configurable.
TOP_RATIO = 0.4    # upper base / lower base
PITCH_RATIO = 0.7  # spacing of adjacent cells / lower base

NORMALIZATION_TOL = 1e-12


class ModelKind(Enum):
    """Which figure the centroid is computed over."""

    RECTANGULAR = "rectangular"
    TRAPEZOIDAL_BASE10 = "trapezoidal_base10"
    TRAPEZOIDAL_UNIT = "trapezoidal_unit"

    @property
    def trapezoid_base(self) -> float | None:
        """Lower-base length of the trapezoid cells, or None for bars."""
        if self is ModelKind.TRAPEZOIDAL_BASE10:
            return 10.0
        if self is ModelKind.TRAPEZOIDAL_UNIT:
            return 1.0
        return None


@dataclass(frozen=True)
class CentroidPoint:
    """Center of mass (x, y) in model units."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidGeometry(f"centroid coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class LevelDistribution:
    """Normalized weights over ordered achievement levels, worst to best."""

    labels: tuple[str, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if len(self.labels) == 0:
            raise EmptyDistribution("a distribution needs at least one level")
        if len(self.labels) != len(self.weights):
            raise ShapeMismatch(
                f"{len(self.labels)} labels vs {len(self.weights)} weights"
            )
        if len(set(self.labels)) != len(self.labels):
            raise ShapeMismatch(f"level labels must be distinct: {self.labels}")
        for label, w in zip(self.labels, self.weights):
            if not math.isfinite(w) or w < 0:
                raise NegativeWeight(f"weight of level {label!r} is {w}")
        if abs(sum(self.weights) - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(
                f"weights sum to {sum(self.weights)!r}; use make_distribution to normalize raw counts"
            )

    @property
    def n(self) -> int:
        return len(self.labels)


def make_distribution(labels: Sequence[str], raw: Sequence[float]) -> LevelDistribution:
    """Normalize raw nonnegative counts into a LevelDistribution.

    Raises ShapeMismatch on length disagreement, NegativeWeight on any
    negative entry, EmptyDistribution when everything is zero.
    """
    if len(labels) != len(raw):
        raise ShapeMismatch(f"{len(labels)} labels vs {len(raw)} raw values")
    values = [float(r) for r in raw]
    for label, v in zip(labels, values):
        if not math.isfinite(v) or v < 0:
            raise NegativeWeight(f"raw value of level {label!r} is {v}")
    total = sum(values)
    if total <= 0:
        raise EmptyDistribution("all raw values are zero")
    return LevelDistribution(tuple(labels), tuple(v / total for v in values))


@dataclass(frozen=True)
class TrapezoidCell:
    """Geometry of the i-th trapezoid cell (1-based).

    Lower base spans [x_lo, x_hi] with x_hi - x_lo = base; the upper base
    (top = 0.4*base) is centered, so the cell is isosceles. With unit
    density the mass equals the area, height*(top + base)/2 = 0.7*base*height.
    """

    index: int
    x_lo: float
    x_hi: float
    base: float
    top: float
    height: float
    mass: float

    @property
    def center_x(self) -> float:
        return self.x_lo + self.base / 2

    @property
    def center_y(self) -> float:
        return trapezoid_centroid_ordinate(self.top, self.base, self.height)

    def centroid(self) -> CentroidPoint:
        return CentroidPoint(self.center_x, self.center_y)

    def vertices(self) -> tuple[tuple[float, float], ...]:
        """Corners in counter-clockwise order, starting at the lower left."""
        inset = (self.base - self.top) / 2
        return (
            (self.x_lo, 0.0),
            (self.x_hi, 0.0),
            (self.x_hi - inset, self.height),
            (self.x_lo + inset, self.height),
        )


def trapezoid_cell(index: int, base: float, height: float) -> TrapezoidCell:
    """Build the i-th trapezoid cell for a given lower-base length.

    The cell starts at 0.7*base*(i-1), so its center abscissa is
    0.7*base*i - 0.2*base (7i - 2 for base 10) and adjacent cells share
    0.3*base of their lower bases.
    """
    if base <= 0 or not math.isfinite(base):
        raise InvalidGeometry(f"lower base must be positive, got {base}")
    if index < 1:
        raise InvalidGeometry(f"cell index must be >= 1, got {index}")
    if height < 0 or not math.isfinite(height):
        raise InvalidGeometry(f"cell height must be >= 0, got {height}")
    x_lo = PITCH_RATIO * base * (index - 1)
    return TrapezoidCell(
        index=index,
        x_lo=x_lo,
        x_hi=x_lo + base,
        base=base,
        top=TOP_RATIO * base,
        height=height,
        mass=PITCH_RATIO * base * height,
    )


def trapezoid_centroid_ordinate(top: float, base: float, height: float) -> float:
    """Height of a trapezoid's center of mass above its lower base.

    For lower base b, upper parallel base a and height h this is
    h*(b + 2a) / (3*(a + b)); it degenerates to h/2 for a rectangle and
    h/3 for a triangle. The model's cells (a = 0.4*b) give (3/7)*h.
    """
    if base <= 0:
        raise InvalidGeometry(f"lower base must be positive, got {base}")
    if top < 0:
        raise InvalidGeometry(f"upper base must be >= 0, got {top}")
    if top > base:
        raise InvalidGeometry(f"upper base {top} exceeds lower base {base}; cells are widest at the bottom")
    if height < 0:
        raise InvalidGeometry(f"height must be >= 0, got {height}")
    # ratio first: for the model cells it is exactly 3/7, so the ordinate
    # is exactly (3/7)*height
    return (base + 2 * top) / (3 * (top + base)) * height


def composite_center_of_mass(masses: Iterable[tuple[float, float, float]]) -> CentroidPoint:
    """Center of mass of point masses given as (mass, x, y) triples."""
    total = 0.0
    moment_x = 0.0
    moment_y = 0.0
    count = 0
    for mass, x, y in masses:
        if mass < 0:
            raise NegativeWeight(f"point mass must be >= 0, got {mass}")
        total += mass
        moment_x += mass * x
        moment_y += mass * y
        count += 1
    if count == 0 or total <= 0:
        raise EmptyDistribution("total mass is zero; centroid undefined")
    return CentroidPoint(moment_x / total, moment_y / total)


def rectangular_centroid(dist: LevelDistribution) -> CentroidPoint:
    """Centroid of the bar figure: unit-width bars of height y_i over [i-1, i].

    x = (1/2) * sum((2i-1)*y_i) / sum(y_i), y = (1/2) * sum(y_i^2) / sum(y_i);
    the denominators are kept so the result is exactly invariant under
    rescaling all weights by a common factor.
    """
    total = sum(dist.weights)
    x = 0.5 * sum((2 * i - 1) * w for i, w in enumerate(dist.weights, start=1)) / total
    y = 0.5 * sum(w * w for w in dist.weights) / total
    return CentroidPoint(x, y)


def trapezoidal_centroid(dist: LevelDistribution, kind: ModelKind) -> CentroidPoint:
    """Centroid of the trapezoidal figure, treated as its cells' point masses.

    Cell i carries mass 0.7*b*y_i at (0.7*b*i - 0.2*b, (3/7)*y_i); the
    mass-weighted mean collapses to the closed forms in the module
    docstring. Raises WrongModel for the rectangular kind.
    """
    base = kind.trapezoid_base
    if base is None:
        raise WrongModel("trapezoidal_centroid needs a trapezoidal model kind")
    total = sum(dist.weights)
    first_moment = sum(i * w for i, w in enumerate(dist.weights, start=1))
    x = PITCH_RATIO * base * first_moment / total - 0.2 * base
    y = (3.0 / 7.0) * sum(w * w for w in dist.weights) / total
    return CentroidPoint(x, y)


def centroid(dist: LevelDistribution, kind: ModelKind) -> CentroidPoint:
    """Centroid of `dist` under any model kind."""
    if kind is ModelKind.RECTANGULAR:
        return rectangular_centroid(dist)
    return trapezoidal_centroid(dist, kind)


def figure_extent(kind: ModelKind, n: int) -> tuple[float, float]:
    """Horizontal extent [lo, hi] of the n-level figure under a model."""
    if n < 1:
        raise ShapeMismatch(f"level count must be >= 1, got {n}")
    base = kind.trapezoid_base
    if base is None:
        return (0.0, float(n))
    return (0.0, PITCH_RATIO * base * (n - 1) + base)


def cells_for(dist: LevelDistribution, kind: ModelKind) -> tuple[TrapezoidCell, ...]:
    """The trapezoid cells of a distribution, one per level (zero heights kept)."""
    base = kind.trapezoid_base
    if base is None:
        raise WrongModel("only trapezoidal models have cells")
    return tuple(
        trapezoid_cell(i, base, w) for i, w in enumerate(dist.weights, start=1)
    )
