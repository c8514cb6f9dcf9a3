"""Cohort comparison and ranking over centroid results.

The decision standards: among cohorts under the same model, the one with
the larger centroid abscissa performs better; at equal abscissa above
the figure's horizontal midline the higher ordinate wins, below it the
lower ordinate wins. (Above the midline, concentration means mass piled
on high levels; below it, the same concentration sits on low levels.)

An abscissa exactly on the midline satisfies both of the written rules;
it is resolved as "above" and the verdict carries an at_threshold flag
so callers can see the edge case was hit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import CentroidPoint, LevelDistribution, ModelKind, centroid, figure_extent
from .errors import IncomparableCohorts

COMPARISON_TOL = 1e-9


class Rule(Enum):
    """Which standard decided a pairwise verdict."""

    HIGHER_X = "HIGHER_X"
    HIGHER_Y_ABOVE_MID = "HIGHER_Y_ABOVE_MID"
    LOWER_Y_BELOW_MID = "LOWER_Y_BELOW_MID"
    TIE = "TIE"


@dataclass(frozen=True)
class CohortResult:
    """A cohort's distribution with its centroid under one model."""

    label: str
    distribution: LevelDistribution
    model: ModelKind
    centroid: CentroidPoint

    def __post_init__(self):
        expected = centroid(self.distribution, self.model)
        if self.centroid != expected:
            raise IncomparableCohorts(
                f"centroid of cohort {self.label!r} was not produced from its distribution"
            )

    @classmethod
    def from_distribution(
        cls, label: str, distribution: LevelDistribution, model: ModelKind
    ) -> "CohortResult":
        return cls(label, distribution, model, centroid(distribution, model))


@dataclass(frozen=True)
class Verdict:
    """Outcome of comparing cohort `first` against cohort `second`."""

    first: str
    second: str
    winner: str | None
    rule: Rule
    at_threshold: bool = False


@dataclass(frozen=True)
class Ranking:
    """Cohort labels best-first plus the pairwise verdicts behind the order."""

    order: tuple[str, ...]
    verdicts: tuple[Verdict, ...]


def midline_threshold(model: ModelKind, n: int) -> float:
    """Abscissa of the figure's vertical midline for an n-level model."""
    lo, hi = figure_extent(model, n)
    return (lo + hi) / 2


def _check_comparable(a: CohortResult, b: CohortResult) -> None:
    if a.model is not b.model:
        raise IncomparableCohorts(
            f"{a.label!r} uses {a.model.value}, {b.label!r} uses {b.model.value}"
        )
    if a.distribution.n != b.distribution.n:
        raise IncomparableCohorts(
            f"{a.label!r} has {a.distribution.n} levels, {b.label!r} has {b.distribution.n}"
        )


def compare(a: CohortResult, b: CohortResult, tol: float = COMPARISON_TOL) -> Verdict:
    """Pairwise verdict under the decision standards."""
    _check_comparable(a, b)
    ca, cb = a.centroid, b.centroid
    if abs(ca.x - cb.x) > tol:
        winner = a.label if ca.x > cb.x else b.label
        return Verdict(a.label, b.label, winner, Rule.HIGHER_X)

    threshold = midline_threshold(a.model, a.distribution.n)
    common_x = (ca.x + cb.x) / 2
    at_threshold = abs(common_x - threshold) <= tol
    if abs(ca.y - cb.y) <= tol:
        return Verdict(a.label, b.label, None, Rule.TIE, at_threshold)
    if common_x >= threshold:
        winner = a.label if ca.y > cb.y else b.label
        return Verdict(a.label, b.label, winner, Rule.HIGHER_Y_ABOVE_MID, at_threshold)
    winner = a.label if ca.y < cb.y else b.label
    return Verdict(a.label, b.label, winner, Rule.LOWER_Y_BELOW_MID, at_threshold)


def rank(cohorts: list[CohortResult], tol: float = COMPARISON_TOL) -> Ranking:
    """Total best-first ordering of cohorts plus all pairwise verdicts.

    Equivalent to sorting descending by (x, y) above the midline and
    (x, -y) below it, which makes the pairwise standards transitive.
    Cohorts whose keys coincide exactly keep their input order.
    """
    if not cohorts:
        raise IncomparableCohorts("need at least one cohort to rank")
    labels = [c.label for c in cohorts]
    if len(set(labels)) != len(labels):
        raise IncomparableCohorts(f"cohort labels must be distinct: {labels}")
    for other in cohorts[1:]:
        _check_comparable(cohorts[0], other)
    threshold = midline_threshold(cohorts[0].model, cohorts[0].distribution.n)

    def key(c: CohortResult) -> tuple[float, float]:
        signed_y = c.centroid.y if c.centroid.x >= threshold else -c.centroid.y
        return (c.centroid.x, signed_y)

    ordered = sorted(cohorts, key=key, reverse=True)
    verdicts = tuple(
        compare(a, b, tol)
        for i, a in enumerate(ordered)
        for b in ordered[i + 1 :]
    )
    return Ranking(tuple(c.label for c in ordered), verdicts)
