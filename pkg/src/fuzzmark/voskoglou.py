"""Voskoglou-style acquisition profiles over U = {a, b, c, d, e}.

Learning is modelled as three successive states — interpretation,
generalization, categorization — and each state as a fuzzy set over the
five acquisition grades a..e (negligible, low, intermediate, high,
complete): the membership of grade x in state i is the fraction of
students who reached x at that state. The profile relation combines the
three states into a fuzzy set over all 125 triples (x, y, z) in U^3 with
product memberships, describing every possible path a student can take
through the states.

Degrees are kept as exact `fractions.Fraction`s (counts over totals are
small rationals), so normalization and marginalization identities hold
exactly, not just to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .errors import EmptyDistribution, NegativeWeight, ShapeMismatch

STATE_NAMES = {1: "interpretation", 2: "generalization", 3: "categorization"}


class AcquisitionLevel(Enum):
    """Acquisition grades, worst to best."""

    NEGLIGIBLE = "a"
    LOW = "b"
    INTERMEDIATE = "c"
    HIGH = "d"
    COMPLETE = "e"

    def __lt__(self, other: "AcquisitionLevel") -> bool:
        return self.value < other.value


LEVELS: tuple[AcquisitionLevel, ...] = tuple(AcquisitionLevel)
Triple = tuple[AcquisitionLevel, AcquisitionLevel, AcquisitionLevel]
TRIPLES: tuple[Triple, ...] = tuple(product(LEVELS, repeat=3))  # lexicographic


@dataclass(frozen=True)
class StateMembership:
    """Fuzzy set of one learning state: degree of each acquisition grade."""

    state: int
    degrees: Mapping[AcquisitionLevel, Fraction]

    def __post_init__(self):
        if self.state not in STATE_NAMES:
            raise ShapeMismatch(f"state index must be 1, 2 or 3, got {self.state}")
        unknown = set(self.degrees) - set(LEVELS)
        if unknown:
            raise ShapeMismatch(f"unknown acquisition grades: {unknown}")
        fixed = {level: Fraction(self.degrees.get(level, 0)) for level in LEVELS}
        object.__setattr__(self, "degrees", fixed)
        for level, degree in fixed.items():
            if degree < 0 or degree > 1:
                raise NegativeWeight(
                    f"degree of {level.value} in state {self.state} is {degree}"
                )
        total = sum(fixed.values())
        if abs(total - 1) > Fraction(1, 10**12):
            raise ShapeMismatch(f"state {self.state} degrees sum to {total}, expected 1")

    @property
    def name(self) -> str:
        return STATE_NAMES[self.state]

    def degree(self, level: AcquisitionLevel) -> Fraction:
        return self.degrees[level]


def membership_from_counts(
    state: int, counts: Sequence[int], n: int
) -> StateMembership:
    """Membership degrees n_x / n from per-grade student counts."""
    if len(counts) != len(LEVELS):
        raise ShapeMismatch(f"expected {len(LEVELS)} counts, got {len(counts)}")
    if n <= 0:
        raise EmptyDistribution(f"total student count must be positive, got {n}")
    for level, c in zip(LEVELS, counts):
        if c < 0:
            raise NegativeWeight(f"count of grade {level.value} is {c}")
    if sum(counts) != n:
        raise ShapeMismatch(f"counts sum to {sum(counts)}, but n = {n}")
    return StateMembership(
        state, {level: Fraction(c, n) for level, c in zip(LEVELS, counts)}
    )


@dataclass(frozen=True)
class ProfileRelation:
    """Fuzzy relation over U^3: each triple's degree is a product of state degrees."""

    degrees: Mapping[Triple, Fraction]

    def __post_init__(self):
        if set(self.degrees) != set(TRIPLES):
            raise ShapeMismatch("profile relation must cover all 125 triples")
        object.__setattr__(
            self, "degrees", {t: Fraction(self.degrees[t]) for t in TRIPLES}
        )

    def degree(self, triple: Triple) -> Fraction:
        return self.degrees[triple]

    def total(self) -> Fraction:
        """Sum over all 125 triples; exactly 1 for product-built relations."""
        return sum(self.degrees.values(), Fraction(0))

    def marginal(self, state: int) -> dict[AcquisitionLevel, Fraction]:
        """Sum degrees over the other two coordinates; recovers that state's set."""
        if state not in STATE_NAMES:
            raise ShapeMismatch(f"state index must be 1, 2 or 3, got {state}")
        out = {level: Fraction(0) for level in LEVELS}
        for triple, degree in self.degrees.items():
            out[triple[state - 1]] += degree
        return out


def profile_relation(
    a1: StateMembership, a2: StateMembership, a3: StateMembership
) -> ProfileRelation:
    """All 125 behaviour profiles with product membership degrees."""
    if (a1.state, a2.state, a3.state) != (1, 2, 3):
        raise ShapeMismatch(
            f"expected states (1, 2, 3), got ({a1.state}, {a2.state}, {a3.state})"
        )
    return ProfileRelation(
        {
            (x, y, z): a1.degree(x) * a2.degree(y) * a3.degree(z)
            for x, y, z in TRIPLES
        }
    )


def top_profiles(relation: ProfileRelation, k: int) -> list[tuple[Triple, Fraction]]:
    """The k highest-degree triples, ties broken lexicographically.

    Asking for more than 125 returns all of them.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ranked = sorted(
        relation.degrees.items(),
        key=lambda item: (-item[1], tuple(level.value for level in item[0])),
    )
    return ranked[:k]
