"""Roster ingestion and score fuzzification.

Numeric scores near a grade-band boundary genuinely belong to both
adjacent grades; a score w points or more inside a band belongs to it
outright. Within the crossover window of half-width w around a boundary
the two memberships split linearly and complement each other to 1, so
every score fuzzifies to at most two adjacent levels whose degrees sum
to exactly 1. Per-student assignments average into a level distribution
for the centroid models.

Band labels may carry +/- refinements ("B-", "B", "B+"); those are
display sub-bands of one level and collapse onto the base letter before
modelling.
"""

from __future__ import annotations

import csv
import io
import re
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, TextIO

from .core import LevelDistribution, make_distribution
from .errors import (
    DuplicateStudent,
    EmptyDistribution,
    ParseError,
    RangeError,
    ShapeMismatch,
)

SCORE_MIN = 0.0
SCORE_MAX = 100.0
DEFAULT_CROSSOVER = 1.5

_BAND_RE = re.compile(r"^level\s+(\S+)\s*=\s*([0-9.]+)\s*-\s*([0-9.]+)$")
_CROSSOVER_RE = re.compile(r"^crossover\s*=\s*([0-9.]+)$")


class InvalidScheme(ParseError):
    """A grade-band scheme that does not partition the score scale."""


@dataclass(frozen=True)
class RosterRecord:
    student: str
    score: float


@dataclass(frozen=True)
class GradeBand:
    label: str
    lo: float
    hi: float

    @property
    def base_label(self) -> str:
        """Label with a trailing +/- display refinement stripped."""
        return self.label.rstrip("+-") or self.label


@dataclass(frozen=True)
class GradeBandScheme:
    """Ordered bands partitioning [0, 100], plus the crossover half-width.

    Bands are ascending and gapless; integer-style ranges ("0-69",
    "70-82") and continuous ones ("0-70", "70-83") are both accepted, the
    real boundary between two bands being the start of the upper one.
    """

    bands: tuple[GradeBand, ...]
    crossover: float = DEFAULT_CROSSOVER

    def __post_init__(self):
        object.__setattr__(self, "bands", tuple(self.bands))
        if not self.bands:
            raise InvalidScheme("a scheme needs at least one band")
        if len({b.label for b in self.bands}) != len(self.bands):
            raise InvalidScheme("band labels must be distinct")
        if self.bands[0].lo != SCORE_MIN or self.bands[-1].hi != SCORE_MAX:
            raise InvalidScheme(f"bands must span [{SCORE_MIN:g}, {SCORE_MAX:g}]")
        for band in self.bands:
            if not band.lo < band.hi:
                raise InvalidScheme(f"band {band.label!r} range is empty")
        for lower, upper in zip(self.bands, self.bands[1:]):
            gap = upper.lo - lower.hi
            if gap not in (0.0, 1.0):
                raise InvalidScheme(
                    f"bands {lower.label!r} and {upper.label!r} leave a gap of {gap}"
                )
        if self.crossover < 0:
            raise InvalidScheme(f"crossover width must be >= 0, got {self.crossover}")
        edges = (SCORE_MIN,) + self.boundaries + (SCORE_MAX,)
        narrowest = min(b - a for a, b in zip(edges, edges[1:]))
        if self.crossover >= narrowest / 2 and self.crossover > 0:
            raise InvalidScheme(
                f"crossover {self.crossover:g} must be under half the narrowest band ({narrowest:g})"
            )

    @property
    def boundaries(self) -> tuple[float, ...]:
        """Interior boundaries, each the start of its upper band."""
        return tuple(band.lo for band in self.bands[1:])

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(band.label for band in self.bands)

    @property
    def base_labels(self) -> tuple[str, ...]:
        """Band labels with +/- sub-bands collapsed, order preserved."""
        seen: list[str] = []
        for band in self.bands:
            if band.base_label not in seen:
                seen.append(band.base_label)
        return tuple(seen)

    def band_at(self, score: float) -> GradeBand:
        """The band owning a score; boundaries belong to the upper band."""
        if not SCORE_MIN <= score <= SCORE_MAX:
            raise RangeError(f"score {score} outside [{SCORE_MIN:g}, {SCORE_MAX:g}]")
        return self.bands[bisect_right(self.boundaries, score)]


def default_scheme() -> GradeBandScheme:
    """Built-in three-level scheme: C 0-69, B 70-82, A 83-100, w = 1.5."""
    return GradeBandScheme(
        (
            GradeBand("C", 0.0, 69.0),
            GradeBand("B", 70.0, 82.0),
            GradeBand("A", 83.0, 100.0),
        ),
        crossover=DEFAULT_CROSSOVER,
    )


def parse_scheme(text: str) -> GradeBandScheme:
    """Parse the key-value scheme format.

    One `level LABEL = LO-HI` line per band (ascending) and an optional
    `crossover = W` line; blank lines and #-comments are ignored.
    """
    bands: list[GradeBand] = []
    crossover = DEFAULT_CROSSOVER
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if m := _BAND_RE.match(line):
            bands.append(GradeBand(m.group(1), float(m.group(2)), float(m.group(3))))
        elif m := _CROSSOVER_RE.match(line):
            crossover = float(m.group(1))
        else:
            raise InvalidScheme(f"unrecognized scheme line {line!r}", line=lineno)
    return GradeBandScheme(tuple(bands), crossover)


def load_scheme(path: str) -> GradeBandScheme:
    with open(path, encoding="utf-8") as fh:
        return parse_scheme(fh.read())


@dataclass(frozen=True)
class FuzzyGradeAssignment:
    """One student's memberships: at most two adjacent levels, summing to 1."""

    student: str
    degrees: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "degrees", dict(self.degrees))
        if not 1 <= len(self.degrees) <= 2:
            raise ShapeMismatch(
                f"assignment must cover one or two levels, got {len(self.degrees)}"
            )
        if any(d < 0 for d in self.degrees.values()):
            raise ShapeMismatch(f"membership degrees must be >= 0: {self.degrees}")
        if sum(self.degrees.values()) != 1.0:
            raise ShapeMismatch(
                f"membership degrees must sum to exactly 1: {self.degrees}"
            )

    def collapsed(self) -> "FuzzyGradeAssignment":
        """Merge +/- sub-band degrees onto their base labels."""
        merged: dict[str, float] = {}
        for label, degree in self.degrees.items():
            base = label.rstrip("+-") or label
            merged[base] = merged.get(base, 0.0) + degree
        return FuzzyGradeAssignment(self.student, merged)


def fuzzify_score(
    score: float, scheme: GradeBandScheme, student: str = ""
) -> FuzzyGradeAssignment:
    """Memberships of one score under a scheme.

    At distance >= w from every boundary the containing band gets degree
    1. Within w of the boundary at t the upper band's degree rises
    linearly from 0 at t - w to 1 at t + w, and the lower band holds the
    complement, so the two degrees always sum to exactly 1. The scale
    ends never split: 0 and 100 are not boundaries.
    """
    if not SCORE_MIN <= score <= SCORE_MAX:
        raise RangeError(f"score {score} outside [{SCORE_MIN:g}, {SCORE_MAX:g}]")
    w = scheme.crossover
    band = scheme.band_at(score)
    if w > 0:
        for i, t in enumerate(scheme.boundaries):
            if t - w < score < t + w:
                upper = (score - (t - w)) / (2 * w)
                lower_band, upper_band = scheme.bands[i], scheme.bands[i + 1]
                if upper <= 0.0:
                    return FuzzyGradeAssignment(student, {lower_band.label: 1.0})
                if upper >= 1.0:
                    return FuzzyGradeAssignment(student, {upper_band.label: 1.0})
                return FuzzyGradeAssignment(
                    student, {lower_band.label: 1.0 - upper, upper_band.label: upper}
                )
    return FuzzyGradeAssignment(student, {band.label: 1.0})


def parse_roster(stream: TextIO | str) -> list[RosterRecord]:
    """Parse a `student,score` CSV roster.

    The header must be exactly `student,score`; fields may be quoted.
    Raises ParseError/RangeError with the offending line number and
    DuplicateStudent on a repeated id.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("roster is empty; expected header 'student,score'") from None
    if [h.strip().lstrip("﻿").lower() for h in header] != ["student", "score"]:
        raise ParseError(f"expected header 'student,score', got {','.join(header)!r}", line=1)

    records: list[RosterRecord] = []
    seen: dict[str, int] = {}
    for row in reader:
        lineno = reader.line_num
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            raise ParseError(f"expected 2 fields, got {len(row)}", line=lineno)
        student = row[0].strip()
        if not student:
            raise ParseError("empty student id", line=lineno)
        try:
            score = float(row[1])
        except ValueError:
            raise ParseError(f"score {row[1]!r} is not a number", line=lineno) from None
        if not SCORE_MIN <= score <= SCORE_MAX:
            raise RangeError(
                f"score {score:g} outside [{SCORE_MIN:g}, {SCORE_MAX:g}]", line=lineno
            )
        if student in seen:
            raise DuplicateStudent(
                f"student {student!r} already seen on line {seen[student]}", line=lineno
            )
        seen[student] = lineno
        records.append(RosterRecord(student, score))
    return records


def aggregate(
    assignments: Iterable[FuzzyGradeAssignment], labels: Sequence[str]
) -> LevelDistribution:
    """Average per-student memberships into a level distribution."""
    totals = {label: 0.0 for label in labels}
    count = 0
    for assignment in assignments:
        for label, degree in assignment.degrees.items():
            if label not in totals:
                raise ShapeMismatch(f"assignment level {label!r} not among {tuple(labels)}")
            totals[label] += degree
        count += 1
    if count == 0:
        raise EmptyDistribution("no assignments to aggregate")
    return make_distribution(tuple(labels), tuple(totals[label] for label in labels))


def distribution_from_roster(
    records: Sequence[RosterRecord], scheme: GradeBandScheme
) -> LevelDistribution:
    """Fuzzify a whole roster and aggregate onto the scheme's base levels."""
    assignments = [
        fuzzify_score(r.score, scheme, student=r.student).collapsed() for r in records
    ]
    return aggregate(assignments, scheme.base_labels)
