"""Deterministic report documents for the CLI.

Reports are plain dict trees with a fixed construction order and every
float rounded to 12 significant digits at build time, so serializing the
same analysis twice yields byte-identical JSON, and JSON round-trips are
lossless. The schema is versioned via a top-level `schema` field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

SCHEMA_VERSION = 1

# A value is reported in rational form only when a small fraction
# reproduces it to well under float-rounding noise at this scale.
_RATIONAL_MAX_DEN = 10**6
_RATIONAL_TOL = 1e-13


def round12(x: float) -> float:
    """Round to 12 significant digits (the report float format)."""
    return float(f"{x:.12g}")


def as_rational(x: float) -> str | None:
    """Small-denominator rational form of x, or None if none fits exactly enough."""
    fraction = Fraction(x).limit_denominator(_RATIONAL_MAX_DEN)
    if abs(float(fraction) - x) <= _RATIONAL_TOL:
        return f"{fraction.numerator}/{fraction.denominator}" if fraction.denominator != 1 else str(fraction.numerator)
    return None


def number_entry(x: float) -> dict[str, Any]:
    """A float plus its rational reading, when one exists."""
    entry: dict[str, Any] = {"value": round12(x)}
    rational = as_rational(x)
    if rational is not None:
        entry["rational"] = rational
    return entry


@dataclass(frozen=True)
class ReportDocument:
    """An ordered, float-rounded report tree with stable serialization."""

    data: dict[str, Any]

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls(json.loads(text))

    def __getitem__(self, key: str) -> Any:
        return self.data[key]
