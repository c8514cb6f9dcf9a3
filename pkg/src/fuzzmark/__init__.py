"""Fuzzy grade-distribution assessment.

Centroid (center-of-mass) models over achievement-level distributions,
cohort comparison standards, acquisition-profile relations, score
fuzzification, and a first-principles geometric oracle that verifies the
closed forms.
"""

__version__ = "0.1.0"

from .comparison import (
    CohortResult,
    Ranking,
    Rule,
    Verdict,
    compare,
    midline_threshold,
    rank,
)
from .core import (
    CentroidPoint,
    LevelDistribution,
    ModelKind,
    TrapezoidCell,
    centroid,
    composite_center_of_mass,
    figure_extent,
    make_distribution,
    rectangular_centroid,
    trapezoid_cell,
    trapezoid_centroid_ordinate,
    trapezoidal_centroid,
)
from .errors import (
    DegenerateFigure,
    DuplicateStudent,
    EmptyDistribution,
    FuzzmarkError,
    IncomparableCohorts,
    InvalidGeometry,
    NegativeWeight,
    NotNormalized,
    ParseError,
    RangeError,
    ShapeMismatch,
    WrongModel,
)
from .ingestion import (
    FuzzyGradeAssignment,
    GradeBand,
    GradeBandScheme,
    RosterRecord,
    aggregate,
    default_scheme,
    distribution_from_roster,
    fuzzify_score,
    load_scheme,
    parse_roster,
    parse_scheme,
)
from .oracle import (
    MassedFigure,
    Polygon,
    integrate_centroid,
    oracle_centroid,
    polygon_area_centroid,
    rectangular_figure,
    trapezoidal_figure,
)
from .voskoglou import (
    AcquisitionLevel,
    ProfileRelation,
    StateMembership,
    membership_from_counts,
    profile_relation,
    top_profiles,
)

__all__ = [
    "__version__",
    "AcquisitionLevel",
    "CentroidPoint",
    "CohortResult",
    "DegenerateFigure",
    "DuplicateStudent",
    "EmptyDistribution",
    "FuzzmarkError",
    "FuzzyGradeAssignment",
    "GradeBand",
    "GradeBandScheme",
    "IncomparableCohorts",
    "InvalidGeometry",
    "LevelDistribution",
    "MassedFigure",
    "ModelKind",
    "NegativeWeight",
    "NotNormalized",
    "ParseError",
    "Polygon",
    "ProfileRelation",
    "RangeError",
    "Ranking",
    "RosterRecord",
    "Rule",
    "ShapeMismatch",
    "StateMembership",
    "TrapezoidCell",
    "Verdict",
    "WrongModel",
    "aggregate",
    "centroid",
    "compare",
    "composite_center_of_mass",
    "default_scheme",
    "distribution_from_roster",
    "figure_extent",
    "fuzzify_score",
    "integrate_centroid",
    "load_scheme",
    "make_distribution",
    "membership_from_counts",
    "midline_threshold",
    "oracle_centroid",
    "parse_roster",
    "parse_scheme",
    "polygon_area_centroid",
    "profile_relation",
    "rank",
    "rectangular_centroid",
    "rectangular_figure",
    "top_profiles",
    "trapezoid_cell",
    "trapezoid_centroid_ordinate",
    "trapezoidal_centroid",
    "trapezoidal_figure",
]
