import pytest
from hypothesis import given, strategies as st

from fuzzmark.comparison import (
    CohortResult,
    Rule,
    compare,
    midline_threshold,
    rank,
)
from fuzzmark.core import ModelKind, make_distribution
from fuzzmark.errors import IncomparableCohorts

CBA = ("C", "B", "A")


def cohort(label, raw, kind=ModelKind.RECTANGULAR, labels=CBA):
    return CohortResult.from_distribution(label, make_distribution(labels, raw), kind)


CLASS_1 = cohort("Class I", (10, 0, 50))
CLASS_2 = cohort("Class II", (0, 20, 40))


def test_midline_threshold():
    assert midline_threshold(ModelKind.RECTANGULAR, 3) == 1.5
    assert midline_threshold(ModelKind.RECTANGULAR, 1) == 0.5
    assert midline_threshold(ModelKind.TRAPEZOIDAL_UNIT, 3) == pytest.approx(1.2)
    assert midline_threshold(ModelKind.TRAPEZOIDAL_BASE10, 3) == 12.0


def test_worked_example_rectangular():
    verdict = compare(CLASS_1, CLASS_2)
    assert verdict.winner == "Class I"
    assert verdict.rule is Rule.HIGHER_Y_ABOVE_MID
    assert not verdict.at_threshold


def test_worked_example_trapezoidal():
    a = cohort("Class I", (10, 0, 50), ModelKind.TRAPEZOIDAL_UNIT)
    b = cohort("Class II", (0, 20, 40), ModelKind.TRAPEZOIDAL_UNIT)
    verdict = compare(a, b)
    assert verdict.winner == "Class I"
    assert verdict.rule is Rule.HIGHER_Y_ABOVE_MID


def test_identical_cohorts_tie():
    verdict = compare(CLASS_1, cohort("Clone", (10, 0, 50)))
    assert verdict.winner is None
    assert verdict.rule is Rule.TIE


def test_higher_x_dominates():
    low = cohort("low", (1, 1, 1))
    high = cohort("high", (0, 0, 1))
    verdict = compare(low, high)
    assert verdict.winner == "high"
    assert verdict.rule is Rule.HIGHER_X


def test_below_midline_lower_y_wins():
    # mirrored worked example: same x = 5/6 < 1.5, y = 13/36 vs 10/36
    spread = cohort("spread", (50, 0, 10))
    packed = cohort("packed", (40, 20, 0))
    assert compare(spread, packed).winner == "packed"
    assert compare(spread, packed).rule is Rule.LOWER_Y_BELOW_MID


def test_exact_threshold_treated_as_above_with_flag():
    # both centroids sit exactly on the n=3 midline x = 1.5
    edge = cohort("edge", (0.5, 0.0, 0.5))
    mid = cohort("mid", (0.0, 1.0, 0.0))
    verdict = compare(edge, mid)
    assert verdict.at_threshold
    assert verdict.rule is Rule.HIGHER_Y_ABOVE_MID
    assert verdict.winner == "mid"  # y = 1/2 beats y = 1/4 above the line


def test_incomparable_cohorts():
    with pytest.raises(IncomparableCohorts):
        compare(CLASS_1, cohort("other", (10, 0, 50), ModelKind.TRAPEZOIDAL_UNIT))
    with pytest.raises(IncomparableCohorts):
        compare(CLASS_1, cohort("wide", (1, 2, 3, 4), labels=("D", "C", "B", "A")))


def test_rank_worked_example():
    ranking = rank([CLASS_2, CLASS_1])
    assert ranking.order == ("Class I", "Class II")
    (verdict,) = ranking.verdicts
    assert verdict.winner == "Class I"
    assert verdict.rule is Rule.HIGHER_Y_ABOVE_MID


def test_rank_single_cohort():
    ranking = rank([CLASS_1])
    assert ranking.order == ("Class I",)
    assert ranking.verdicts == ()


def test_rank_distinct_x_descending():
    a = cohort("a", (1, 0, 0))
    b = cohort("b", (0, 1, 0))
    c = cohort("c", (0, 0, 1))
    assert rank([a, c, b]).order == ("c", "b", "a")


def test_rank_rejects_duplicates_and_empty():
    with pytest.raises(IncomparableCohorts):
        rank([])
    with pytest.raises(IncomparableCohorts):
        rank([CLASS_1, cohort("Class I", (1, 1, 1))])


def raw_cohorts(max_cohorts=5):
    raw = st.lists(st.floats(0, 1, allow_nan=False), min_size=3, max_size=3).filter(
        lambda ws: max(ws) > 0
    )
    return st.lists(raw, min_size=1, max_size=max_cohorts)


@given(raws=raw_cohorts(2))
def test_compare_antisymmetry(raws):
    if len(raws) < 2:
        return
    a = cohort("a", raws[0])
    b = cohort("b", raws[1])
    forward = compare(a, b)
    backward = compare(b, a)
    assert forward.winner == backward.winner
    assert forward.rule is backward.rule


@given(raws=raw_cohorts())
def test_rank_equals_signed_sort(raws):
    cohorts = [cohort(f"c{k}", raw) for k, raw in enumerate(raws)]
    threshold = midline_threshold(ModelKind.RECTANGULAR, 3)

    def key(c):
        y = c.centroid.y if c.centroid.x >= threshold else -c.centroid.y
        return (c.centroid.x, y)

    expected = [c.label for c in sorted(cohorts, key=key, reverse=True)]
    assert list(rank(cohorts).order) == expected


@given(raws=raw_cohorts(2), scale=st.floats(0.01, 100, allow_nan=False))
def test_winner_invariant_under_rescaling(raws, scale):
    if len(raws) < 2:
        return
    plain = compare(cohort("a", raws[0]), cohort("b", raws[1]))
    scaled = compare(
        cohort("a", [scale * w for w in raws[0]]),
        cohort("b", [scale * w for w in raws[1]]),
    )
    assert plain.winner == scaled.winner
