import random
from fractions import Fraction
from itertools import permutations

import pytest

from fuzzmark.errors import EmptyDistribution, NegativeWeight, ShapeMismatch
from fuzzmark.voskoglou import (
    LEVELS,
    TRIPLES,
    AcquisitionLevel,
    StateMembership,
    membership_from_counts,
    profile_relation,
    top_profiles,
)

A, B, C, D, E = LEVELS


def point_mass(state: int, level: AcquisitionLevel) -> StateMembership:
    return StateMembership(state, {level: Fraction(1)})


def test_membership_from_counts():
    complete = membership_from_counts(1, (0, 0, 0, 0, 60), 60)
    assert complete.degree(E) == 1
    assert complete.degree(A) == 0

    uniform = membership_from_counts(2, (12, 12, 12, 12, 12), 60)
    assert all(uniform.degree(level) == Fraction(1, 5) for level in LEVELS)

    split = membership_from_counts(1, (10, 0, 0, 0, 50), 60)
    assert [split.degree(level) for level in LEVELS] == [
        Fraction(1, 6), 0, 0, 0, Fraction(5, 6)
    ]
    assert sum(split.degrees.values()) == 1


def test_membership_errors():
    with pytest.raises(EmptyDistribution):
        membership_from_counts(1, (0, 0, 0, 0, 0), 0)
    with pytest.raises(ShapeMismatch):
        membership_from_counts(1, (1, 2, 3, 4, 5), 14)
    with pytest.raises(ShapeMismatch):
        membership_from_counts(1, (1, 2, 3), 6)
    with pytest.raises(NegativeWeight):
        membership_from_counts(1, (-1, 1, 0, 0, 60), 60)
    with pytest.raises(ShapeMismatch):
        membership_from_counts(4, (0, 0, 0, 0, 1), 1)


def test_relation_point_masses():
    relation = profile_relation(point_mass(1, E), point_mass(2, E), point_mass(3, E))
    assert relation.degree((E, E, E)) == 1
    assert sum(1 for t in TRIPLES if relation.degree(t) > 0) == 1


def test_relation_uniform():
    uniform = [membership_from_counts(i, (1, 1, 1, 1, 1), 5) for i in (1, 2, 3)]
    relation = profile_relation(*uniform)
    assert all(relation.degree(t) == Fraction(1, 125) for t in TRIPLES)
    assert relation.total() == 1


def test_relation_mixed_example():
    # half/half on a and e in state 1, everything at c in states 2 and 3
    a1 = membership_from_counts(1, (1, 0, 0, 0, 1), 2)
    relation = profile_relation(a1, point_mass(2, C), point_mass(3, C))
    nonzero = {t: d for t, d in relation.degrees.items() if d > 0}
    assert nonzero == {(A, C, C): Fraction(1, 2), (E, C, C): Fraction(1, 2)}


def test_relation_requires_state_order():
    with pytest.raises(ShapeMismatch):
        profile_relation(point_mass(1, E), point_mass(3, E), point_mass(2, E))


def test_top_profiles():
    uniform = [membership_from_counts(i, (1, 1, 1, 1, 1), 5) for i in (1, 2, 3)]
    top = top_profiles(profile_relation(*uniform), 1)
    assert top == [((A, A, A), Fraction(1, 125))]

    pointy = profile_relation(point_mass(1, E), point_mass(2, E), point_mass(3, E))
    top3 = top_profiles(pointy, 3)
    assert top3[0] == ((E, E, E), 1)
    assert top3[1] == ((A, A, A), 0)
    assert top3[2] == ((A, A, B), 0)

    a1 = membership_from_counts(1, (1, 0, 0, 0, 1), 2)
    mixed = profile_relation(a1, point_mass(2, C), point_mass(3, C))
    assert top_profiles(mixed, 2) == [
        ((A, C, C), Fraction(1, 2)),
        ((E, C, C), Fraction(1, 2)),
    ]

    assert len(top_profiles(pointy, 1000)) == 125
    with pytest.raises(ValueError):
        top_profiles(pointy, 0)


def random_counts(rng: random.Random) -> tuple[int, ...]:
    counts = tuple(rng.randint(0, 20) for _ in LEVELS)
    return counts if sum(counts) > 0 else (1, 0, 0, 0, 0)


def test_normalization_and_marginals_are_exact():
    rng = random.Random(42)
    for _ in range(100):
        states = []
        totals = None
        for i in (1, 2, 3):
            counts = random_counts(rng)
            states.append(membership_from_counts(i, counts, sum(counts)))
        relation = profile_relation(*states)
        assert relation.total() == 1  # exact Fraction identity
        for i, state in enumerate(states, start=1):
            assert relation.marginal(i) == dict(state.degrees)


def test_permutation_covariance():
    rng = random.Random(7)
    counts = [random_counts(rng) for _ in range(3)]
    states = [membership_from_counts(i, c, sum(c)) for i, c in enumerate(counts, 1)]
    relation = profile_relation(*states)
    for sigma in list(permutations(range(5)))[:10]:
        permuted_states = [
            membership_from_counts(i, tuple(c[sigma[k]] for k in range(5)), sum(c))
            for i, c in enumerate(counts, 1)
        ]
        permuted = profile_relation(*permuted_states)
        mapping = {LEVELS[k]: LEVELS[sigma[k]] for k in range(5)}
        for x, y, z in TRIPLES:
            assert permuted.degree((x, y, z)) == relation.degree(
                (mapping[x], mapping[y], mapping[z])
            )
