import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from owalinkbase.exceptions import EmptyInput, NonFiniteValue, UnsortedInput
from owalinkbase.owa import (
    Orientation,
    OwaLinkageSpec,
    WeightingTriangleRow,
    coefficient,
    cumulative_weights,
    dominates,
    e_bar,
    e_k,
    owa,
    owa_ascending,
    owa_tilde,
    triangle_row,
)
from owalinkbase.sequences import CoefficientSequence, Tail, sequence

distances = st.lists(
    st.floats(min_value=0.0, max_value=1e3, allow_nan=False, allow_infinity=False), min_size=1, max_size=30
)
coefficients = st.builds(
    lambda rest, tail: CoefficientSequence((1.0,) + tuple(rest), tail),
    st.lists(st.floats(min_value=0.0, max_value=4.0, allow_nan=False), max_size=6),
    st.sampled_from(list(Tail)),
)
orientations = st.sampled_from(list(Orientation))
tied = st.lists(st.sampled_from([0.0, 0.5, 1.0, 2.0]), min_size=1, max_size=30)


def test_parse_spec():
    spec = OwaLinkageSpec.parse("lo:1,1;zero")
    assert spec.orientation is Orientation.SMALLEST_FIRST
    assert spec.coefficients.prefix == (1.0, 1.0)
    assert str(spec) == "lo:1,1;zero"
    assert OwaLinkageSpec.parse("1,0.5").largest_first


@pytest.mark.parametrize(
    "text, values, expected",
    [
        ("hi:1;zero", [0.3, 0.9, 0.1], 0.9),
        ("lo:1;zero", [0.3, 0.9, 0.1], 0.1),
        ("hi:1;repeat", [1, 2, 6], 3.0),
        ("lo:1,1;zero", [0.6, 0.9, 0.7, 0.6], 0.6),
        ("lo:1,1;zero", [0.9, 0.6, 0.7, 0.9], 0.65),
        ("hi:1,0.5;zero", [1.0, 4.0], 3.0),
    ],
)
def test_owa_values(text, values, expected):
    assert owa(OwaLinkageSpec.parse(text), values) == pytest.approx(expected)


def test_owa_empty():
    with pytest.raises(EmptyInput):
        owa(OwaLinkageSpec.parse("hi:1;repeat"), [])


def test_owa_non_finite():
    with pytest.raises(NonFiniteValue):
        owa(OwaLinkageSpec.parse("hi:1;repeat"), [1.0, float("inf")])


def test_e_bar_rejects_k_above_n():
    with pytest.raises(ValueError):
        e_bar(sequence([1, 0.5]), 3, 2)


def test_triangle_rows():
    c = sequence([1, 0.5])
    assert triangle_row(c, Orientation.LARGEST_FIRST, 1).weights == (1.0,)
    assert triangle_row(c, Orientation.SMALLEST_FIRST, 3).weights == pytest.approx((0.0, 1 / 3, 2 / 3))
    with pytest.raises(EmptyInput):
        triangle_row(c, Orientation.LARGEST_FIRST, 0)


def test_triangle_row_validation():
    with pytest.raises(ValueError):
        WeightingTriangleRow(2, (0.5, 0.6))
    with pytest.raises(ValueError):
        WeightingTriangleRow(3, (0.5, 0.5))


def test_owa_tilde():
    assert owa_tilde(CoefficientSequence.average(), [4, 2], [3, 1]) == 2.5
    # no re-sorting: the second block keeps its weights
    assert owa_tilde(sequence([1, 0.5]), [1], [2]) == pytest.approx(4 / 3)
    with pytest.raises(UnsortedInput):
        owa_tilde(CoefficientSequence.average(), [1, 2], [3])


def test_e_bar_calibration(eight_terms):
    spec = OwaLinkageSpec(eight_terms)
    for n in range(1, 9):
        for k in range(1, n + 1):
            vector = e_bar(eight_terms, k, n)
            assert owa(spec, vector) == pytest.approx(1.0, abs=1e-12)
            assert np.count_nonzero(vector) == k


def test_e_bar_values(eight_terms):
    assert list(e_bar(eight_terms, 1, 3)) == [1.875, 0.0, 0.0]
    assert list(e_bar(eight_terms, 2, 5)) == [1.6875, 1.6875, 0.0, 0.0, 0.0]


def test_e_k():
    assert list(e_k(2, 4)) == [1.0, 1.0, 0.0, 0.0]
    with pytest.raises(ValueError):
        e_k(5, 4)


def test_dominance():
    complete = CoefficientSequence.complete()
    average = CoefficientSequence.average()
    # the maximum puts all weight on the largest value
    assert dominates(average, complete, 5)
    assert not dominates(complete, average, 5)
    assert list(cumulative_weights(average, 4)) == pytest.approx([0.25, 0.5, 0.75, 1.0])


@given(distances, coefficients, orientations)
@settings(max_examples=100)
def test_owa_is_bounded_by_extremes(values, c, orientation):
    result = owa(OwaLinkageSpec(c, orientation), values)
    assert min(values) - 1e-9 <= result <= max(values) + 1e-9


@given(distances, coefficients, orientations, st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_owa_ignores_input_order(values, c, orientation, random):
    spec = OwaLinkageSpec(c, orientation)
    shuffled = list(values)
    random.shuffle(shuffled)
    assert owa(spec, shuffled) == owa(spec, values)


@given(tied, tied, coefficients, orientations, st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_tie_order_never_changes_owa(a, b, c, orientation, random):
    spec = OwaLinkageSpec(c, orientation)
    shuffled = a + b
    random.shuffle(shuffled)
    assert owa(spec, shuffled) == owa(spec, a + b) == owa(spec, b + a)
    merged = np.sort(np.concatenate([np.sort(b), np.sort(a)]), kind="stable")
    assert owa_ascending(spec, merged) == owa(spec, a + b)


@given(distances, coefficients)
@settings(max_examples=100)
def test_orientations_are_mirror_images(values, c):
    lo = owa(OwaLinkageSpec(c, Orientation.SMALLEST_FIRST), values)
    hi = owa(OwaLinkageSpec(c, Orientation.LARGEST_FIRST), [-x for x in values])
    assert lo == pytest.approx(-hi, abs=1e-9)


@given(st.floats(min_value=0.0, max_value=1e3, allow_nan=False), st.integers(1, 20), coefficients, orientations)
def test_owa_is_idempotent(value, m, c, orientation):
    assert math.isclose(owa(OwaLinkageSpec(c, orientation), [value] * m), value, rel_tol=1e-12, abs_tol=1e-12)


@given(coefficients, st.integers(1, 12))
def test_triangle_rows_are_distributions(c, m):
    row = triangle_row(c, Orientation.LARGEST_FIRST, m)
    assert math.isclose(math.fsum(row.weights), 1.0, abs_tol=1e-12)


def test_coefficient_follows_tail():
    assert coefficient(sequence([1, 0.5], "repeat"), 7) == 0.5
    assert coefficient(sequence([1, 0.5]), 7) == 0.0


@given(distances, coefficients, st.integers(1, 6))
def test_unsorted_concatenation_with_own_mean(values, c, m):
    u = sorted(values, reverse=True)
    mean = owa(OwaLinkageSpec(c), u)
    assert math.isclose(owa_tilde(c, u, [mean] * m), mean, rel_tol=1e-12, abs_tol=1e-12)


@given(distances, st.lists(st.floats(min_value=0.0, max_value=10.0), min_size=30, max_size=30), coefficients)
def test_owa_is_monotone(values, increments, c):
    spec = OwaLinkageSpec(c)
    larger = [x + dx for x, dx in zip(values, increments)]
    assert owa(spec, larger) >= owa(spec, values) - 1e-9


@given(coefficients, coefficients, distances)
@settings(max_examples=100)
def test_dominance_on_indicators_extends_to_all_vectors(c, d, values):
    n = len(values)
    if dominates(c, d, n):
        assert owa(OwaLinkageSpec(c), values) <= owa(OwaLinkageSpec(d), values) + 1e-6
