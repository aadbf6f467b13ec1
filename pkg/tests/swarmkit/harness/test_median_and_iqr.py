import numpy as np
import pytest
from hypothesis import given, strategies as st

from swarmkit.harness import median_and_iqr


def sorted_quantile(values, q):
    """Linear interpolation between order statistics at position q (n - 1)."""
    xs = sorted(values)
    pos = q * (len(xs) - 1)
    lo = int(np.floor(pos))
    hi = min(lo + 1, len(xs) - 1)
    return xs[lo] + (pos - lo) * (xs[hi] - xs[lo])


def test__odd_sample():
    assert median_and_iqr([1, 2, 3, 4, 5]) == (3.0, 2.0)


def test__constant_sample():
    assert median_and_iqr([7, 7, 7, 7]) == (7.0, 0.0)


def test__even_sample_median_is_midpoint():
    median, _ = median_and_iqr([1, 2, 3, 10])

    assert median == 2.5


def test__single_value():
    assert median_and_iqr([4]) == (4.0, 0.0)


def test__empty_sample():
    with pytest.raises(ValueError):
        median_and_iqr([])


def test__returns_floats():
    median, iqr = median_and_iqr(np.array([1, 2]))

    assert type(median) is float
    assert type(iqr) is float


@given(st.lists(st.integers(min_value=0, max_value=100), min_size=1, max_size=40))
def test__matches_sort_based_oracle(values):
    median, iqr = median_and_iqr(values)

    assert median == pytest.approx(sorted_quantile(values, 0.5))
    assert iqr == pytest.approx(
        sorted_quantile(values, 0.75) - sorted_quantile(values, 0.25)
    )
    assert min(values) <= median <= max(values)
    assert iqr >= 0.0
