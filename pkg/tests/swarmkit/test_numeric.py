import numpy as np
import pytest
from hypothesis import given, strategies as st

from swarmkit.numeric import as_f64_array, is_scalar, unit_vectors, wrap_angle


def test__wrap_angle__scalar_in_scalar_out():
    assert isinstance(wrap_angle(1.0), float)


@pytest.mark.parametrize(
    "theta, expected",
    [
        (0.0, 0.0),
        (np.pi, -np.pi),
        (-np.pi, -np.pi),
        (3.0 * np.pi / 2.0, -np.pi / 2.0),
        (-3.0 * np.pi / 2.0, np.pi / 2.0),
        (4.0 * np.pi, 0.0),
    ],
)
def test__wrap_angle__known_values(theta, expected):
    assert wrap_angle(theta) == pytest.approx(expected, abs=1e-12)


def test__wrap_angle__tiny_negative_stays_in_range():
    assert -np.pi <= wrap_angle(-1e-18) < np.pi


@given(st.floats(min_value=-1e4, max_value=1e4, allow_nan=False))
def test__wrap_angle__is_in_half_open_interval(theta):
    wrapped = wrap_angle(theta)
    assert -np.pi <= wrapped < np.pi
    # same direction
    assert np.cos(wrapped) == pytest.approx(np.cos(theta), abs=1e-9)
    assert np.sin(wrapped) == pytest.approx(np.sin(theta), abs=1e-9)


def test__wrap_angle__array():
    out = wrap_angle(np.array([0.0, 2.0 * np.pi, -2.5 * np.pi]))
    np.testing.assert_allclose(out, [0.0, 0.0, -0.5 * np.pi], atol=1e-12)


def test__unit_vectors__shape_and_norm():
    v = unit_vectors(np.array([0.0, np.pi / 2.0, np.pi]))
    assert v.shape == (3, 2)
    np.testing.assert_allclose(v, [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]], atol=1e-12)


def test__unit_vectors__scalar_gives_one_row():
    assert unit_vectors(0.3).shape == (1, 2)


def test__as_f64_array__and_is_scalar():
    assert as_f64_array([1, 2]).dtype == np.float64
    assert is_scalar(3.0)
    assert is_scalar(np.float64(3.0))
    assert not is_scalar([3.0])
