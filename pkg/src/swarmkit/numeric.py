# swarmkit/numeric.py

from __future__ import annotations

import numpy as np

from swarmkit.types import ArrayLike


def as_f64_array(x: ArrayLike) -> np.ndarray:
    """
    Coerce input to a float64 NumPy array.
    """
    return np.asarray(x, dtype=np.float64)


def is_scalar(x: ArrayLike) -> bool:
    """True if x is scalar or 0-d."""
    return np.ndim(x) == 0


def wrap_angle(theta: ArrayLike) -> ArrayLike:
    r"""
    Wrap angles to the half-open interval :math:`[-\pi, \pi)`.

    Parameters
    ----------
    theta : float or numpy.ndarray
        Angles in radians.

    Returns
    -------
    float or numpy.ndarray
        Wrapped angles, scalar in, scalar out.
    """
    wrapped = np.mod(as_f64_array(theta) + np.pi, 2.0 * np.pi) - np.pi

    # mod can round up to exactly 2*pi for tiny negative inputs
    wrapped = np.where(wrapped >= np.pi, wrapped - 2.0 * np.pi, wrapped)

    if is_scalar(theta):
        return float(wrapped)
    return wrapped


def unit_vectors(headings: ArrayLike) -> np.ndarray:
    """
    Heading angles to unit direction vectors of shape ``(N, 2)``.
    """
    h = np.atleast_1d(as_f64_array(headings))
    return np.column_stack((np.cos(h), np.sin(h)))
