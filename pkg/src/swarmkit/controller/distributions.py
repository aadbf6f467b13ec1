# src/swarmkit/controller/distributions.py

r"""
Wrapped Cauchy turn angles.

The wrapped Cauchy density on the circle is

.. math::

    f(\theta;\mu,\rho)
    =
    \frac{1}{2\pi}
    \frac{1-\rho^2}{1+\rho^2-2\rho\cos(\theta-\mu)},
    \qquad 0 \le \rho < 1.

``rho = 0`` is the uniform distribution; ``rho -> 1`` concentrates all
mass at ``mu``.

Samples use the exact inverse transform: if ``U`` is uniform on
``[0, 1)``, then

.. math::

    \theta
    =
    \mu + 2\arctan\!\left(
        \frac{1-\rho}{1+\rho}\tan\bigl(\pi(U-\tfrac12)\bigr)
    \right)

follows the density above, because ``tan(theta/2)`` of a wrapped Cauchy
variate is an ordinary Cauchy variate with scale ``(1-rho)/(1+rho)``.
"""

from __future__ import annotations

import numpy as np

from swarmkit.numeric import as_f64_array, is_scalar, wrap_angle
from swarmkit.types import ArrayLike


def _check_rho(rho: float) -> None:
    if not 0.0 <= rho < 1.0:
        raise ValueError("rho must satisfy 0 <= rho < 1.")


def wrapped_cauchy_pdf(theta: ArrayLike, mu: float, rho: float) -> ArrayLike:
    """
    Wrapped Cauchy density.

    Parameters
    ----------
    theta : float or numpy.ndarray
        Angles in radians.
    mu : float
        Mean direction in radians.
    rho : float
        Concentration in ``[0, 1)``.

    Returns
    -------
    float or numpy.ndarray
        Density values, scalar in, scalar out.

    Raises
    ------
    ValueError
        If ``rho`` is outside ``[0, 1)``.
    """
    _check_rho(rho)

    t = as_f64_array(theta)
    density = (
        (1.0 - rho * rho)
        / (1.0 + rho * rho - 2.0 * rho * np.cos(t - mu))
        / (2.0 * np.pi)
    )

    if is_scalar(theta):
        return float(density)
    return density


def sample_turn_angle(
    mu: float,
    rho: float,
    rng: np.random.Generator,
    size: int | None = None,
) -> ArrayLike:
    """
    Draw wrapped Cauchy angles wrapped to ``[-pi, pi)``.

    Parameters
    ----------
    mu : float
        Mean direction in radians.
    rho : float
        Concentration in ``[0, 1)``.
    rng : numpy.random.Generator
        Random stream; one uniform variate is consumed per sample.
    size : int, optional
        Number of samples. ``None`` returns a single float.

    Raises
    ------
    ValueError
        If ``rho`` is outside ``[0, 1)``.
    """
    _check_rho(rho)

    u = rng.random(size)
    scale = (1.0 - rho) / (1.0 + rho)
    theta = mu + 2.0 * np.arctan(scale * np.tan(np.pi * (u - 0.5)))

    return wrap_angle(theta)
