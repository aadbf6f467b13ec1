# src/swarmkit/controller/probabilities.py

r"""
Leave probabilities for non-informed robots resting on a site.

Baseline, with ``n`` the informed broadcasters in range now and ``x`` the
same count when the robot joined:

.. math::

    P = \begin{cases}
        \min\bigl(1, e^{-a(k-|n-x|)}\bigr) & n > 0 \\
        1 & n = 0
    \end{cases}

Simplified, with ``n`` all broadcasters in range now:

.. math::

    P' = \alpha e^{-\beta n}
"""

from __future__ import annotations

import numpy as np

from swarmkit.numeric import as_f64_array, is_scalar
from swarmkit.types import ArrayLike


def p_leave_baseline(n: ArrayLike, x: ArrayLike, a: float, k: float) -> ArrayLike:
    """
    Baseline leave probability.

    Depends on the change ``|n - x|`` in perceived informed neighbors since
    joining; an empty neighborhood always triggers leaving. Values above
    one, reachable when ``|n - x| > k``, are clamped.

    Raises
    ------
    ValueError
        If ``n`` or ``x`` is negative.
    """
    n_arr = as_f64_array(n)
    x_arr = as_f64_array(x)

    if np.any(n_arr < 0) or np.any(x_arr < 0):
        raise ValueError("n and x must be >= 0.")

    raw = np.exp(-a * (k - np.abs(n_arr - x_arr)))
    p = np.where(n_arr == 0, 1.0, np.minimum(raw, 1.0))

    if is_scalar(n) and is_scalar(x):
        return float(p)
    return p


def p_leave_simplified(n: ArrayLike, alpha: float, beta: float) -> ArrayLike:
    """
    Simplified leave probability ``alpha * exp(-beta * n)``.

    Memoryless: only the current census matters.

    Raises
    ------
    ValueError
        If ``n`` is negative.
    """
    n_arr = as_f64_array(n)

    if np.any(n_arr < 0):
        raise ValueError("n must be >= 0.")

    p = alpha * np.exp(-beta * n_arr)

    if is_scalar(n):
        return float(p)
    return p
