# src/swarmkit/harness/statistics.py

"""Order statistics for per-cell trial counts."""

from __future__ import annotations

from typing import Sequence

import numpy as np


def median_and_iqr(samples: Sequence[float]) -> tuple[float, float]:
    """
    Median and interquartile range of a sample.

    Quartiles use linear interpolation between order statistics
    (``numpy.percentile`` with ``method="linear"``): the ``q``-quantile of
    ``n`` sorted values sits at fractional position ``q (n - 1)``. The
    median of an even-length sample is the midpoint of the two central
    values under the same rule.

    Parameters
    ----------
    samples:
        Non-empty sequence of counts.

    Returns
    -------
    tuple[float, float]
        ``(median, Q3 - Q1)``.

    Raises
    ------
    ValueError
        If ``samples`` is empty.

    Examples
    --------
    >>> median_and_iqr([1, 2, 3, 4, 5])
    (3.0, 2.0)
    """
    values = np.asarray(samples, dtype=np.float64).ravel()
    if values.size == 0:
        raise ValueError("samples must be non-empty.")

    q1, median, q3 = np.percentile(values, [25.0, 50.0, 75.0], method="linear")
    return float(median), float(q3 - q1)
