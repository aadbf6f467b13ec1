# swarmkit/types.py

from __future__ import annotations
from typing import TypeAlias, Union

import numpy as np
from numpy.typing import NDArray

# Scalar or numeric NumPy array (most common scientific pattern)
Scalar = float
FloatArray: TypeAlias = NDArray[np.float64]
IntArray: TypeAlias = NDArray[np.int64]
BoolArray: TypeAlias = NDArray[np.bool_]
ArrayLike = Union[Scalar, FloatArray]

# 2D point in meters
Point: TypeAlias = tuple[float, float]
