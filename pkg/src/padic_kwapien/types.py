"""
Basic types for padic-kwapien.
"""

from enum import Enum

import numpy as np
import numpy.typing as npt

ComplexArray = npt.NDArray[np.complex128]
RealArray = npt.NDArray[np.float64]


class Direction(str, Enum):
    """Which side of the two-sided Kwapien inequality is being probed."""

    UPPER = "upper"
    LOWER = "lower"


class ScalarField(str, Enum):
    REAL = "real"
    COMPLEX = "complex"
