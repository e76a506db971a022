"""
numpy.fft backend, an independent oracle for the other two.
"""

import numpy as np

from ...types import ComplexArray
from ..plan import TransformDirection, TransformPlan
from .base import DFTBackend


class NumpyBackend(DFTBackend):
    name = "numpy"

    def apply(self, plan: TransformPlan, values: ComplexArray) -> ComplexArray:
        # numpy's forward FFT uses e^{-2 pi i mn/P}; chi_p carries the positive sign
        if plan.direction is TransformDirection.FORWARD:
            return plan.size * np.fft.ifft(values, axis=1)
        return np.fft.fft(values, axis=1)
