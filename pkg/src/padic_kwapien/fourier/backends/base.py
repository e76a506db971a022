"""
Base DFT backend.
"""

from abc import ABC, abstractmethod

from ...types import ComplexArray
from ..plan import TransformPlan


class DFTBackend(ABC):
    name: str = "abstract"

    @abstractmethod
    def apply(self, plan: TransformPlan, values: ComplexArray) -> ComplexArray:
        """Unscaled sums out[b, m] = sum_n roots[m * n mod P] * values[b, n].

        ``values`` has shape (batch, P, d); the result has the same shape.
        """
