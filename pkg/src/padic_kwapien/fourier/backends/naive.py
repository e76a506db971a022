"""
Direct O(P^2) DFT from the exact index table.
"""

import numpy as np

from ...errors import CapExceededError
from ...types import ComplexArray
from ..plan import TransformPlan
from .base import DFTBackend

NAIVE_MAX_SIZE = 1024


def dft_matrix(plan: TransformPlan) -> ComplexArray:
    n = np.arange(plan.size)
    # phase indices are reduced mod P before touching the root table
    return plan.roots[np.outer(n, n) % plan.size]


class NaiveBackend(DFTBackend):
    name = "naive"

    def apply(self, plan: TransformPlan, values: ComplexArray) -> ComplexArray:
        if plan.size > NAIVE_MAX_SIZE:
            raise CapExceededError(
                f"naive DFT of size {plan.size} exceeds {NAIVE_MAX_SIZE}; use the radix backend"
            )
        return np.einsum("mn,bnd->bmd", dft_matrix(plan), values)
