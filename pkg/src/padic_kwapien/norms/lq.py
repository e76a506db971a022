"""
Weighted and plain l_q norms.
"""

from __future__ import annotations

import math
from typing import Any, Sequence

import numpy as np
import numpy.typing as npt

from ..errors import InvalidInputError
from ..types import ScalarField
from .base import NormSpec


def conjugate_exponent(q: float) -> float:
    """q' with 1/q + 1/q' = 1."""
    if q == 1:
        return math.inf
    if math.isinf(q):
        return 1.0
    return q / (q - 1)


def format_exponent(q: float) -> str:
    return "inf" if math.isinf(q) else repr(float(q))


class WeightedLqNorm(NormSpec):
    """(sum_i w_i |x_i|^q)^(1/q), and max_i w_i |x_i| for q = inf.

    Duality: for 1 < q < inf the dual weights are w_i^(-q'/q); at the endpoints
    (q = 1 <-> q = inf) they are 1/w_i. Either way dual(dual(spec)) == spec.
    """

    kind = "wlq"

    def __init__(
        self,
        q: float,
        weights: Sequence[float],
        field: ScalarField = ScalarField.COMPLEX,
    ) -> None:
        super().__init__(len(weights), field)
        q = float(q)
        if not q >= 1:
            raise InvalidInputError(f"q must lie in [1, inf], got {q}")
        w = np.asarray(weights, dtype=np.float64)
        if not np.all(np.isfinite(w)) or np.any(w <= 0):
            raise InvalidInputError(f"weights must be positive and finite, got {list(weights)}")
        self.q = q
        self.weights = w
        self.weights.setflags(write=False)

    def _evaluate(self, x: npt.NDArray[Any]) -> npt.NDArray[np.float64]:
        a = np.abs(x)
        if math.isinf(self.q):
            return np.max(self.weights * a, axis=-1)
        if self.q == 1:
            return np.sum(self.weights * a, axis=-1)
        if self.q == 2:
            return np.sqrt(np.sum(self.weights * a * a, axis=-1))
        return np.sum(self.weights * a**self.q, axis=-1) ** (1 / self.q)

    def dual(self) -> NormSpec:
        q_dual = conjugate_exponent(self.q)
        if self.q == 1 or math.isinf(self.q):
            weights = 1 / self.weights
        else:
            weights = self.weights ** (-q_dual / self.q)
        return WeightedLqNorm(q_dual, weights.tolist(), self.field)._simplify()

    def _simplify(self) -> NormSpec:
        if np.all(self.weights == 1):
            return LqNorm(self.q, self.dim, self.field)
        return self

    def describe(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "q": format_exponent(self.q),
            "dim": self.dim,
            "weights": [float(w) for w in self.weights],
            "field": self.field.value,
        }


class LqNorm(WeightedLqNorm):
    """The l_q norm on a d-dimensional space."""

    kind = "lq"

    def __init__(self, q: float, dim: int, field: ScalarField = ScalarField.COMPLEX) -> None:
        super().__init__(q=q, weights=[1.0] * dim, field=field)

    def describe(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "q": format_exponent(self.q),
            "dim": self.dim,
            "field": self.field.value,
        }


class EuclideanNorm(LqNorm):
    """l_2, the Hilbert baseline."""

    def __init__(self, dim: int, field: ScalarField = ScalarField.COMPLEX) -> None:
        super().__init__(q=2, dim=dim, field=field)
