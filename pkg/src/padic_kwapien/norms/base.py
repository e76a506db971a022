"""
Base class for finite-dimensional norms, the "Banach space X" of this library.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any

import numpy as np
import numpy.typing as npt

from ..errors import DimensionMismatchError, InvalidInputError, UnsupportedNormError
from ..types import ScalarField

HILBERT_SAMPLES = 1000
HILBERT_TOLERANCE = 1e-9


class NormSpec(ABC):
    """A norm on R^dim or C^dim.

    Subclasses implement :meth:`_evaluate`, which receives an array whose last
    axis has length ``dim`` and returns the norms over that axis.
    """

    kind: str = "abstract"

    def __init__(self, dim: int, field: ScalarField = ScalarField.COMPLEX) -> None:
        if dim < 1:
            raise InvalidInputError(f"dimension must be at least 1, got {dim}")
        self.dim = dim
        self.field = ScalarField(field)

    @abstractmethod
    def _evaluate(self, x: npt.NDArray[Any]) -> npt.NDArray[np.float64]:
        pass

    def norm(self, x: npt.ArrayLike) -> Any:
        """Norm of a vector, or of every vector along the last axis of an array."""
        arr = np.asarray(x)
        if arr.ndim == 0 or arr.shape[-1] != self.dim:
            raise DimensionMismatchError(
                f"expected vectors of length {self.dim}, got shape {arr.shape}"
            )
        values = self._evaluate(arr)
        if arr.ndim == 1:
            return float(values)
        return values

    def dual(self) -> NormSpec:
        raise UnsupportedNormError(f"{self.kind} norms have no computable dual")

    @abstractmethod
    def describe(self) -> dict[str, Any]:
        """JSON-ready description; also used for equality."""

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormSpec):
            return NotImplemented
        return self.describe() == other.describe()

    def __hash__(self) -> int:
        return hash(repr(self.describe()))

    def __repr__(self) -> str:
        fields = ", ".join(f"{k}={v!r}" for k, v in self.describe().items())
        return f"{type(self).__name__}({fields})"


def norm(spec: NormSpec, x: npt.ArrayLike) -> Any:
    return spec.norm(x)


def dual(spec: NormSpec) -> NormSpec:
    return spec.dual()


def pairing(x_star: npt.ArrayLike, x: npt.ArrayLike) -> Any:
    """The bilinear duality bracket <x*, x> = sum_i x*_i x_i (along the last axis)."""
    return np.sum(np.asarray(x_star) * np.asarray(x), axis=-1)


def sample_vectors(
    rng: np.random.Generator, shape: tuple[int, ...], field: ScalarField
) -> npt.NDArray[Any]:
    if field is ScalarField.REAL:
        return rng.standard_normal(shape)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def parallelogram_defect(spec: NormSpec, samples: int = HILBERT_SAMPLES, seed: int = 0) -> float:
    """Largest relative violation of the parallelogram law over a fixed sample."""
    rng = np.random.default_rng(seed)
    x = sample_vectors(rng, (samples, spec.dim), spec.field)
    y = sample_vectors(rng, (samples, spec.dim), spec.field)
    lhs = spec.norm(x + y) ** 2 + spec.norm(x - y) ** 2
    rhs = 2 * spec.norm(x) ** 2 + 2 * spec.norm(y) ** 2
    return float(np.max(np.abs(lhs - rhs) / np.maximum(rhs, 1.0)))


def is_hilbert(spec: NormSpec) -> bool:
    """Exact parallelogram law on a deterministic sample, to 1e-9."""
    return parallelogram_defect(spec) <= HILBERT_TOLERANCE
