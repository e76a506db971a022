"""
The Kwapien functional

    Q_N(x) = integral over Z_p of || sum_k chi_p(k t / p^(2N)) x_k ||^2 dt

for a family x_0 .. x_{p^(2N)-1}. The integrand is constant on the cosets of
p^(2N) Z_p, so the integral is an exact finite average of DFT outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from ..errors import DimensionMismatchError, InvalidInputError, ZeroFamilyError
from ..fourier import dft, fourier, fourier_compact
from ..norms import NormSpec
from ..padic.rational import check_prime
from ..stepfn import bochner_norm_sq, character_function, check_grid_size, lemma_test_function
from ..types import ComplexArray, RealArray


@dataclass(frozen=True, eq=False)
class WitnessFamily:
    p: int
    N: int
    vectors: ComplexArray

    def __post_init__(self) -> None:
        check_prime(self.p)
        if self.N < 1:
            raise InvalidInputError(f"N must be a positive integer, got {self.N}")
        size = check_grid_size(self.p, 2 * self.N)
        vectors = np.array(self.vectors, dtype=np.complex128)
        if vectors.ndim == 1:
            vectors = vectors[:, None]
        if vectors.ndim != 2 or vectors.shape[0] != size:
            raise InvalidInputError(
                f"expected {size} vectors for p = {self.p}, N = {self.N}, got shape {vectors.shape}"
            )
        vectors.setflags(write=False)
        object.__setattr__(self, "vectors", vectors)

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    @property
    def size(self) -> int:
        return int(self.vectors.shape[0])

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "N": self.N,
            "dim": self.dim,
            "vectors": [[[z.real, z.imag] for z in row] for row in self.vectors.tolist()],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> WitnessFamily:
        try:
            raw = np.asarray(data["vectors"], dtype=np.float64)
            p, N = int(data["p"]), int(data["N"])
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed witness JSON: {exc}") from exc
        if raw.ndim != 3 or raw.shape[-1] != 2:
            raise InvalidInputError(f"witness vectors must be [re, im] pairs, got shape {raw.shape}")
        return cls(p, N, raw[..., 0] + 1j * raw[..., 1])


def _check_dim(w: WitnessFamily, norm: NormSpec) -> None:
    if norm.dim != w.dim:
        raise DimensionMismatchError(f"norm of dimension {norm.dim} for {w.dim}-vectors")


def q_functional(w: WitnessFamily, norm: NormSpec) -> float:
    """p^(-2N) sum_t || sum_k omega^(k t) x_k ||^2, via F_{Q_p/Z_p}."""
    _check_dim(w, norm)
    return bochner_norm_sq(fourier_compact(w.vectors, w.p), norm)


def q_functional_via_fourier(w: WitnessFamily, norm: NormSpec) -> float:
    """||F h||^2 for the step function h built from the family on balls B[k/p^N, p^-N]."""
    _check_dim(w, norm)
    return bochner_norm_sq(fourier(lemma_test_function(w.p, w.N, w.vectors)), norm)


def family_norm_sq(w: WitnessFamily, norm: NormSpec) -> float:
    _check_dim(w, norm)
    return math.fsum(norm.norm(w.vectors) ** 2)


def ratio(w: WitnessFamily, norm: NormSpec) -> float:
    denominator = family_norm_sq(w, norm)
    if denominator == 0:
        raise ZeroFamilyError("ratio is undefined for the zero family")
    return q_functional(w, norm) / denominator


def batch_ratio(families: npt.ArrayLike, p: int, norm: NormSpec) -> RealArray:
    """ratio for every family in a (batch, p^(2N), d) array; zero families give nan."""
    xs = np.asarray(families, dtype=np.complex128)
    sums = dft(xs, p)
    numerator = np.mean(norm.norm(sums) ** 2, axis=1)
    denominator = np.sum(norm.norm(xs) ** 2, axis=1)
    with np.errstate(invalid="ignore", divide="ignore"):
        return numerator / denominator


def orthonormality_defect(p: int, N: int) -> float:
    """max |G - I| for the Gram matrix of the characters chi_p(k t / p^(2N)) on Z_p."""
    size = p ** (2 * N)
    chars = np.stack([character_function(p, 2 * N, k).values[:, 0] for k in range(size)], axis=1)
    gram = chars.conj().T @ chars / size
    return float(np.max(np.abs(gram - np.eye(size))))
