"""
Locally constant, compactly supported functions on Q_p with values in C^d.

A :class:`StepFunction` with support exponent M and level exponent L is
supported in B[0, p^M] = p^(-M) Z_p and constant on the cosets of p^L Z_p.
Its ``values[n]`` is the value at the representative n * p^(-M),
n = 0 .. p^(M+L) - 1, so the Fourier transform is a plain DFT in index space.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

import numpy as np
import numpy.typing as npt

from .config import get_config
from .errors import (
    CapExceededError,
    DimensionMismatchError,
    InvalidInputError,
    RefinementError,
)
from .norms import NormSpec
from .padic import Ball, PadicRational, padic_valuation
from .padic.rational import check_prime, check_same_prime
from .types import ComplexArray

LOGGER = logging.getLogger(__name__)


def check_grid_size(p: int, size_exp: int) -> int:
    size = p**size_exp
    cap = get_config()["max_grid_size"]
    if size > cap:
        raise CapExceededError(f"grid of {p}^{size_exp} = {size} cosets exceeds the cap {cap}")
    return size


@dataclass(frozen=True, eq=False)
class StepFunction:
    p: int
    support_exp: int
    level_exp: int
    values: ComplexArray

    def __post_init__(self) -> None:
        check_prime(self.p)
        size_exp = self.support_exp + self.level_exp
        if size_exp < 0:
            raise InvalidInputError(
                f"support_exp + level_exp must be >= 0, got {self.support_exp} + {self.level_exp}"
            )
        size = check_grid_size(self.p, size_exp)
        values = np.array(self.values, dtype=np.complex128)
        if values.ndim != 2 or values.shape[0] != size or values.shape[1] < 1:
            raise InvalidInputError(f"values must have shape ({size}, d), got {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def dim(self) -> int:
        return int(self.values.shape[1])

    @property
    def size_exp(self) -> int:
        return self.support_exp + self.level_exp

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    def __add__(self, other: StepFunction) -> StepFunction:
        return add(self, other)

    def __mul__(self, c: complex) -> StepFunction:
        return scale(self, c)

    __rmul__ = __mul__


def zero(p: int, dim: int) -> StepFunction:
    return StepFunction(p, 0, 0, np.zeros((1, dim)))


def coset_index(f: StepFunction, x: PadicRational) -> int | None:
    """Index of the coset containing x, or None when x lies outside the support."""
    check_same_prime(f.p, x.p)
    if padic_valuation(x) < -f.support_exp:
        return None
    y = x.to_fraction() * Fraction(f.p) ** f.support_exp
    return int(y) % f.size


def evaluate(f: StepFunction, x: PadicRational) -> ComplexArray:
    n = coset_index(f, x)
    if n is None:
        return np.zeros(f.dim, dtype=np.complex128)
    return f.values[n]


def representative(f: StepFunction, n: int) -> PadicRational:
    return PadicRational.of(f.p, n, f.support_exp)


def make_ball_indicator(b: Ball, coefficient: npt.ArrayLike) -> StepFunction:
    """coefficient * I_b with the smallest admissible (support_exp, level_exp)."""
    coeff = np.atleast_1d(np.asarray(coefficient, dtype=np.complex128))
    level_exp = -b.radius_exp
    center_val = padic_valuation(b.center)
    support_exp = b.radius_exp if center_val >= -b.radius_exp else int(-center_val)
    size = check_grid_size(b.p, support_exp + level_exp)
    values = np.zeros((size, coeff.shape[0]), dtype=np.complex128)
    f = StepFunction(b.p, support_exp, level_exp, values)
    index = coset_index(f, b.center)
    values[index] = coeff
    return StepFunction(b.p, support_exp, level_exp, values)


def refine(f: StepFunction, new_M: int, new_L: int) -> StepFunction:
    """Re-express f on the finer grid (new_M, new_L); pointwise unchanged."""
    if new_M < f.support_exp or new_L < f.level_exp:
        raise RefinementError(
            f"cannot refine ({f.support_exp}, {f.level_exp}) to ({new_M}, {new_L})"
        )
    if (new_M, new_L) == (f.support_exp, f.level_exp):
        return f
    new_size = check_grid_size(f.p, new_M + new_L)
    step = f.p ** (new_M - f.support_exp)
    n = np.arange(new_size)
    inside = n % step == 0
    values = np.zeros((new_size, f.dim), dtype=np.complex128)
    values[inside] = f.values[(n[inside] // step) % f.size]
    LOGGER.debug("refined %d cosets to %d", f.size, new_size)
    return StepFunction(f.p, new_M, new_L, values)


def common_refinement(f: StepFunction, g: StepFunction) -> tuple[StepFunction, StepFunction]:
    check_same_prime(f.p, g.p)
    if f.dim != g.dim:
        raise DimensionMismatchError(f"dimensions {f.dim} and {g.dim} differ")
    M = max(f.support_exp, g.support_exp)
    L = max(f.level_exp, g.level_exp)
    return refine(f, M, L), refine(g, M, L)


def add(f: StepFunction, g: StepFunction) -> StepFunction:
    f, g = common_refinement(f, g)
    return StepFunction(f.p, f.support_exp, f.level_exp, f.values + g.values)


def scale(f: StepFunction, c: complex) -> StepFunction:
    return StepFunction(f.p, f.support_exp, f.level_exp, c * f.values)


def reflect(f: StepFunction) -> StepFunction:
    """The isometry x(t) -> x(-t)."""
    index = (-np.arange(f.size)) % f.size
    return StepFunction(f.p, f.support_exp, f.level_exp, f.values[index])


def cell_measure(f: StepFunction) -> Fraction:
    """Haar measure p^(-L) of one constancy coset."""
    return Fraction(f.p) ** (-f.level_exp)


def bochner_norm_sq(f: StepFunction, norm: NormSpec) -> float:
    """||f||^2 in L_2(Q_p, X) = p^(-L) * sum_n ||values[n]||_X^2."""
    if norm.dim != f.dim:
        raise DimensionMismatchError(f"norm of dimension {norm.dim} for {f.dim}-valued function")
    total = float(np.sum(norm.norm(f.values) ** 2))
    return float(cell_measure(f) * Fraction(total))


def inner_product(f: StepFunction, g: StepFunction, coordinatewise: bool = False) -> Any:
    """Integral of f * conj(g), summed over coordinates unless ``coordinatewise``."""
    f, g = common_refinement(f, g)
    measure = float(cell_measure(f))
    per_coordinate = measure * np.sum(f.values * np.conj(g.values), axis=0)
    if coordinatewise:
        return per_coordinate
    return complex(np.sum(per_coordinate))


def character_function(p: int, level: int, frequency: int, dim: int = 1) -> StepFunction:
    """t -> chi_p(frequency * t / p^level) on Z_p, zero outside."""
    size = check_grid_size(p, level)
    n = np.arange(size)
    column = np.exp(2j * np.pi * ((frequency * n) % size) / size)
    return StepFunction(p, 0, level, np.repeat(column[:, None], dim, axis=1))


def lemma_test_function(p: int, N: int, vectors: Sequence[Any] | ComplexArray) -> StepFunction:
    """h = sum_k p^(N/2) I_{B[k/p^N, p^-N]} x_k for k < p^(2N), built ball by ball."""
    xs = np.asarray(vectors, dtype=np.complex128)
    if xs.ndim == 1:
        xs = xs[:, None]
    if xs.shape[0] != p ** (2 * N):
        raise InvalidInputError(f"expected {p ** (2 * N)} vectors, got {xs.shape[0]}")
    # every summand lives on the (N, N) grid, so sum there directly
    h = StepFunction(p, N, N, np.zeros_like(xs))
    for k, x in enumerate(xs):
        ball = Ball(p, PadicRational.of(p, k, N), -N)
        h = add(h, make_ball_indicator(ball, p ** (N / 2) * x))
    return h


def to_dict(f: StepFunction) -> dict[str, Any]:
    return {
        "p": f.p,
        "support_exp": f.support_exp,
        "level_exp": f.level_exp,
        "dim": f.dim,
        "values": [[[z.real, z.imag] for z in row] for row in f.values.tolist()],
    }


def from_dict(data: dict[str, Any]) -> StepFunction:
    try:
        raw = np.asarray(data["values"], dtype=np.float64)
        values = raw[..., 0] + 1j * raw[..., 1]
        p, support_exp, level_exp, dim = (
            int(data[k]) for k in ("p", "support_exp", "level_exp", "dim")
        )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed step function JSON: {exc!r}") from exc
    f = StepFunction(p, support_exp, level_exp, values)
    if f.dim != dim:
        raise InvalidInputError(f"dim field {dim} disagrees with values width {f.dim}")
    return f
