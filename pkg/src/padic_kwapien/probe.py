"""
The Monna map, the p-adic Rademacher system and Khinchin-type enumeration.

tau sends t = t_0 + t_1 p + t_2 p^2 + ... in Z_p to (1/p) sum_k t_k p^(-k) in
[0, 1] and carries Haar measure to Lebesgue measure. Composing the classical
Rademacher functions with tau gives fair, independent signs on Z_p.

The classical system is r_i(z) = sgn sin(2^i pi z); on [k/2^i, (k+1)/2^i) it
equals (-1)^k, with the half-open convention fixing the value on dyadic
boundaries.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

import numpy as np
import numpy.typing as npt

from .config import get_config
from .errors import CapExceededError, InvalidInputError, ResolutionError, SupportError
from .norms import NormSpec
from .norms.base import sample_vectors
from .padic import Ball, PadicRational, ball_measure, padic_valuation
from .padic.rational import check_prime
from .types import ComplexArray

LOGGER = logging.getLogger(__name__)

SIGN_CHUNK = 1 << 12


@dataclass(frozen=True)
class PadicDigits:
    """t = sum_k digits[k] p^k, known modulo p^len(digits)."""

    p: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        check_prime(self.p)
        object.__setattr__(self, "digits", tuple(int(t) for t in self.digits))
        if any(not 0 <= t < self.p for t in self.digits):
            raise InvalidInputError(f"digits {self.digits} out of range for p = {self.p}")

    @property
    def precision(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        return sum(t * self.p**k for k, t in enumerate(self.digits))

    @classmethod
    def from_int(cls, p: int, t: int, precision: int) -> PadicDigits:
        t %= p**precision
        digits = []
        for _ in range(precision):
            t, digit = divmod(t, p)
            digits.append(digit)
        return cls(p, tuple(digits))

    @classmethod
    def from_padic(cls, x: PadicRational, precision: int) -> PadicDigits:
        if padic_valuation(x) < 0:
            raise SupportError(f"{x} is not a p-adic integer")
        return cls.from_int(x.p, x.num, precision)

    def to_padic(self) -> PadicRational:
        return PadicRational.of(self.p, self.value)


def monna(t: PadicDigits) -> Fraction:
    """tau(t) = (1/p) sum_k t_k p^(-k), exact, with denominator dividing p^D."""
    return sum(
        (Fraction(digit, t.p ** (k + 1)) for k, digit in enumerate(t.digits)),
        Fraction(0),
    )


def digit_cylinders(p: int, depth: int) -> Iterable[PadicDigits]:
    for digits in itertools.product(range(p), repeat=depth):
        yield PadicDigits(p, digits)


@dataclass(frozen=True)
class MonnaMeasureReport:
    p: int
    pattern: tuple[int, ...]
    precision: int
    padic_measure: Fraction
    lebesgue_measure: Fraction
    interval: tuple[Fraction, Fraction]

    @property
    def agrees(self) -> bool:
        return self.padic_measure == self.lebesgue_measure

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "pattern": list(self.pattern),
            "precision": self.precision,
            "padic_measure": str(self.padic_measure),
            "lebesgue_measure": str(self.lebesgue_measure),
            "interval": [str(self.interval[0]), str(self.interval[1])],
            "agrees": self.agrees,
        }


def monna_measure_check(p: int, precision: int, pattern: Sequence[int]) -> MonnaMeasureReport:
    """Compare the Haar measure of a digit cylinder with the Lebesgue measure of its tau-image.

    The cylinder fixing digits 0..n-1 is split into its p^(D-n) sub-cylinders of
    depth D; each maps onto an interval of length p^(-D) starting at tau of its
    digits, and the union is measured exactly.
    """
    fixed = PadicDigits(p, tuple(pattern))
    n = fixed.precision
    if precision < n:
        raise InvalidInputError(f"precision {precision} is shorter than the pattern ({n} digits)")
    if p ** (precision - n) > get_config()["max_grid_size"]:
        raise CapExceededError(f"{p}^{precision - n} sub-cylinders exceed the grid cap")
    cylinder = Ball(p, fixed.to_padic(), -n)
    cell = Fraction(1, p**precision)
    starts = sorted(
        {monna(PadicDigits(p, fixed.digits + tail.digits)) for tail in digit_cylinders(p, precision - n)}
    )
    contiguous = all(b - a == cell for a, b in zip(starts, starts[1:]))
    if not contiguous:
        raise InvalidInputError("tau-image of the cylinder is not an interval")
    return MonnaMeasureReport(
        p=p,
        pattern=fixed.digits,
        precision=precision,
        padic_measure=ball_measure(cylinder),
        lebesgue_measure=len(starts) * cell,
        interval=(starts[0], starts[-1] + cell),
    )


def classical_rademacher(i: int, z: Fraction) -> int:
    """r_i(z) = (-1)^floor(2^i z); exact for rational z."""
    return 1 if math.floor((1 << i) * z) % 2 == 0 else -1


def rademacher(i: int, t: PadicDigits) -> int:
    """r_i(t) = r_i^classical(tau(t)): +1 iff frac(2^(i-1) tau(t)) lies in [0, 1/2)."""
    if i < 1:
        raise InvalidInputError(f"Rademacher index must be positive, got {i}")
    return classical_rademacher(i, monna(t))


def integrate_sign_product(indices: Iterable[int], lo: Fraction, hi: Fraction) -> Fraction:
    """Exact integral of prod_{i in S} r_i over [lo, hi), by dyadic cells of width 2^-max(S)."""
    indices = sorted(set(indices))
    if not indices:
        return hi - lo
    m = indices[-1]
    width = Fraction(1, 1 << m)
    total = Fraction(0)
    for k in range(math.floor(lo / width), math.ceil(hi / width)):
        overlap = min(hi, (k + 1) * width) - max(lo, k * width)
        if overlap <= 0:
            continue
        sign = (-1) ** sum((k >> (m - i)) & 1 for i in indices)
        total += sign * overlap
    return total


def rademacher_independence_check(indices: Iterable[int], p: int, precision: int) -> Fraction:
    """Exact value of the integral over [0, 1] of prod_{i in S} r_i; zero for nonempty S."""
    indices = sorted(set(indices))
    if indices and indices[0] < 1:
        raise InvalidInputError(f"Rademacher indices must be positive, got {indices}")
    if indices and 2 ** indices[-1] > p**precision:
        raise ResolutionError(f"2^{indices[-1]} exceeds the resolution {p}^{precision}")
    return integrate_sign_product(indices, Fraction(0), Fraction(1))


def rademacher_fairness_sum(i: int, p: int, precision: int) -> int:
    """Sum of r_i over all p^D digit vectors with equal weight.

    The grid tau(t) = j / p^D is aligned with the sign changes of r_i only when
    2^i divides p^D; other resolutions are rejected.
    """
    if (p**precision) % (1 << i) != 0:
        raise ResolutionError(f"grid {p}^{precision} does not resolve r_{i}")
    if p**precision > get_config()["max_grid_size"]:
        raise CapExceededError(f"{p}^{precision} digit vectors exceed the grid cap")
    return sum(rademacher(i, t) for t in digit_cylinders(p, precision))


def rademacher_haar_mean(i: int, p: int, precision: int) -> Fraction:
    """Integral of r_i over Z_p, summed over the tau-images of the depth-D cylinders."""
    if p**precision > get_config()["max_grid_size"]:
        raise CapExceededError(f"{p}^{precision} cylinders exceed the grid cap")
    cell = Fraction(1, p**precision)
    total = Fraction(0)
    for t in digit_cylinders(p, precision):
        start = monna(t)
        total += integrate_sign_product([i], start, start + cell)
    return total


@dataclass(frozen=True)
class KhinchinReport:
    n: int
    expectation: float
    sum_sq: float
    lower_ratio: float
    upper_ratio: float

    @property
    def ratio(self) -> float:
        return self.expectation / self.sum_sq

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "expectation": self.expectation,
            "sum_sq": self.sum_sq,
            "ratio": self.ratio,
            "lower_ratio": self.lower_ratio,
            "upper_ratio": self.upper_ratio,
        }


def _prepare_vectors(vectors: npt.ArrayLike, norm: NormSpec) -> ComplexArray:
    xs = np.asarray(vectors, dtype=np.complex128)
    if xs.ndim == 1:
        xs = xs[:, None]
    if xs.shape[0] == 0:
        raise InvalidInputError("at least one vector is required")
    cap = get_config()["khinchin_max_vectors"]
    if xs.shape[0] > cap:
        raise CapExceededError(f"{xs.shape[0]} vectors exceed the enumeration cap {cap}")
    norm.norm(xs[0])
    return xs


def sign_patterns(n: int, start: int, stop: int, leading_plus: bool = True) -> npt.NDArray[Any]:
    """Rows of +-1 for the pattern codes start..stop-1; bit j of the code flips sign j."""
    codes = np.arange(start, stop)[:, None]
    width = n - 1 if leading_plus else n
    signs = 1 - 2 * ((codes >> np.arange(width)) & 1)
    if leading_plus:
        signs = np.hstack([np.ones((signs.shape[0], 1), dtype=signs.dtype), signs])
    return signs


def _chunk_stats(args: tuple[ComplexArray, NormSpec, int, int]) -> tuple[float, float, float]:
    xs, norm, start, stop = args
    squares = norm.norm(sign_patterns(xs.shape[0], start, stop) @ xs) ** 2
    return math.fsum(squares), float(np.min(squares)), float(np.max(squares))


def khinchin_expectation(
    vectors: npt.ArrayLike, norm: NormSpec, workers: int | None = None
) -> KhinchinReport:
    """E ||sum_i eps_i x_i||^2 averaged over every sign pattern.

    Patterns eps and -eps give the same norm, so only those with eps_1 = +1 are
    enumerated. Chunks are reduced in order, whatever the worker count.
    """
    xs = _prepare_vectors(vectors, norm)
    n = xs.shape[0]
    total_patterns = 1 << (n - 1)
    bounds = [
        (xs, norm, start, min(start + SIGN_CHUNK, total_patterns))
        for start in range(0, total_patterns, SIGN_CHUNK)
    ]
    workers = workers or get_config()["workers"]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            stats = list(pool.map(_chunk_stats, bounds))
    else:
        stats = [_chunk_stats(b) for b in bounds]
    sum_sq = math.fsum(norm.norm(xs) ** 2)
    if sum_sq == 0:
        raise InvalidInputError("all vectors are zero")
    expectation = math.fsum(s[0] for s in stats) / total_patterns
    LOGGER.debug("enumerated %d sign patterns for %d vectors", total_patterns, n)
    return KhinchinReport(
        n=n,
        expectation=expectation,
        sum_sq=sum_sq,
        lower_ratio=min(s[1] for s in stats) / sum_sq,
        upper_ratio=max(s[2] for s in stats) / sum_sq,
    )


def rademacher_expectation(vectors: npt.ArrayLike, norm: NormSpec) -> float:
    """Integral over [0, 1] of ||sum_i r_i(z) x_i||^2, cell by dyadic cell of width 2^-n."""
    xs = _prepare_vectors(vectors, norm)
    n = xs.shape[0]
    cells = 1 << n
    totals = []
    for start in range(0, cells, SIGN_CHUNK):
        k = np.arange(start, min(start + SIGN_CHUNK, cells))[:, None]
        # r_i is (-1)^(bit n-i of k) on cell k
        signs = 1 - 2 * ((k >> (n - np.arange(1, n + 1))) & 1)
        totals.append(math.fsum(norm.norm(signs @ xs) ** 2))
    return math.fsum(totals) / cells


def khinchin_deviation(
    norm: NormSpec, n: int, trials: int, seed: int
) -> tuple[float, ComplexArray]:
    """Largest max(ratio, 1/ratio) - 1 over random families of n vectors, with its witness."""
    rng = np.random.default_rng(seed)
    best, witness = 0.0, np.zeros((n, norm.dim), dtype=np.complex128)
    for _ in range(trials):
        xs = sample_vectors(rng, (n, norm.dim), norm.field)
        ratio = khinchin_expectation(xs, norm, workers=1).ratio
        deviation = max(ratio, 1 / ratio) - 1
        if deviation > best:
            best, witness = deviation, xs
    return best, witness
