"""
The Fourier transform on step functions and its restrictions to Z_p and Q_p/Z_p.

With the self-dual Haar measure, F maps a step function with exponents (M, L)
to one with exponents (L, M):

    (F f)[m] = p^(-L) * sum_n e^{2 pi i m n / p^(M+L)} f[n].

No re-centering is ever performed; the bookkeeping follows from the coset
representatives fixed in :mod:`padic_kwapien.stepfn`.
"""

from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np
import numpy.typing as npt

from ..config import get_config
from ..errors import InternalAssertionError, InvalidInputError, SupportError
from ..stepfn import StepFunction, check_grid_size, common_refinement, refine, reflect
from ..types import ComplexArray
from .backends import BACKENDS, DFTBackend
from .plan import TransformDirection, build_plan

LOGGER = logging.getLogger(__name__)

INVERSE_CHECK_TOLERANCE = 1e-12


def select_backend(size: int, backend: str | None = None) -> DFTBackend:
    config = get_config()
    name = backend or config["dft_backend"]
    if name == "auto":
        name = "naive" if size <= config["fast_dft_threshold"] else "radix"
    if name not in BACKENDS:
        raise InvalidInputError(f"unknown DFT backend {name!r}; expected one of {sorted(BACKENDS)}")
    return BACKENDS[name]()


def dft(
    values: npt.ArrayLike,
    p: int,
    direction: TransformDirection = TransformDirection.FORWARD,
    backend: str | None = None,
) -> ComplexArray:
    """Unscaled DFT of size p^K along axis -2 of a (P, d) or (batch, P, d) array."""
    arr = np.asarray(values, dtype=np.complex128)
    squeeze = arr.ndim == 2
    if squeeze:
        arr = arr[None]
    size = arr.shape[1]
    size_exp = 0
    while p**size_exp < size:
        size_exp += 1
    if p**size_exp != size:
        raise InvalidInputError(f"transform length {size} is not a power of {p}")
    plan = build_plan(p, size_exp, TransformDirection(direction))
    engine = select_backend(size, backend)
    LOGGER.debug("%s DFT of size %d with %s backend", plan.direction.value, size, engine.name)
    out = engine.apply(plan, arr)
    return out[0] if squeeze else out


def _transform(f: StepFunction, direction: TransformDirection, backend: str | None) -> StepFunction:
    scale = float(Fraction(f.p) ** (-f.level_exp))
    values = scale * dft(f.values, f.p, direction, backend)
    return StepFunction(f.p, f.level_exp, f.support_exp, values)


def fourier(f: StepFunction, backend: str | None = None) -> StepFunction:
    """(F f)(s) = integral of f(t) chi_p(s t) dt."""
    return _transform(f, TransformDirection.FORWARD, backend)


def fourier_cubed(f: StepFunction, backend: str | None = None) -> StepFunction:
    return fourier(fourier(fourier(f, backend), backend), backend)


def fourier_inverse(f: StepFunction, backend: str | None = None, verify: bool = False) -> StepFunction:
    """F^-1 = F^3, computed as one DFT with the negated exponent.

    With ``verify`` the result is compared against three forward transforms.
    """
    result = _transform(f, TransformDirection.INVERSE, backend)
    if verify:
        cubed = fourier_cubed(f, backend)
        deviation = float(np.max(np.abs(cubed.values - result.values), initial=0.0))
        if deviation > INVERSE_CHECK_TOLERANCE:
            raise InternalAssertionError(f"F^-1 and F^3 differ by {deviation:.3e}")
    return result


def _quotient_values(values: npt.ArrayLike, p: int) -> tuple[ComplexArray, int]:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.ndim == 1:
        arr = arr[:, None]
    N = 0
    while p**N < arr.shape[0]:
        N += 1
    if p**N != arr.shape[0]:
        raise InvalidInputError(f"{arr.shape[0]} quotient values is not a power of {p}")
    check_grid_size(p, N)
    return arr, N


def fourier_compact(values_on_quotient: npt.ArrayLike, p: int, backend: str | None = None) -> StepFunction:
    """F_{Q_p/Z_p}: x_k on the cosets k/p^N + Z_p  ->  t -> sum_k chi_p(k t / p^N) x_k on Z_p.

    The quotient carries counting measure, so no scale factor appears.
    """
    arr, N = _quotient_values(values_on_quotient, p)
    return StepFunction(p, 0, N, dft(arr, p, TransformDirection.FORWARD, backend))


def fourier_restricted_zp(f: StepFunction, backend: str | None = None) -> ComplexArray:
    """F_{Z_p}: a function supported in Z_p -> its values on the cosets k/p^L + Z_p."""
    if f.support_exp > 0:
        raise SupportError(f"support B[0, {f.p}^{f.support_exp}] is not inside Z_p")
    return fourier(refine(f, 0, f.level_exp), backend).values


def fourier_compact_inverse(f: StepFunction, backend: str | None = None) -> ComplexArray:
    """F_{Q_p/Z_p}^-1 = F_{Z_p} composed with the reflection t -> -t."""
    return fourier_restricted_zp(reflect(f), backend)


def fourier_restricted_zp_inverse(
    values_on_quotient: npt.ArrayLike, p: int, backend: str | None = None
) -> StepFunction:
    """F_{Z_p}^-1 = I_{Z_p} F_{Q_p/Z_p}, with I_{Z_p} the reflection x(t) -> x(-t)."""
    return reflect(fourier_compact(values_on_quotient, p, backend))


def max_deviation(f: StepFunction, g: StepFunction) -> float:
    """Sup-distance of two step functions on a common grid."""
    f, g = common_refinement(f, g)
    return float(np.max(np.abs(f.values - g.values), initial=0.0))
