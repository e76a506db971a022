"""
Fourier transforms on Q_p, Z_p and Q_p/Z_p for vector-valued step functions.
"""

from .plan import TransformDirection, TransformPlan, build_plan
from .transform import (
    dft,
    fourier,
    fourier_compact,
    fourier_compact_inverse,
    fourier_cubed,
    fourier_inverse,
    fourier_restricted_zp,
    fourier_restricted_zp_inverse,
    max_deviation,
    select_backend,
)

__all__ = [
    "TransformDirection",
    "TransformPlan",
    "build_plan",
    "dft",
    "fourier",
    "fourier_compact",
    "fourier_compact_inverse",
    "fourier_cubed",
    "fourier_inverse",
    "fourier_restricted_zp",
    "fourier_restricted_zp_inverse",
    "max_deviation",
    "select_backend",
]
