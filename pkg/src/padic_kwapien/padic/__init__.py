"""
Exact p-adic arithmetic: Z[1/p], fractional parts, the character chi_p, balls.
"""

from .ball import Ball, ball_contains, ball_measure
from .phase import UnitPhase, character, padic_frac, phase_to_complex
from .rational import PadicRational, check_prime, is_prime, padic_abs, padic_valuation

__all__ = [
    "Ball",
    "PadicRational",
    "UnitPhase",
    "ball_contains",
    "ball_measure",
    "character",
    "check_prime",
    "is_prime",
    "padic_abs",
    "padic_frac",
    "padic_valuation",
    "phase_to_complex",
]
