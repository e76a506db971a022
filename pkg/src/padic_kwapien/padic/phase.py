"""
Exact character phases.

A character value e^{2 pi i q} is carried as the rational phase q = num / p^exp
in [0, 1); conversion to a floating complex number happens only at the numeric
boundary (:func:`phase_to_complex`).
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidInputError
from .rational import PadicRational, check_prime, check_same_prime

_SERIAL_RE = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*\^\s*(\d+)\s*$")

# phase * 4 -> exact value
_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(frozen=True)
class UnitPhase:
    """The phase num / p**exp in [0, 1), reduced."""

    p: int
    num: int = 0
    exp: int = 0

    def __post_init__(self) -> None:
        check_prime(self.p)
        if self.exp < 0 or not 0 <= self.num < self.p**self.exp:
            raise InvalidInputError(f"phase {self.num}/{self.p}^{self.exp} outside [0, 1)")
        if self.num == 0 and self.exp != 0:
            raise InvalidInputError("zero phase must be stored as 0/p^0")
        if self.exp > 0 and self.num % self.p == 0:
            raise InvalidInputError(f"phase {self.num}/{self.p}^{self.exp} is not reduced")

    @classmethod
    def of(cls, p: int, num: int, exp: int) -> UnitPhase:
        """Reduce num / p**exp modulo 1."""
        num %= p**exp
        if num == 0:
            return cls(p, 0, 0)
        while exp > 0 and num % p == 0:
            num //= p
            exp -= 1
        return cls(p, num, exp)

    @classmethod
    def parse(cls, text: str) -> UnitPhase:
        match = _SERIAL_RE.match(text)
        if match is None:
            raise InvalidInputError(f"expected 'num/p^exp', got {text!r}")
        num, p, exp = (int(g) for g in match.groups())
        return cls.of(p, num, exp)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.p**self.exp)

    def __str__(self) -> str:
        return f"{self.num}/{self.p}^{self.exp}"

    def __add__(self, other: UnitPhase) -> UnitPhase:
        check_same_prime(self.p, other.p)
        m = max(self.exp, other.exp)
        num = self.num * self.p ** (m - self.exp) + other.num * self.p ** (m - other.exp)
        return UnitPhase.of(self.p, num, m)

    def __neg__(self) -> UnitPhase:
        return UnitPhase.of(self.p, -self.num, self.exp)

    def __sub__(self, other: UnitPhase) -> UnitPhase:
        return self + (-other)


def padic_frac(x: PadicRational) -> UnitPhase:
    """The p-adic fractional part {x}_p."""
    if x.exp == 0:
        return UnitPhase(x.p)
    return UnitPhase.of(x.p, x.num, x.exp)


def character(x: PadicRational) -> UnitPhase:
    """Phase of the additive character chi_p(x) = e^{2 pi i {x}_p}."""
    return padic_frac(x)


def phase_to_complex(q: UnitPhase) -> complex:
    """e^{2 pi i q}; exact on quarter turns."""
    den = q.p**q.exp
    if (4 * q.num) % den == 0:
        return _QUARTER_TURNS[4 * q.num // den]
    return cmath.exp(2j * math.pi * q.num / den)
