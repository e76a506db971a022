"""
Exact elements a/p^m of the ring Z[1/p].
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import InvalidInputError, PrimeMismatchError

_SERIAL_RE = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*\^\s*(\d+)\s*$")


@lru_cache(maxsize=256)
def is_prime(p: int) -> bool:
    """Trial division; primes in this library are small."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise InvalidInputError(f"p must be a prime integer, got {p!r}")
    return p


def int_valuation(n: int, p: int) -> int:
    """Exponent of p in the nonzero integer n."""
    if n == 0:
        raise InvalidInputError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def check_same_prime(*primes: int) -> int:
    first = primes[0]
    for other in primes[1:]:
        if other != first:
            raise PrimeMismatchError(f"mixed primes {first} and {other}")
    return first


@dataclass(frozen=True)
class PadicRational:
    """The value num / p**exp with exp >= 0, kept in reduced form.

    Canonical form: num == 0 implies exp == 0, and exp > 0 implies p does not
    divide num. Construct through :meth:`of` to reduce arbitrary inputs.
    """

    p: int
    num: int
    exp: int = 0

    def __post_init__(self) -> None:
        check_prime(self.p)
        if self.exp < 0:
            raise InvalidInputError(f"exponent must be non-negative, got {self.exp}")
        if self.num == 0 and self.exp != 0:
            raise InvalidInputError("zero must be stored as 0/p^0")
        if self.exp > 0 and self.num % self.p == 0:
            raise InvalidInputError(f"{self.num}/{self.p}^{self.exp} is not reduced")

    @classmethod
    def of(cls, p: int, num: int, exp: int = 0) -> PadicRational:
        """Build num / p**exp, reducing to canonical form. Negative exp multiplies."""
        check_prime(p)
        if exp < 0:
            return cls(p, num * p ** (-exp), 0)
        if num == 0:
            return cls(p, 0, 0)
        while exp > 0 and num % p == 0:
            num //= p
            exp -= 1
        return cls(p, num, exp)

    @classmethod
    def from_fraction(cls, p: int, value: Fraction | int) -> PadicRational:
        value = Fraction(value)
        den = value.denominator
        m = 0
        while den % p == 0:
            den //= p
            m += 1
        if den != 1:
            raise InvalidInputError(f"{value} has a denominator that is not a power of {p}")
        return cls.of(p, value.numerator, m)

    @classmethod
    def parse(cls, text: str) -> PadicRational:
        """Parse the "a/p^m" serialization."""
        match = _SERIAL_RE.match(text)
        if match is None:
            raise InvalidInputError(f"expected 'a/p^m', got {text!r}")
        num, p, exp = (int(g) for g in match.groups())
        return cls.of(p, num, exp)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.p**self.exp)

    def __str__(self) -> str:
        return f"{self.num}/{self.p}^{self.exp}"

    def _coerce(self, other: PadicRational | int) -> PadicRational:
        if isinstance(other, int):
            return PadicRational.of(self.p, other)
        check_same_prime(self.p, other.p)
        return other

    def __add__(self, other: PadicRational | int) -> PadicRational:
        other = self._coerce(other)
        m = max(self.exp, other.exp)
        num = self.num * self.p ** (m - self.exp) + other.num * self.p ** (m - other.exp)
        return PadicRational.of(self.p, num, m)

    __radd__ = __add__

    def __neg__(self) -> PadicRational:
        return PadicRational(self.p, -self.num, self.exp)

    def __sub__(self, other: PadicRational | int) -> PadicRational:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> PadicRational:
        return self._coerce(other) - self

    def __mul__(self, other: PadicRational | int) -> PadicRational:
        other = self._coerce(other)
        return PadicRational.of(self.p, self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def scale_by_power(self, k: int) -> PadicRational:
        """Multiply by p**k (k may be negative)."""
        return PadicRational.of(self.p, self.num, self.exp - k)


def padic_valuation(x: PadicRational) -> float | int:
    """v with x = p^v * u, p not dividing u; +inf for zero."""
    if x.num == 0:
        return math.inf
    if x.exp > 0:
        return -x.exp
    return int_valuation(x.num, x.p)


def padic_abs(x: PadicRational) -> Fraction:
    """|x|_p = p^(-v) as an exact rational."""
    v = padic_valuation(x)
    if v == math.inf:
        return Fraction(0)
    return Fraction(x.p) ** int(-v)
