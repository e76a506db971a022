"""
Closed balls of Q_p and their Haar measure (normalised by mu(Z_p) = 1).
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidInputError
from .rational import PadicRational, check_same_prime, padic_valuation


@dataclass(frozen=True)
class Ball:
    """B[center, p^radius_exp] = {x : |x - center|_p <= p^radius_exp}.

    B[k/p^N, 1/p^N] has radius_exp = -N; Z_p is B[0, 1].
    """

    p: int
    center: PadicRational
    radius_exp: int

    def __post_init__(self) -> None:
        check_same_prime(self.p, self.center.p)

    @classmethod
    def unit(cls, p: int) -> Ball:
        return cls(p, PadicRational(p, 0), 0)

    def same_ball(self, other: Ball) -> bool:
        """Equality as sets; two balls of one radius are equal or disjoint."""
        check_same_prime(self.p, other.p)
        if self.radius_exp != other.radius_exp:
            return False
        return ball_contains(self, other.center)

    def subballs(self, k: int) -> Iterator[Ball]:
        """The p^k disjoint balls of radius p^(radius_exp - k) tiling this ball."""
        if k < 0:
            raise InvalidInputError(f"subdivision depth must be non-negative, got {k}")
        for j in range(self.p**k):
            offset = PadicRational.of(self.p, j, self.radius_exp)
            yield Ball(self.p, self.center + offset, self.radius_exp - k)


def ball_contains(b: Ball, x: PadicRational) -> bool:
    check_same_prime(b.p, x.p)
    return padic_valuation(x - b.center) >= -b.radius_exp


def ball_measure(b: Ball) -> Fraction:
    return Fraction(b.p) ** b.radius_exp
