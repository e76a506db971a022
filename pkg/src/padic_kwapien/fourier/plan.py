"""
Precomputed root tables for DFTs of size p^K.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from ..padic.rational import check_prime
from ..stepfn import check_grid_size
from ..types import ComplexArray

LOGGER = logging.getLogger(__name__)


class TransformDirection(str, Enum):
    FORWARD = "forward"
    INVERSE = "inverse"

    @property
    def sign(self) -> int:
        return 1 if self is TransformDirection.FORWARD else -1


@dataclass(frozen=True, eq=False)
class TransformPlan:
    """roots[j] = e^{sign * 2 pi i j / p^K}; forward carries the positive sign of chi_p."""

    p: int
    size_exp: int
    direction: TransformDirection
    roots: ComplexArray

    @property
    def size(self) -> int:
        return int(self.roots.shape[0])


def root_table(size: int, sign: int) -> ComplexArray:
    j = np.arange(size)
    roots = np.exp(sign * 2j * np.pi * j / size)
    # quarter turns are stored exactly
    quarter = (4 * j) % size == 0
    exact = np.array([1, 1j, -1, -1j], dtype=np.complex128)[(4 * j[quarter]) // size]
    roots[quarter] = exact if sign > 0 else np.conj(exact)
    roots.setflags(write=False)
    return roots


@lru_cache(maxsize=64)
def build_plan(p: int, size_exp: int, direction: TransformDirection) -> TransformPlan:
    check_prime(p)
    direction = TransformDirection(direction)
    size = check_grid_size(p, size_exp)
    LOGGER.debug("building %s plan of size %d^%d", direction.value, p, size_exp)
    return TransformPlan(p, size_exp, direction, root_table(size, direction.sign))
