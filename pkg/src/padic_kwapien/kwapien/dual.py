"""
One-sided consistency test of the reverse-type inequality between X and X*.

If the lower inequality holds in X with constant C, the upper inequality holds
in X* with the same C. Both sides are estimated here; since each estimate is
only a certified lower bound, a reported violation points at a bug rather than
at a counterexample.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from ..norms import NormSpec
from ..types import Direction
from .optimizer import ConstantEstimate, estimate_constant

LOGGER = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-6


@dataclass(frozen=True, eq=False)
class DualTransferReport:
    norm: NormSpec
    dual_norm: NormSpec
    lower: ConstantEstimate
    upper_dual: ConstantEstimate
    tolerance: float

    @property
    def lower_constant(self) -> float:
        return self.lower.certified_constant

    @property
    def dual_upper_constant(self) -> float:
        return self.upper_dual.certified_constant

    @property
    def violation(self) -> bool:
        return self.dual_upper_constant > self.lower_constant + self.tolerance

    def to_dict(self) -> dict[str, Any]:
        return {
            "norm": self.norm.describe(),
            "dual_norm": self.dual_norm.describe(),
            "lower_constant": self.lower_constant,
            "dual_upper_constant": self.dual_upper_constant,
            "tolerance": self.tolerance,
            "status": "VIOLATION" if self.violation else "OK",
            "lower": self.lower.to_dict(),
            "upper_dual": self.upper_dual.to_dict(),
        }


def dual_transfer_check(
    p: int,
    N: int,
    norm: NormSpec,
    restarts: int | None = None,
    iterations: int | None = None,
    seed: int = 0,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int | None = None,
) -> DualTransferReport:
    dual_norm = norm.dual()
    lower = estimate_constant(p, N, norm, Direction.LOWER, restarts, iterations, seed, workers)
    upper_dual = estimate_constant(
        p, N, dual_norm, Direction.UPPER, restarts, iterations, seed, workers
    )
    report = DualTransferReport(norm, dual_norm, lower, upper_dual, tolerance)
    if report.violation:
        LOGGER.warning(
            "dual transfer violated: C*_up = %.12g > C_low = %.12g",
            report.dual_upper_constant,
            report.lower_constant,
        )
    return report
