"""
Grid sweeps of constant estimates: one table row per (p, N, q, d, direction).
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Sequence

from .config import get_config
from .errors import PadicKwapienError
from .kwapien import estimate_constant
from .norms import LqNorm
from .norms.lq import format_exponent
from .serialize.jsonio import content_hash
from .types import Direction

LOGGER = logging.getLogger(__name__)

SWEEP_FIELDS = (
    "p",
    "N",
    "q",
    "d",
    "direction",
    "certified_constant",
    "value",
    "witness_hash",
    "wall_time",
    "error",
)


@dataclass(frozen=True)
class SweepConfig:
    primes: Sequence[int]
    Ns: Sequence[int]
    qs: Sequence[float]
    dims: Sequence[int]
    directions: Sequence[Direction]
    restarts: int | None
    iterations: int | None
    seed: int = 0
    timing: bool = True

    def points(self) -> list[tuple[int, int, float, int, Direction]]:
        return list(itertools.product(self.primes, self.Ns, self.qs, self.dims, self.directions))


def run_point(config: SweepConfig, point: tuple[int, int, float, int, Direction]) -> dict[str, Any]:
    p, N, q, d, direction = point
    row: dict[str, Any] = {
        "p": p,
        "N": N,
        "q": format_exponent(q),
        "d": d,
        "direction": Direction(direction).value,
        "certified_constant": None,
        "value": None,
        "witness_hash": None,
        "wall_time": 0.0,
        "error": None,
    }
    started = time.perf_counter()
    try:
        estimate = estimate_constant(
            p, N, LqNorm(q, d), direction, config.restarts, config.iterations, config.seed, workers=1
        )
    except PadicKwapienError as exc:
        LOGGER.warning("sweep row %s failed: %s", point, exc)
        row["error"] = f"{type(exc).__name__}: {exc}"
    else:
        row["certified_constant"] = estimate.certified_constant
        row["value"] = estimate.value
        row["witness_hash"] = content_hash(estimate.witness.to_dict())
    if config.timing:
        row["wall_time"] = round(time.perf_counter() - started, 6)
    LOGGER.info("sweep row %s done", point)
    return row


def sweep(config: SweepConfig, workers: int | None = None) -> list[dict[str, Any]]:
    """Rows in grid order, whatever the worker count; failures are recorded per row."""
    points = config.points()
    workers = workers or get_config()["workers"]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda point: run_point(config, point), points))
    return [run_point(config, point) for point in points]
