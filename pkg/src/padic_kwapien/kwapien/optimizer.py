"""
Multi-start estimation of the best two-sided constants of the Kwapien functional.

The ratio Q_N(x) / sum_k ||x_k||^2 is maximised (upper direction) or minimised
(lower direction) over families normalised to sum_k ||x_k||_X^2 = 1. Norms
such as l_1 and l_inf are not smooth, so the search takes steps of length
step / sqrt(iteration) along a central-difference gradient and then rescales
back onto the constraint surface. The best point of each run is then polished:
small entries are zeroed and a backtracking line search accepts only improvements.

Any family certifies a one-sided bound: C >= value for the upper direction and
C >= 1 / value for the lower one. The optimum itself is never certified.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..config import get_config
from ..errors import CapExceededError, DimensionMismatchError, InvalidInputError
from ..norms import NormSpec
from ..norms.base import sample_vectors
from ..padic.rational import check_prime
from ..types import ComplexArray, Direction, RealArray, ScalarField
from .functional import WitnessFamily, batch_ratio, ratio

LOGGER = logging.getLogger(__name__)

CERTIFICATE_LABEL = "certified lower bound on the optimal C"
STRUCTURED_STARTS = ("spike", "all-equal", "alternating", "sparse")
BATCH_ROWS = 256
PRUNE_THRESHOLDS = (1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 1e-4, 1e-6)
MIN_LINE_STEP = 1e-12
SUFFICIENT_INCREASE = 1e-4


@dataclass(frozen=True, eq=False)
class ConstantEstimate:
    direction: Direction
    value: float
    witness: WitnessFamily
    trace: tuple[float, ...]
    iterations: int
    restarts: int
    norm: NormSpec
    seed: int

    @property
    def certified_constant(self) -> float:
        """Lower bound on the best C that the witness proves."""
        if self.direction is Direction.UPPER:
            return self.value
        return 1 / self.value

    def to_dict(self) -> dict[str, Any]:
        return {
            "direction": self.direction.value,
            "p": self.witness.p,
            "N": self.witness.N,
            "norm": self.norm.describe(),
            "value": self.value,
            "certified_constant": self.certified_constant,
            "label": CERTIFICATE_LABEL,
            "restarts": self.restarts,
            "iterations": self.iterations,
            "seed": self.seed,
            "trace": list(self.trace),
            "witness": self.witness.to_dict(),
        }


def restart_generator(seed: int, index: int) -> np.random.Generator:
    """Counter-based stream for one restart, independent of how many restarts run."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))


def structured_start(name: str, p: int, size: int, dim: int) -> ComplexArray:
    x = np.zeros((size, dim), dtype=np.complex128)
    if name == "spike":
        x[0, 0] = 1
    elif name == "all-equal":
        x[:, 0] = 1
    elif name == "alternating":
        x[0] = 1
        x[size // 2 if p == 2 else 1] = (-1) ** np.arange(dim)
    elif name == "sparse":
        for k in range(min(dim, size)):
            x[k, k] = 1
    else:
        raise InvalidInputError(f"unknown structured start {name!r}")
    return x


class _Objective:
    """Ratio as a function of the real parameter vector, batched over rows."""

    def __init__(self, p: int, size: int, norm: NormSpec) -> None:
        self.p = p
        self.size = size
        self.norm = norm
        self.real = norm.field is ScalarField.REAL
        self.n_params = size * norm.dim * (1 if self.real else 2)

    def unpack(self, theta: RealArray) -> ComplexArray:
        flat = theta.reshape(theta.shape[:-1] + (-1,))
        half = self.size * self.norm.dim
        if self.real:
            z = flat.astype(np.complex128)
        else:
            z = flat[..., :half] + 1j * flat[..., half:]
        return z.reshape(z.shape[:-1] + (self.size, self.norm.dim))

    def pack(self, x: ComplexArray) -> RealArray:
        flat = np.asarray(x).reshape(-1)
        if self.real:
            return flat.real.copy()
        return np.concatenate([flat.real, flat.imag])

    def project(self, theta: RealArray) -> RealArray:
        scale = math.sqrt(math.fsum(self.norm.norm(self.unpack(theta)) ** 2))
        return theta / scale

    def __call__(self, thetas: RealArray) -> RealArray:
        out = [
            batch_ratio(self.unpack(thetas[i : i + BATCH_ROWS]), self.p, self.norm)
            for i in range(0, thetas.shape[0], BATCH_ROWS)
        ]
        return np.concatenate(out)


def _central_gradient(
    objective: _Objective, theta: RealArray, h: float, coords: np.ndarray
) -> RealArray:
    """Central differences along ``coords``, perturbing a chunk of coordinates per batch."""
    grad = np.zeros_like(theta)
    chunk = BATCH_ROWS // 2
    for start in range(0, len(coords), chunk):
        block = coords[start : start + chunk]
        m = len(block)
        rows = np.repeat(theta[None], 2 * m, axis=0)
        rows[np.arange(m), block] += h
        rows[m + np.arange(m), block] -= h
        values = objective(rows)
        grad[block] = (values[:m] - values[m:]) / (2 * h)
    return grad


def _prune(
    objective: _Objective, theta: RealArray, value: float, sign: float
) -> tuple[float, RealArray]:
    """Zero the entries below a ladder of relative thresholds; keep the best improvement."""
    x = objective.unpack(theta)
    magnitude = np.abs(x)
    scale = float(magnitude.max())
    candidates = []
    for threshold in PRUNE_THRESHOLDS:
        pruned = np.where(magnitude < threshold * scale, 0, x)
        if np.count_nonzero(pruned) < np.count_nonzero(x):
            candidates.append(objective.pack(pruned))
    if not candidates:
        return value, theta
    values = objective(np.stack(candidates))
    best = int(np.argmax(sign * values))
    if sign * (float(values[best]) - value) > 0:
        return float(values[best]), objective.project(candidates[best])
    return value, theta


def _polish(
    objective: _Objective, theta: RealArray, value: float, sign: float, iterations: int
) -> tuple[float, RealArray]:
    """Improvement-only refinement of a search result.

    Maximisers of non-smooth norms can sit on faces where some entries vanish.
    Pruning moves onto such a face, then a backtracking line search climbs within
    it with the zero entries held fixed.
    """
    config = get_config()
    h = config["gradient_step"]
    initial = config["initial_step_size"]
    rounds = 2
    for _ in range(rounds):
        value, theta = _prune(objective, theta, value, sign)
        active = np.flatnonzero(theta)
        step = initial
        for _ in range(iterations // rounds):
            grad = _central_gradient(objective, theta, h, active)
            length = float(np.linalg.norm(grad))
            if length == 0 or not math.isfinite(length):
                break
            direction = sign * grad / length
            while step >= MIN_LINE_STEP:
                candidate = objective.project(theta + step * direction)
                candidate_value = float(objective(candidate[None])[0])
                gain = sign * (candidate_value - value)
                if gain > 0 and gain >= SUFFICIENT_INCREASE * step * length:
                    theta, value = candidate, candidate_value
                    step = min(2 * step, initial)
                    break
                step /= 2
            else:
                break
    return value, theta


def _search(
    objective: _Objective,
    start: ComplexArray,
    direction: Direction,
    iterations: int,
    polish_iterations: int | None = None,
) -> tuple[float, RealArray]:
    config = get_config()
    h = config["gradient_step"]
    step = config["initial_step_size"]
    if polish_iterations is None:
        polish_iterations = config["polish_iterations"]
    sign = 1.0 if direction is Direction.UPPER else -1.0
    coords = np.arange(objective.n_params)

    theta = objective.project(objective.pack(start))
    best_value, best_theta = math.nan, theta
    for it in range(1, iterations + 1):
        value = float(objective(theta[None])[0])
        if math.isnan(best_value) or sign * (value - best_value) > 0:
            best_value, best_theta = value, theta
        grad = _central_gradient(objective, theta, h, coords)
        length = float(np.linalg.norm(grad))
        if length == 0 or not math.isfinite(length):
            break
        theta = objective.project(theta + sign * step / math.sqrt(it) * grad / length)
    final = float(objective(theta[None])[0])
    if math.isnan(best_value) or sign * (final - best_value) > 0:
        best_value, best_theta = final, theta
    if polish_iterations > 0:
        best_value, best_theta = _polish(
            objective, best_theta, best_value, sign, polish_iterations
        )
    return best_value, best_theta


def estimate_constant(
    p: int,
    N: int,
    norm: NormSpec,
    direction: Direction | str,
    restarts: int | None = None,
    iterations: int | None = None,
    seed: int = 0,
    workers: int | None = None,
) -> ConstantEstimate:
    """Best ratio found over structured starts plus ``restarts`` random starts."""
    check_prime(p)
    direction = Direction(direction)
    config = get_config()
    restarts = config["default_restarts"] if restarts is None else restarts
    iterations = config["default_iterations"] if iterations is None else iterations
    workers = workers or config["workers"]
    if restarts < 0 or iterations < 0 or restarts * iterations == 0:
        raise InvalidInputError(f"budget {restarts} restarts x {iterations} iterations is empty")
    if N < 1:
        raise InvalidInputError(f"N must be a positive integer, got {N}")

    size = p ** (2 * N)
    objective = _Objective(p, size, norm)
    cap = config["max_optimizer_params"]
    if objective.n_params > cap:
        raise CapExceededError(f"{objective.n_params} real parameters exceed the cap {cap}")

    starts = [structured_start(name, p, size, norm.dim) for name in STRUCTURED_STARTS]
    for index in range(restarts):
        starts.append(sample_vectors(restart_generator(seed, index), (size, norm.dim), norm.field))

    def run(start: ComplexArray) -> tuple[float, RealArray]:
        return _search(objective, start, direction, iterations)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, starts))
    else:
        results = [run(start) for start in starts]

    sign = 1.0 if direction is Direction.UPPER else -1.0
    # ties go to the lowest restart index
    best_index = max(range(len(results)), key=lambda i: (sign * results[i][0], -i))
    value, theta = results[best_index]
    witness = WitnessFamily(p, N, objective.unpack(theta))
    LOGGER.info(
        "%s estimate for p=%d N=%d %r: %.12g (start %d of %d)",
        direction.value, p, N, norm, value, best_index, len(results),
    )
    return ConstantEstimate(
        direction=direction,
        value=value,
        witness=witness,
        trace=tuple(r[0] for r in results),
        iterations=iterations,
        restarts=restarts,
        norm=norm,
        seed=seed,
    )


def random_search(
    p: int, N: int, norm: NormSpec, direction: Direction | str, samples: int, seed: int
) -> tuple[float, WitnessFamily]:
    """Best ratio among random families; an optimiser-free cross-check."""
    direction = Direction(direction)
    size = p ** (2 * N)
    rng = np.random.default_rng(seed)
    families = sample_vectors(rng, (samples, size, norm.dim), norm.field)
    values = np.concatenate(
        [batch_ratio(families[i : i + BATCH_ROWS], p, norm) for i in range(0, samples, BATCH_ROWS)]
    )
    index = int(np.argmax(values) if direction is Direction.UPPER else np.argmin(values))
    return float(values[index]), WitnessFamily(p, N, families[index])


def verify_witness(estimate: ConstantEstimate) -> float:
    """Recompute the ratio of the reported witness through the exact path."""
    if estimate.norm.dim != estimate.witness.dim:
        raise DimensionMismatchError("witness and norm dimensions differ")
    return ratio(estimate.witness, estimate.norm)
