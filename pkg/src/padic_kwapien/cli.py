"""
CLI for padic-kwapien.

Every subcommand builds an :class:`ExperimentConfig` and hands it to :func:`run`,
which calls the library, writes JSON (or a CSV projection) and returns the exit
status: 0 success, 1 dual-check VIOLATION, 2 invalid input, 3 cap exceeded,
4 internal assertion. Click usage errors are reported the same way with status 2.
"""

from __future__ import annotations

import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

import click
import numpy as np

from .config import get_config, set_config_path
from .errors import InternalAssertionError, InvalidInputError, PadicKwapienError
from .fourier import fourier, fourier_inverse
from .kwapien import WitnessFamily, dual_transfer_check, estimate_constant, q_functional, ratio
from .kwapien.functional import family_norm_sq
from .norms import EuclideanNorm, NormSpec, build_norm, norm_from_dict
from .norms.parse import parse_exponent
from .probe import (
    PadicDigits,
    khinchin_expectation,
    monna,
    monna_measure_check,
    rademacher_expectation,
)
from .serialize import csvio, jsonio
from .stepfn import StepFunction, bochner_norm_sq, from_dict, to_dict
from .sweep import SWEEP_FIELDS, SweepConfig, sweep
from .types import Direction

LOGGER = logging.getLogger(__name__)

PARSEVAL_TOLERANCE = 1e-12
EXIT_VIOLATION = 1


@dataclass
class ExperimentConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    output_format: str = "json"
    output: Path | None = None


def _norm_from_params(params: dict[str, Any]) -> NormSpec:
    return build_norm(
        params["norm"], params["dim"], params["q"], params.get("weights"), params["field"]
    )


def _parse_int_list(text: str, option: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InvalidInputError(f"{option} must be comma-separated integers, got {text!r}") from exc


def _require_keys(data: Any, keys: tuple[str, ...], what: str) -> dict[str, Any]:
    if not isinstance(data, dict):
        raise InvalidInputError(f"{what} must be a JSON object, got {type(data).__name__}")
    missing = [k for k in keys if k not in data]
    if missing:
        raise InvalidInputError(f"{what} is missing {', '.join(missing)}")
    return data


def _parse_vectors(data: Any) -> np.ndarray:
    """Vectors as lists of numbers or of [re, im] pairs."""
    if isinstance(data, dict):
        data = _require_keys(data, ("vectors",), "vector file")["vectors"]
    try:
        arr = np.asarray(data, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed vector list: {exc}") from exc
    if arr.ndim == 3 and arr.shape[-1] == 2:
        return arr[..., 0] + 1j * arr[..., 1]
    if arr.ndim == 2:
        return arr.astype(np.complex128)
    raise InvalidInputError(f"vectors must be a list of d-vectors, got shape {arr.shape}")


def _random_step_function(
    rng: np.random.Generator, p: int, M: int, L: int, dim: int
) -> StepFunction:
    size = p ** (M + L)
    values = rng.standard_normal((size, dim)) + 1j * rng.standard_normal((size, dim))
    f = StepFunction(p, M, L, values)
    return StepFunction(p, M, L, values / math.sqrt(bochner_norm_sq(f, EuclideanNorm(dim))))


def run_transform(params: dict[str, Any]) -> tuple[Any, int]:
    f = from_dict(jsonio.read_json(params["input"]))
    g = fourier_inverse(f, params["backend"]) if params["inverse"] else fourier(f, params["backend"])
    return to_dict(g), 0


def run_verify_parseval(params: dict[str, Any]) -> tuple[Any, int]:
    p, M, L, dim = params["p"], params["M"], params["L"], params["dim"]
    rng = np.random.default_rng(params["seed"])
    euclidean = EuclideanNorm(dim)
    parseval, inversion = 0.0, 0.0
    for _ in range(params["trials"]):
        f = _random_step_function(rng, p, M, L, dim)
        g = fourier(f, params["backend"])
        parseval = max(parseval, abs(bochner_norm_sq(g, euclidean) - 1.0))
        back = fourier_inverse(g, params["backend"])
        inversion = max(inversion, float(np.max(np.abs(back.values - f.values))))
    payload = {
        "p": p,
        "M": M,
        "L": L,
        "dim": dim,
        "trials": params["trials"],
        "seed": params["seed"],
        "max_parseval_deviation": parseval,
        "max_inversion_deviation": inversion,
        "tolerance": PARSEVAL_TOLERANCE,
    }
    if max(parseval, inversion) >= PARSEVAL_TOLERANCE:
        raise InternalAssertionError(
            f"Parseval deviation {parseval:.3e} / inversion deviation {inversion:.3e}"
        )
    return payload, 0


def run_khinchin(params: dict[str, Any]) -> tuple[Any, int]:
    norm = _norm_from_params(params)
    vectors = _parse_vectors(jsonio.read_json(params["vectors"]))
    report = khinchin_expectation(vectors, norm)
    payload = report.to_dict()
    payload["norm"] = norm.describe()
    if params["realization"]:
        payload["rademacher_expectation"] = rademacher_expectation(vectors, norm)
    return payload, 0


def run_estimate_constant(params: dict[str, Any]) -> tuple[Any, int]:
    estimate = estimate_constant(
        params["p"],
        params["N"],
        _norm_from_params(params),
        params["direction"],
        params["restarts"],
        params["iterations"],
        params["seed"],
    )
    return estimate.to_dict(), 0


def run_dual_check(params: dict[str, Any]) -> tuple[Any, int]:
    report = dual_transfer_check(
        params["p"],
        params["N"],
        _norm_from_params(params),
        params["restarts"],
        params["iterations"],
        params["seed"],
        params["tolerance"],
    )
    return report.to_dict(), EXIT_VIOLATION if report.violation else 0


def run_monna(params: dict[str, Any]) -> tuple[Any, int]:
    pattern = tuple(_parse_int_list(params["pattern"], "--pattern"))
    report = monna_measure_check(params["p"], params["precision"], pattern)
    payload = report.to_dict()
    payload["tau"] = str(monna(PadicDigits(params["p"], pattern)))
    return payload, 0


def run_ratio(params: dict[str, Any]) -> tuple[Any, int]:
    data = _require_keys(jsonio.read_json(params["witness"]), (), "witness file")
    if "witness" in data:
        norm = norm_from_dict(_require_keys(data, ("norm",), "estimate file")["norm"])
        data = data["witness"]
    else:
        norm = _norm_from_params(params)
    witness = WitnessFamily.from_dict(data)
    payload = {
        "norm": norm.describe(),
        "q_functional": q_functional(witness, norm),
        "family_norm_sq": family_norm_sq(witness, norm),
        "ratio": ratio(witness, norm),
    }
    return payload, 0


def run_sweep(params: dict[str, Any]) -> tuple[Any, int]:
    config = SweepConfig(
        primes=params["primes"],
        Ns=params["Ns"],
        qs=[parse_exponent(q) for q in params["qs"].split(",")],
        dims=_parse_int_list(params["dims"], "--dims"),
        directions=[Direction(d) for d in params["directions"]],
        restarts=params["restarts"],
        iterations=params["iterations"],
        seed=params["seed"],
        timing=params["timing"],
    )
    return sweep(config), 0


COMMANDS: dict[str, Callable[[dict[str, Any]], tuple[Any, int]]] = {
    "transform": run_transform,
    "verify-parseval": run_verify_parseval,
    "khinchin": run_khinchin,
    "estimate-constant": run_estimate_constant,
    "dual-check": run_dual_check,
    "monna": run_monna,
    "ratio": run_ratio,
    "report": run_sweep,
}


def render(payload: Any, output_format: str) -> str:
    if output_format == "csv":
        if isinstance(payload, list):
            return csvio.dumps(payload, SWEEP_FIELDS)
        flat = csvio.flatten(payload)
        return csvio.dumps([flat], list(flat))
    if isinstance(payload, list):
        payload = {"rows": payload}
    return jsonio.dumps(payload)


def echo_error(name: str, message: str, exit_code: int) -> int:
    error = {"error": name, "message": message, "exit_code": exit_code}
    click.echo(jsonio.dumps(error), nl=False)
    return exit_code


def run(config: ExperimentConfig) -> int:
    """Execute one command; errors become a JSON object and a nonzero status."""
    try:
        payload, status = COMMANDS[config.command](config.params)
        text = render(payload, config.output_format)
    except PadicKwapienError as exc:
        LOGGER.debug("%s failed", config.command, exc_info=True)
        return echo_error(type(exc).__name__, str(exc), exc.exit_code)
    except Exception as exc:
        LOGGER.exception("%s failed unexpectedly", config.command)
        return echo_error(type(exc).__name__, str(exc), InternalAssertionError.exit_code)
    if config.output is not None:
        jsonio.write_text(config.output, text)
        LOGGER.info("wrote %s", config.output)
    else:
        click.echo(text, nl=False)
    return status


def _execute(ctx: click.Context, command: str, output: str | None, **params: Any) -> None:
    fmt = ctx.obj["format"]
    config = ExperimentConfig(command, params, fmt, Path(output) if output else None)
    ctx.exit(run(config))


def output_option(f: Callable[..., Any]) -> Callable[..., Any]:
    return click.option("--output", "-o", help="Write the result here instead of stdout")(f)


def norm_options(f: Callable[..., Any]) -> Callable[..., Any]:
    f = click.option(
        "--field", type=click.Choice(["complex", "real"]), default="complex", help="Scalar field"
    )(f)
    f = click.option("--weights", help="Comma-separated weights for --norm wlq")(f)
    f = click.option("--dim", type=int, default=2, help="Dimension d (default: 2)")(f)
    f = click.option("--q", default="2", help="Exponent q in [1, inf] (default: 2)")(f)
    f = click.option(
        "--norm", type=click.Choice(["lq", "wlq"]), default="lq", help="Norm kind (default: lq)"
    )(f)
    return f


def budget_options(f: Callable[..., Any]) -> Callable[..., Any]:
    f = click.option("--seed", type=int, default=0, help="Seed for all randomness")(f)
    f = click.option("--iters", "iterations", type=int, help="Iterations per restart")(f)
    f = click.option("--restarts", type=int, help="Random restarts")(f)
    return f


class JsonErrorGroup(click.Group):
    """Group whose usage errors exit 2 with the same error JSON as library errors."""

    def main(  # type: ignore[override]
        self,
        args: Any = None,
        prog_name: str | None = None,
        complete_var: str | None = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        try:
            code = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as exc:
            if type(exc).__name__ == "NoArgsIsHelpError":
                exc.show()
                code = exc.exit_code
            else:
                code = echo_error(type(exc).__name__, exc.format_message(), 2)
        except click.ClickException as exc:
            code = echo_error(type(exc).__name__, exc.format_message(), 2)
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = 1
        code = code if isinstance(code, int) else 0
        if standalone_mode:
            sys.exit(code)
        return code


@click.group(cls=JsonErrorGroup)
@click.option("--config", "config_path", type=click.Path(exists=True), help="Config file")
@click.option(
    "--format", "output_format", type=click.Choice(["json", "csv"]), help="Output format"
)
@click.option("--verbose", "-v", count=True, help="More logging on stderr (repeatable)")
@click.pass_context
def cli(ctx: click.Context, config_path: str | None, output_format: str | None, verbose: int) -> None:
    """Fourier analysis over Q_p and Kwapien constant estimation."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    if config_path:
        set_config_path(Path(config_path))
    ctx.ensure_object(dict)
    ctx.obj["format"] = output_format or get_config()["output_format"]


@cli.command()
@click.argument("input", type=click.Path(exists=True))
@click.option("--inverse", is_flag=True, help="Apply F^-1 = F^3 instead of F")
@click.option(
    "--backend", type=click.Choice(["auto", "naive", "radix", "numpy"]), help="DFT backend"
)
@output_option
@click.pass_context
def transform(ctx: click.Context, **kwargs: Any) -> None:
    """Fourier transform of a step function given as JSON."""
    _execute(ctx, "transform", **kwargs)


@cli.command("verify-parseval")
@click.option("--p", type=int, required=True)
@click.option("--M", "M", type=int, required=True, help="Support exponent")
@click.option("--L", "L", type=int, required=True, help="Level exponent")
@click.option("--dim", type=int, default=1)
@click.option("--trials", type=int, default=100)
@click.option("--seed", type=int, default=0)
@click.option(
    "--backend", type=click.Choice(["auto", "naive", "radix", "numpy"]), help="DFT backend"
)
@output_option
@click.pass_context
def verify_parseval(ctx: click.Context, **kwargs: Any) -> None:
    """Check Plancherel and inversion on random step functions."""
    _execute(ctx, "verify-parseval", **kwargs)


@cli.command()
@norm_options
@click.option("--vectors", type=click.Path(exists=True), required=True, help="JSON vector list")
@click.option("--realization", is_flag=True, help="Also integrate over the Rademacher system")
@output_option
@click.pass_context
def khinchin(ctx: click.Context, **kwargs: Any) -> None:
    """Exact Khinchin-type expectation over all sign patterns."""
    _execute(ctx, "khinchin", **kwargs)


@cli.command("estimate-constant")
@click.option("--p", type=int, required=True)
@click.option("--N", "N", type=int, required=True)
@norm_options
@click.option(
    "--direction", type=click.Choice(["upper", "lower"]), default="upper", show_default=True
)
@budget_options
@output_option
@click.pass_context
def estimate_constant_cmd(ctx: click.Context, **kwargs: Any) -> None:
    """Estimate the best constant of the Kwapien inequality."""
    _execute(ctx, "estimate-constant", **kwargs)


@cli.command("dual-check")
@click.option("--p", type=int, required=True)
@click.option("--N", "N", type=int, required=True)
@norm_options
@budget_options
@click.option("--tolerance", type=float, default=1e-6, show_default=True)
@output_option
@click.pass_context
def dual_check(ctx: click.Context, **kwargs: Any) -> None:
    """Compare the lower constant of X with the upper constant of X*."""
    _execute(ctx, "dual-check", **kwargs)


@cli.command("monna")
@click.option("--p", type=int, required=True)
@click.option("--precision", type=int, required=True, help="Digits D")
@click.option("--pattern", default="", help="Comma-separated fixed digits t_0,t_1,...")
@output_option
@click.pass_context
def monna_cmd(ctx: click.Context, **kwargs: Any) -> None:
    """Measure of a digit cylinder against the Lebesgue measure of its image."""
    _execute(ctx, "monna", **kwargs)


@cli.command("ratio")
@click.option("--witness", type=click.Path(exists=True), required=True)
@norm_options
@output_option
@click.pass_context
def ratio_cmd(ctx: click.Context, **kwargs: Any) -> None:
    """Re-evaluate the ratio of a witness family (e.g. estimate-constant output)."""
    _execute(ctx, "ratio", **kwargs)


@cli.command("sweep")
@click.option("--p", "primes", type=int, multiple=True, default=[2], show_default=True)
@click.option("--N", "Ns", type=int, multiple=True, default=[1], show_default=True)
@click.option("--q", "qs", default="1,2,inf", show_default=True, help="Comma-separated exponents")
@click.option("--dims", default="1,2,4", show_default=True, help="Comma-separated dimensions")
@click.option(
    "--direction",
    "directions",
    type=click.Choice(["upper", "lower"]),
    multiple=True,
    default=["upper"],
    show_default=True,
)
@budget_options
@click.option("--timing/--no-timing", default=True, help="Record wall time per row")
@output_option
@click.pass_context
def sweep_cmd(ctx: click.Context, **kwargs: Any) -> None:
    """Constant estimates over a grid, one row per point."""
    _execute(ctx, "report", **kwargs)


cli.add_command(sweep_cmd, name="report")
