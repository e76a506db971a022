"""
Norm construction from CLI arguments and JSON descriptions.
"""

from __future__ import annotations

import math
from typing import Any

from ..errors import InvalidInputError
from ..types import ScalarField
from .base import NormSpec
from .lq import LqNorm, WeightedLqNorm
from .table import TableNorm

NORM_KINDS = ("lq", "wlq", "table")


def parse_exponent(text: str | float) -> float:
    if isinstance(text, str) and text.strip().lower() in ("inf", "infinity", "oo"):
        return math.inf
    try:
        return float(text)
    except ValueError as exc:
        raise InvalidInputError(f"invalid exponent {text!r}") from exc


def parse_weights(text: str) -> list[float]:
    try:
        return [float(w) for w in text.split(",") if w.strip()]
    except ValueError as exc:
        raise InvalidInputError(f"invalid weight list {text!r}") from exc


def build_norm(
    kind: str,
    dim: int,
    q: str | float = 2.0,
    weights: str | None = None,
    field: str = "complex",
) -> NormSpec:
    """Norm from the CLI syntax ``--norm lq --q 1.5 --dim 4`` or ``--norm wlq ... --weights``."""
    scalar_field = ScalarField(field)
    exponent = parse_exponent(q)
    if kind == "lq":
        return LqNorm(exponent, dim, scalar_field)
    if kind == "wlq":
        if weights is None:
            raise InvalidInputError("--weights is required for wlq norms")
        w = parse_weights(weights)
        if len(w) != dim:
            raise InvalidInputError(f"{len(w)} weights given for dimension {dim}")
        return WeightedLqNorm(exponent, w, scalar_field)
    raise InvalidInputError(f"unknown norm kind {kind!r}; expected one of lq, wlq")


def norm_from_dict(data: dict[str, Any]) -> NormSpec:
    try:
        field = ScalarField(data.get("field", "complex"))
        kind = data["kind"]
        if kind == "lq":
            return LqNorm(parse_exponent(data["q"]), int(data["dim"]), field)
        if kind == "wlq":
            return WeightedLqNorm(parse_exponent(data["q"]), data["weights"], field)
        if kind == "table":
            rows = [[complex(re, im) for re, im in row] for row in data["table"]]
            return TableNorm(rows, field)
    except (AttributeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed norm description: {exc!r}") from exc
    raise InvalidInputError(f"unknown norm kind {kind!r}; expected one of {NORM_KINDS}")
