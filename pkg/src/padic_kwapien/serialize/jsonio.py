"""
Canonical JSON for step functions, witnesses and reports.

Output is deterministic: sorted keys, fixed indentation, floats written with
their shortest round-trip repr, and a trailing newline.
"""

import hashlib
import json
from pathlib import Path
from typing import Any

from ..errors import InvalidInputError


def dumps(data: Any) -> str:
    try:
        return json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + "\n"
    except ValueError as exc:
        raise InvalidInputError(f"result is not JSON-serialisable: {exc}") from exc


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"invalid JSON: {exc}") from exc


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def write_text(path: str | Path, text: str) -> Path:
    """Write UTF-8 text with LF line endings, creating parent directories."""
    full_path = Path(path)
    full_path.parent.mkdir(parents=True, exist_ok=True)
    with open(full_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    return full_path


def content_hash(data: Any) -> str:
    """First 16 hex digits of the SHA-256 of the canonical JSON."""
    return hashlib.sha256(dumps(data).encode("utf-8")).hexdigest()[:16]
