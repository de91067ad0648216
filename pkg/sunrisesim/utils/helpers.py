"""Utility functions for sunrisesim."""

from __future__ import annotations

import math
from decimal import Decimal
from pathlib import Path
from typing import Any

import yaml

from sunrisesim.errors import ModelParseError


def round_sig(value: float, digits: int = 3) -> float:
    """Round to a number of significant digits (0 stays 0)."""
    if value == 0 or not math.isfinite(value):
        return value
    return round(value, digits - 1 - math.floor(math.log10(abs(value))))


def format_sig(value: float, digits: int = 3) -> str:
    """Format with a fixed number of significant digits, no exponent for common ranges.

    >>> format_sig(16.3636)
    '16.4'
    >>> format_sig(0.080730)
    '0.0807'
    """
    if value == 0:
        return "0"
    if not math.isfinite(value):
        return str(value)
    magnitude = math.floor(math.log10(abs(value)))
    if magnitude >= 15 or magnitude <= -6:
        return f"{value:.{digits - 1}e}"
    decimals = max(digits - 1 - magnitude, 0)
    return f"{round_sig(value, digits):.{decimals}f}"


def significant_digits(text: str) -> int:
    """Count significant digits in a printed number such as "0.18" or "1.2e4"."""
    mantissa = text.strip().lower().split("e")[0].lstrip("+-")
    digits = Decimal(mantissa).as_tuple().digits
    stripped = "".join(str(d) for d in digits).lstrip("0")
    return max(len(stripped), 1)


def read_yaml(path: str | Path) -> Any:
    """Read a YAML document, mapping syntax errors to ModelParseError.

    Missing files propagate as FileNotFoundError so callers can tell I/O
    failures from malformed content.
    """
    path = Path(path)
    with open(path, encoding="utf-8") as f:
        try:
            return yaml.safe_load(f)
        except yaml.YAMLError as exc:
            raise ModelParseError(f"{path}: malformed YAML: {exc}") from exc
