"""Chip database loading."""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel

from sunrisesim.config import Config, resolve_preset
from sunrisesim.errors import ModelParseError, SunriseSimError
from sunrisesim.techscale.models import ChipSpec
from sunrisesim.utils import get_logger, read_yaml

logger = get_logger(__name__)

DEFAULT_CHIP_FILE = "chips"


class ChipFile(BaseModel):
    chips: list[ChipSpec]


def load_chips(path: str | Path, config: Config | None = None) -> list[ChipSpec]:
    resolved = resolve_preset(path, "data", config)
    raw = read_yaml(resolved)
    if not isinstance(raw, dict):
        raise ModelParseError(f"{resolved}: expected a mapping with a 'chips' list")
    chips = ChipFile.model_validate(raw).chips
    logger.debug("Chips loaded", extra={"path": str(resolved), "count": len(chips)})
    return chips


def chip_db(extra: list[str | Path] | None = None, config: Config | None = None) -> list[ChipSpec]:
    """Built-in chips followed by those in ``extra`` files, in order."""
    chips = load_chips(DEFAULT_CHIP_FILE, config)
    for path in extra or []:
        chips.extend(load_chips(path, config))
    return chips


def find_chip(chips: list[ChipSpec], name: str) -> ChipSpec:
    for chip in chips:
        if chip.matches(name):
            return chip
    known = ", ".join(c.key for c in chips)
    raise SunriseSimError(f"Unknown chip '{name}'. Known chips: {known}")
