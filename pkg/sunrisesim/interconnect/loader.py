"""Technology parameter file loading."""

from __future__ import annotations

from pathlib import Path

from pydantic import ValidationError

from sunrisesim.config import Config, resolve_preset
from sunrisesim.errors import ModelParseError
from sunrisesim.interconnect.models import TechTable
from sunrisesim.utils import get_logger, read_yaml

logger = get_logger(__name__)

DEFAULT_TECH_FILE = "interconnect"


def load_technologies(path: str | Path = DEFAULT_TECH_FILE, config: Config | None = None) -> TechTable:
    """Load a technology table (bundled ``interconnect`` preset by default)."""
    resolved = resolve_preset(path, "data", config)
    raw = read_yaml(resolved)
    if not isinstance(raw, dict):
        raise ModelParseError(f"{resolved}: expected a mapping with a 'techs' list")
    try:
        table = TechTable.model_validate(raw)
    except ValidationError:
        logger.warning("Invalid technology file", extra={"path": str(resolved)})
        raise
    logger.debug("Technologies loaded", extra={"path": str(resolved), "count": len(table.techs)})
    return table
