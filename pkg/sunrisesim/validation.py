"""Validation of every sunrisesim input file type.

``validate_config`` recognises the file kind from its top-level keys, runs
the owning pydantic model plus any cross-field checks, and reports findings
as diagnostics. Nothing is repaired.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from sunrisesim.archsim import ArchConfig, Diagnostic, arch_diagnostics, parse_arch
from sunrisesim.config import Config, _substitute_env_vars
from sunrisesim.econ import CostBasisFile
from sunrisesim.errors import ModelParseError, ModelValidationError, SunriseSimError
from sunrisesim.interconnect import TechTable
from sunrisesim.report import PublishedTables
from sunrisesim.techscale import ScalingTable
from sunrisesim.techscale.chipdb import ChipFile
from sunrisesim.utils import get_logger, read_yaml
from sunrisesim.workload import ModelSpec, parse_model

logger = get_logger(__name__)

SCHEMAS: dict[str, type[BaseModel]] = {
    "arch": ArchConfig,
    "model": ModelSpec,
    "chips": ChipFile,
    "scaling": ScalingTable,
    "cost": CostBasisFile,
    "interconnect": TechTable,
    "tables": PublishedTables,
    "config": Config,
}

# First matching key decides the kind.
_KIND_KEYS: list[tuple[str, str]] = [
    ("layers", "model"),
    ("vpu_count", "arch"),
    ("chips", "chips"),
    ("cmos_transitions", "scaling"),
    ("dram_processes", "scaling"),
    ("logic", "cost"),
    ("techs", "interconnect"),
    ("tables", "tables"),
]
_CONFIG_SECTIONS = frozenset(Config.model_fields)


def detect_kind(raw: Any) -> str | None:
    """File kind from a parsed document's top-level keys, or None."""
    if not isinstance(raw, dict):
        return None
    for key, kind in _KIND_KEYS:
        if key in raw:
            return kind
    if raw and set(raw) <= _CONFIG_SECTIONS:
        return "config"
    return None


def _from_validation_error(exc: ValidationError, prefix: str = "") -> list[Diagnostic]:
    found = []
    for err in exc.errors():
        location = ".".join(str(part) for part in err["loc"]) or "<root>"
        found.append(Diagnostic(severity="error", field=f"{prefix}{location}", message=err["msg"]))
    return found


def _check(kind: str, raw: dict[str, Any], origin: str) -> list[Diagnostic]:
    if kind == "model":
        try:
            parse_model(raw, origin)
        except ModelValidationError as exc:
            return [Diagnostic(severity="error", field=f"layers.{exc.layer}" if exc.layer else "layers",
                               message=str(exc))]
        return []
    if kind == "arch":
        arch = parse_arch(raw, origin)
        return arch_diagnostics(arch)
    if kind == "config":
        Config.model_validate(_substitute_env_vars(raw))
        return []
    SCHEMAS[kind].model_validate(raw)
    return []


def validate_config(path: str | Path) -> list[Diagnostic]:
    """Diagnostics for one input file; an empty list means it is valid.

    Raises:
        OSError: the file cannot be read.
    """
    origin = str(path)
    try:
        raw = read_yaml(path)
    except ModelParseError as exc:
        return [Diagnostic(severity="error", field="<file>", message=str(exc))]

    kind = detect_kind(raw)
    if kind is None:
        return [Diagnostic(
            severity="error",
            field="<file>",
            message=f"{origin}: unrecognised file; expected one of: {', '.join(SCHEMAS)}",
        )]

    try:
        found = _check(kind, raw, origin)
    except ValidationError as exc:
        found = _from_validation_error(exc)
    except SunriseSimError as exc:
        found = [Diagnostic(severity="error", field="<file>", message=str(exc))]

    logger.info(
        "File validated",
        extra={"path": origin, "kind": kind, "errors": sum(d.severity == "error" for d in found),
               "warnings": sum(d.severity == "warning" for d in found)},
    )
    return found
