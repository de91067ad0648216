"""Configuration management for sunrisesim."""

from __future__ import annotations

import os
import re
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings

from sunrisesim.errors import ConfigError, PresetNotFoundError
from sunrisesim.utils import get_logger

logger = get_logger(__name__)

PRESETS_DIR = Path(__file__).parent / "presets"

# Preset kinds and the sub-directory each lives in.
PRESET_KINDS: dict[str, str] = {
    "arch": "arch",
    "model": "models",
    "data": "data",
}


ENV_PATTERN = re.compile(r"\$\{([^}:]+)(?::-([^}]*))?\}")


def _substitute_env_vars(value: Any, field: str = "") -> Any:
    """Recursively substitute environment variables in config values.

    Supports ${VAR_NAME} and ${VAR_NAME:-default} syntax. An unset variable
    without a default becomes "" and is logged with the dotted field it sits in.
    """
    if isinstance(value, str):

        def replacer(match: re.Match[str]) -> str:
            var_name, default = match.group(1), match.group(2)
            if var_name in os.environ:
                return os.environ[var_name]
            if default is None:
                logger.warning(
                    "Unset environment variable in config",
                    extra={"variable": var_name, "field": field or "<root>"},
                )
                return ""
            return default

        return ENV_PATTERN.sub(replacer, value)
    elif isinstance(value, dict):
        return {k: _substitute_env_vars(v, f"{field}.{k}" if field else str(k)) for k, v in value.items()}
    elif isinstance(value, list):
        return [_substitute_env_vars(v, f"{field}[{i}]") for i, v in enumerate(value)]
    return value


class LoggingConfig(BaseModel):
    """Logging configuration."""
    level: str = "WARNING"
    format: str = "text"


class PathsConfig(BaseModel):
    """Where named presets are looked up before the bundled ones."""
    search_path: list[str] = Field(default_factory=list)


class ProjectionConfig(BaseModel):
    """Process-projection policy knobs."""
    power_density_cap: float = Field(default=0.5, gt=0)   # W/mm²
    dram_sram_density_ratio: float = Field(default=14.0, gt=0)
    target_cmos: float = Field(default=7.0, gt=0)         # nm
    target_dram: str = "1y"


class SweepConfig(BaseModel):
    """Parameter sweep configuration."""
    max_concurrency: int = Field(default=4, ge=1)


class ReportConfig(BaseModel):
    """Table emission configuration."""
    significant_digits: int = Field(default=3, ge=1, le=12)


class Config(BaseSettings):
    """Main sunrisesim configuration."""
    model_config = {"extra": "ignore", "env_prefix": "SUNRISESIM_"}

    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    paths: PathsConfig = Field(default_factory=PathsConfig)
    projection: ProjectionConfig = Field(default_factory=ProjectionConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)

    def search_dirs(self) -> list[Path]:
        """Directories searched for presets, highest priority first."""
        dirs: list[Path] = []
        env_path = os.environ.get("SUNRISESIM_CONFIG_PATH", "")
        for entry in env_path.split(os.pathsep):
            if entry:
                dirs.append(Path(entry))
        dirs.extend(Path(p) for p in self.paths.search_path)
        return dirs


def load_config(config_path: str | Path | None = None) -> Config:
    """Load configuration from YAML file with environment variable substitution.

    Args:
        config_path: Path to the YAML configuration file. ``None`` or a missing
            file yields the defaults.

    Returns:
        Loaded and validated Config object.

    Raises:
        ConfigError: the file is not valid YAML or not a mapping.
    """
    overrides: dict[str, Any] = {}
    for key, env in (("level", "SUNRISESIM_LOG_LEVEL"), ("format", "SUNRISESIM_LOG_FORMAT")):
        if os.environ.get(env):
            overrides[key] = os.environ[env]

    if config_path is None or not Path(config_path).exists():
        cfg = Config()
    else:
        with open(config_path, encoding="utf-8") as f:
            try:
                raw_config = yaml.safe_load(f)
            except yaml.YAMLError as exc:
                raise ConfigError(f"{config_path}: malformed YAML: {exc}") from exc
        if raw_config is not None and not isinstance(raw_config, dict):
            raise ConfigError(f"{config_path}: expected a mapping of config sections")
        cfg = Config(**_substitute_env_vars(raw_config)) if raw_config else Config()

    if overrides:
        cfg = cfg.model_copy(update={"logging": cfg.logging.model_copy(update=overrides)})
    return cfg


def resolve_preset(name_or_path: str | Path, kind: str, config: Config | None = None) -> Path:
    """Resolve a preset name (``sunrise-40nm``) or an explicit file path.

    Explicit paths win. Names are looked up as ``<dir>/<subdir>/<name>.yaml`` and
    ``<dir>/<name>.yaml`` in every search directory, then in the bundled presets.

    Raises:
        PresetNotFoundError: if nothing matches.
    """
    candidate = Path(name_or_path)
    if candidate.suffix in (".yaml", ".yml", ".json") or candidate.is_file():
        if candidate.is_file():
            return candidate
        raise PresetNotFoundError(f"File not found: {candidate}")

    subdir = PRESET_KINDS.get(kind, kind)
    cfg = config or Config()
    tried: list[Path] = []
    for base in [*cfg.search_dirs(), PRESETS_DIR]:
        for path in (base / subdir / f"{name_or_path}.yaml", base / f"{name_or_path}.yaml"):
            tried.append(path)
            if path.is_file():
                logger.debug("Preset resolved", extra={"preset": str(name_or_path), "path": str(path)})
                return path

    raise PresetNotFoundError(
        f"No {kind} preset named '{name_or_path}' (looked in: {', '.join(str(p) for p in tried)})"
    )


def generate_default_config() -> str:
    """Return a commented default configuration file."""
    return """\
# sunrisesim configuration
# Environment variables can be substituted with ${VAR_NAME} syntax

logging:
  level: "${SUNRISESIM_LOG_LEVEL:-WARNING}"
  format: "text"            # "json" for structured logs

paths:
  # Directories searched for arch/, models/ and data/ presets before the bundled ones.
  search_path: []

projection:
  power_density_cap: 0.5    # W/mm²; above it projections use power-reduction mode
  dram_sram_density_ratio: 14
  target_cmos: 7
  target_dram: "1y"

sweep:
  max_concurrency: 4

report:
  significant_digits: 3
"""
