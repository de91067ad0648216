"""Architecture configuration: the simulated machine."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, ValidationError, model_validator

from sunrisesim.config import Config, resolve_preset
from sunrisesim.errors import ConfigError, ModelParseError
from sunrisesim.unimem import DramArrayPool, sustained_bandwidth
from sunrisesim.utils import get_logger, read_yaml

logger = get_logger(__name__)

# Derived clocks outside this window are rejected as configuration mistakes.
CLOCK_RANGE_GHZ = (1e-3, 10.0)
DRAM_TOTAL_TOLERANCE = 0.05


def derive_clock(peak_tops: float, total_macs: int) -> float:
    """Clock in GHz at which ``total_macs`` MAC units deliver ``peak_tops`` (1 MAC = 2 ops)."""
    if peak_tops <= 0:
        raise ConfigError(f"peak_tops must be positive, got {peak_tops}")
    if total_macs <= 0:
        raise ConfigError(f"total_macs must be positive, got {total_macs}")
    clock = peak_tops * 1e12 / (2 * total_macs) / 1e9
    low, high = CLOCK_RANGE_GHZ
    if not low <= clock <= high:
        raise ConfigError(
            f"derived clock {clock:g} GHz from {peak_tops:g} TOPS over {total_macs} MACs "
            f"is outside [{low:g}, {high:g}] GHz"
        )
    return clock


class ArchConfig(BaseModel):
    """VPU/DSU pools, DRAM array pools, fabric and host bandwidths, energies.

    Bandwidths are bytes/s, energies pJ, ``static_power`` watts, ``clock`` GHz.
    When ``clock`` is omitted it is derived from ``target_peak_tops`` over
    ``target_total_macs`` (or the configured MAC count).
    """
    model_config = {"frozen": True, "extra": "forbid"}

    name: str = "custom"
    vpu_count: int = Field(ge=1)
    macs_per_vpu: int = Field(ge=1)
    dsu_count: int = Field(ge=1)
    vector_width: int = Field(default=1, ge=1)

    clock: float | None = Field(default=None, gt=0)
    target_peak_tops: float | None = Field(default=None, gt=0)
    target_total_macs: int | None = Field(default=None, ge=1)

    dsu_vpu_bandwidth: float = Field(gt=0)
    dram_bandwidth_total: float = Field(gt=0)
    vpu_pool: DramArrayPool
    dsu_pool: DramArrayPool
    host_ingress: float = Field(gt=0)
    include_ingress: bool = False
    pipeline_fill: int | None = Field(default=None, ge=0)

    energy_mac: float = Field(default=0.0, ge=0)
    energy_dram_bit: float = Field(default=0.0, ge=0)
    energy_fabric_bit: float = Field(default=0.0, ge=0)
    static_power: float = Field(default=0.0, ge=0)

    @model_validator(mode="after")
    def check_clock(self) -> ArchConfig:
        if self.clock is None and self.target_peak_tops is None:
            raise ValueError("either clock or target_peak_tops must be given")
        if self.clock is None:
            # Raises ConfigError for out-of-range derivations.
            _ = self.clock_ghz
        return self

    @property
    def total_macs(self) -> int:
        return self.vpu_count * self.macs_per_vpu

    @property
    def clock_ghz(self) -> float:
        if self.clock is not None:
            return self.clock
        assert self.target_peak_tops is not None
        return derive_clock(self.target_peak_tops, self.target_total_macs or self.total_macs)

    @property
    def clock_hz(self) -> float:
        return self.clock_ghz * 1e9

    @property
    def peak_tops(self) -> float:
        return 2 * self.total_macs * self.clock_hz / 1e12

    @property
    def fill_cycles(self) -> int:
        if self.pipeline_fill is not None:
            return self.pipeline_fill
        return max(self.vpu_pool.array_latency, self.dsu_pool.array_latency)

    @property
    def fabric_bytes_per_cycle(self) -> float:
        return self.dsu_vpu_bandwidth / self.clock_hz

    @property
    def host_bytes_per_cycle(self) -> float:
        return self.host_ingress / self.clock_hz

    @property
    def weight_bytes_per_cycle(self) -> float:
        """Rate at which one VPU streams weights out of its own pool."""
        return sustained_bandwidth(self.vpu_pool)

    @property
    def writeback_bytes_per_cycle(self) -> float:
        """Aggregate rate of the DSU pools receiving results."""
        return self.dsu_count * sustained_bandwidth(self.dsu_pool)

    @property
    def pooled_dram_bandwidth(self) -> float:
        """Sum of every pool's sustained bandwidth, bytes/s."""
        per_cycle = self.vpu_count * sustained_bandwidth(self.vpu_pool) + self.writeback_bytes_per_cycle
        return per_cycle * self.clock_hz

    @property
    def memory_capacity(self) -> int:
        """Bytes across all VPU and DSU pools."""
        return (
            self.vpu_count * self.vpu_pool.array_count * self.vpu_pool.array_capacity
            + self.dsu_count * self.dsu_pool.array_count * self.dsu_pool.array_capacity
        )


class Diagnostic(BaseModel):
    """One finding from configuration validation."""
    severity: Literal["error", "warning"]
    field: str
    message: str


def arch_diagnostics(arch: ArchConfig) -> list[Diagnostic]:
    """Cross-field checks on a structurally valid ArchConfig (warnings only)."""
    found: list[Diagnostic] = []
    if arch.target_total_macs is not None and arch.total_macs != arch.target_total_macs:
        found.append(Diagnostic(
            severity="warning",
            field="vpu_count, macs_per_vpu",
            message=(
                f"vpu_count ({arch.vpu_count}) x macs_per_vpu ({arch.macs_per_vpu}) = "
                f"{arch.total_macs} MACs, expected target_total_macs = {arch.target_total_macs}"
            ),
        ))
    pooled = arch.pooled_dram_bandwidth
    if abs(pooled - arch.dram_bandwidth_total) > DRAM_TOTAL_TOLERANCE * arch.dram_bandwidth_total:
        found.append(Diagnostic(
            severity="warning",
            field="dram_bandwidth_total",
            message=(
                f"pools sustain {pooled:.4g} B/s at {arch.clock_ghz:.4g} GHz but "
                f"dram_bandwidth_total is {arch.dram_bandwidth_total:.4g} B/s"
            ),
        ))
    if arch.macs_per_vpu % arch.vector_width:
        found.append(Diagnostic(
            severity="warning",
            field="vector_width",
            message=f"macs_per_vpu ({arch.macs_per_vpu}) is not a multiple of vector_width ({arch.vector_width})",
        ))
    return found


def parse_arch(raw: object, origin: str = "<memory>") -> ArchConfig:
    if not isinstance(raw, dict):
        raise ModelParseError(f"{origin}: expected a mapping of architecture fields")
    raw.setdefault("name", Path(origin).stem)
    return ArchConfig.model_validate(raw)


def load_arch(path: str | Path = "sunrise-40nm", config: Config | None = None) -> ArchConfig:
    """Load an ArchConfig file or bundled preset, logging consistency warnings."""
    resolved = resolve_preset(path, "arch", config)
    try:
        arch = parse_arch(read_yaml(resolved), str(resolved))
    except ValidationError:
        logger.warning("Invalid architecture file", extra={"path": str(resolved)})
        raise
    for diag in arch_diagnostics(arch):
        logger.warning(diag.message, extra={"path": str(resolved), "field": diag.field})
    logger.debug(
        "Architecture loaded",
        extra={"arch": arch.name, "clock_ghz": arch.clock_ghz, "peak_tops": arch.peak_tops},
    )
    return arch
