"""Chip specifications, process transitions and per-area metrics."""

from __future__ import annotations

import re
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator


class MemoryType(str, Enum):
    DRAM = "DRAM"
    SRAM = "SRAM"


class Integration(str, Enum):
    MONOLITHIC = "monolithic"
    HITOC = "hitoc"


class ChipSpec(BaseModel):
    """One accelerator: process, die size, headline performance and memory.

    Capacity is MB, bandwidth TB/s (``None`` when unpublished), power W.
    """
    model_config = {"frozen": True}

    name: str
    key: str = ""
    cmos_node: float = Field(gt=0, description="nm")
    dram_node: str | None = None
    die_area: float = Field(gt=0, description="mm²")
    peak_tops: float = Field(ge=0)
    memory_capacity: float = Field(gt=0, description="MB")
    power: float = Field(gt=0, description="W")
    memory_bandwidth: float | None = Field(default=None, gt=0, description="TB/s")
    memory_type: MemoryType = MemoryType.SRAM
    integration: Integration = Integration.MONOLITHIC

    @model_validator(mode="before")
    @classmethod
    def default_key(cls, data: Any) -> Any:
        if isinstance(data, dict) and not data.get("key") and isinstance(data.get("name"), str):
            data = {**data, "key": re.sub(r"[^a-z0-9]+", "-", data["name"].lower()).strip("-")}
        return data

    @model_validator(mode="after")
    def check_dram(self) -> ChipSpec:
        if self.memory_type is MemoryType.DRAM and self.dram_node is None:
            raise ValueError(f"{self.name}: DRAM-based chips need a dram_node")
        return self

    def matches(self, name: str) -> bool:
        wanted = name.strip().lower()
        return wanted in (self.key, self.name.lower())


class NodeTransition(BaseModel):
    """One row of the CMOS process table: ``to_node`` relative to ``from_node``."""
    model_config = {"frozen": True}

    from_node: float = Field(gt=0)
    to_node: float = Field(gt=0)
    density_ratio: float = Field(ge=1)
    perf_improvement: float = Field(ge=0, lt=1)
    power_reduction: float = Field(ge=0, lt=1)


class ScaleFactors(BaseModel):
    """Composed multipliers: density, performance and residual power.

    Toward a smaller node density and performance are at least 1 and power
    is in (0, 1]; paths that walk an edge backwards invert its factors.
    """
    model_config = {"frozen": True}

    density: float = Field(default=1.0, gt=0)
    performance: float = Field(default=1.0, gt=0)
    power: float = Field(default=1.0, gt=0)

    def then(self, other: ScaleFactors) -> ScaleFactors:
        return ScaleFactors(
            density=self.density * other.density,
            performance=self.performance * other.performance,
            power=self.power * other.power,
        )


class DramProcess(BaseModel):
    model_config = {"frozen": True}

    name: str
    density: float = Field(gt=0, description="Gb/mm²")


class ScalingTable(BaseModel):
    """Contents of the scaling data file."""
    cmos_transitions: list[NodeTransition]
    dram_processes: list[DramProcess]

    @field_validator("dram_processes")
    @classmethod
    def unique_dram(cls, value: list[DramProcess]) -> list[DramProcess]:
        names = [p.name for p in value]
        if len(set(names)) != len(names):
            raise ValueError("duplicate DRAM process names")
        return value

    @property
    def nodes(self) -> list[float]:
        found = {t.from_node for t in self.cmos_transitions} | {t.to_node for t in self.cmos_transitions}
        return sorted(found, reverse=True)


class AreaMetrics(BaseModel):
    """Die-normalized benchmarks.

    perf_per_area TOPS/mm², bandwidth_per_area GB/s/mm² (``None`` when the
    chip's bandwidth is unknown), capacity_per_area MB/mm², energy_efficiency TOPS/W.
    """
    perf_per_area: float
    bandwidth_per_area: float | None
    capacity_per_area: float
    energy_efficiency: float


class PowerPolicy(BaseModel):
    power_density_cap: float = Field(default=0.5, gt=0, description="W/mm²")


class ProjectionMode(str, Enum):
    PERFORMANCE = "performance"
    POWER = "power"


class CapacityOutlook(BaseModel):
    """Memory held by a die of ``die_area`` mm² at projected capacity density.

    ``capacity`` is MB. ``dram_equivalent_capacity_per_area`` (MB/mm²) is set
    only for SRAM chips: their projected density with DRAM in place of SRAM.
    """
    die_area: float = Field(gt=0, description="mm²")
    capacity: float = Field(ge=0, description="MB")
    bytes_per_param: float = Field(gt=0)
    parameters: float = Field(ge=0)
    dram_equivalent_capacity_per_area: float | None = None


class ChipProjection(BaseModel):
    chip: str
    from_node: float
    to_node: float
    target_dram: str
    factors: ScaleFactors
    mode: ProjectionMode
    power_density: float
    baseline: AreaMetrics
    metrics: AreaMetrics
    outlook: CapacityOutlook | None = None
