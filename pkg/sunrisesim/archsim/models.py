"""Simulation result models."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field


class Bottleneck(str, Enum):
    """Phase that set a layer's duration. Declaration order is the tie order."""
    COMPUTE = "Compute"
    BROADCAST = "Broadcast"
    DRAM_WEIGHTS = "DramWeights"
    DRAM_WRITEBACK = "DramWriteback"
    INGRESS = "Ingress"


class EnergyBreakdown(BaseModel):
    """Energy in joules by component."""
    mac: float = 0.0
    dram: float = 0.0
    fabric: float = 0.0
    static: float = 0.0

    @property
    def total(self) -> float:
        return self.mac + self.dram + self.fabric + self.static

    def __add__(self, other: EnergyBreakdown) -> EnergyBreakdown:
        return EnergyBreakdown(
            mac=self.mac + other.mac,
            dram=self.dram + other.dram,
            fabric=self.fabric + other.fabric,
            static=self.static + other.static,
        )


class LayerSim(BaseModel):
    """Per-layer phase cycles, classification and traffic.

    ``weight_load_cycles`` is the visible part of the weight load; the part
    prefetched under the previous layer is excluded. ``weight_stream_cycles``
    is the full load.
    """
    layer: str
    kind: str
    compute_cycles: int
    broadcast_cycles: float
    weight_load_cycles: float
    weight_stream_cycles: float
    writeback_cycles: float
    ingress_cycles: float = 0.0
    pipeline_fill: int
    total_cycles: float
    bottleneck: Bottleneck
    vpu_utilization: float = Field(ge=0, le=1)
    active_vpus: int
    macs: int
    vector_ops: int
    dram_bytes: int
    fabric_bytes: int
    energy: EnergyBreakdown = Field(default_factory=EnergyBreakdown)

    @property
    def phase_cycles(self) -> dict[Bottleneck, float]:
        return {
            Bottleneck.COMPUTE: float(self.compute_cycles),
            Bottleneck.BROADCAST: self.broadcast_cycles,
            Bottleneck.DRAM_WEIGHTS: self.weight_load_cycles,
            Bottleneck.DRAM_WRITEBACK: self.writeback_cycles,
            Bottleneck.INGRESS: self.ingress_cycles,
        }


class SimResult(BaseModel):
    model: str
    arch: str
    batch: int
    clock_ghz: float
    per_layer: list[LayerSim]
    total_cycles: float
    throughput: float
    effective_tops: float
    peak_tops: float
    avg_power: float
    energy_per_inference: float
    ingress_bound_throughput: float
    energy: EnergyBreakdown

    @property
    def seconds(self) -> float:
        return self.total_cycles / (self.clock_ghz * 1e9)

    def bottleneck_counts(self) -> dict[str, int]:
        counts = {b.value: 0 for b in Bottleneck}
        for layer in self.per_layer:
            counts[layer.bottleneck.value] += 1
        return counts
