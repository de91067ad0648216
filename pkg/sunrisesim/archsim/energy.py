"""Energy and power accounting."""

from __future__ import annotations

from pydantic import BaseModel

from sunrisesim.archsim.config import ArchConfig
from sunrisesim.archsim.models import EnergyBreakdown, SimResult

PICO = 1e-12


def energy_breakdown(
    arch: ArchConfig, *, macs: float, dram_bytes: float, fabric_bytes: float, seconds: float
) -> EnergyBreakdown:
    return EnergyBreakdown(
        mac=macs * arch.energy_mac * PICO,
        dram=dram_bytes * 8 * arch.energy_dram_bit * PICO,
        fabric=fabric_bytes * 8 * arch.energy_fabric_bit * PICO,
        static=arch.static_power * seconds,
    )


class EnergyReport(BaseModel):
    breakdown: EnergyBreakdown
    seconds: float
    batch: int = 1
    avg_power: float
    energy_per_inference: float


def power_report(
    arch: ArchConfig,
    *,
    macs: float,
    dram_bytes: float,
    fabric_bytes: float,
    seconds: float,
    batch: int = 1,
) -> EnergyReport:
    """Energy and average power of a window with the given traffic."""
    breakdown = energy_breakdown(
        arch, macs=macs, dram_bytes=dram_bytes, fabric_bytes=fabric_bytes, seconds=seconds
    )
    return EnergyReport(
        breakdown=breakdown,
        seconds=seconds,
        batch=batch,
        avg_power=breakdown.total / seconds if seconds > 0 else arch.static_power,
        energy_per_inference=breakdown.total / batch,
    )


def energy_report(result: SimResult, arch: ArchConfig) -> EnergyReport:
    """Recompute a simulation's energy from its traffic counts and duration."""
    return power_report(
        arch,
        macs=sum(layer.macs for layer in result.per_layer),
        dram_bytes=sum(layer.dram_bytes for layer in result.per_layer),
        fabric_bytes=sum(layer.fabric_bytes for layer in result.per_layer),
        seconds=result.seconds,
        batch=result.batch,
    )
