"""Wire density, aggregate bandwidth and transfer energy of integration data paths."""

from __future__ import annotations

import math

from pydantic import BaseModel

from sunrisesim.interconnect.models import (
    Bandwidth,
    ConnectionBudget,
    Dimensionality,
    IntegrationTech,
)


def wire_density(tech: IntegrationTech) -> float:
    """Wires per mm² (Area2D) or per mm of die edge (Edge1D)."""
    if tech.dimensionality is Dimensionality.EDGE_1D:
        return float(math.floor(1000 / tech.pitch_x))
    assert tech.pitch_y is not None
    return (1000 / tech.pitch_x) * (1000 / tech.pitch_y)


def aggregate_bandwidth(tech: IntegrationTech, budget: ConnectionBudget) -> Bandwidth:
    """Total bits/s across every wire the budget pays for.

    Edge1D techs read the budget as millimeters of usable edge.
    """
    if tech.dimensionality is Dimensionality.EDGE_1D:
        wires = wire_density(tech) * budget.usable_edge
    else:
        wires = wire_density(tech) * budget.usable_area
    bits = wires * budget.io_frequency * 1e9 * budget.bits_per_wire_per_cycle
    return Bandwidth(bits_per_second=bits, wire_count=wires)


def transfer_energy(tech: IntegrationTech, bits: float) -> float:
    """Energy in picojoules to move ``bits`` across the data path."""
    if bits < 0:
        raise ValueError(f"bits must be non-negative, got {bits}")
    return bits * tech.energy_per_bit


class TechComparison(BaseModel):
    """One row of a side-by-side technology comparison."""
    kind: str
    dimensionality: str
    wire_density: float
    wire_count: float
    bandwidth_tbps: float
    energy_pj: float


def compare_techs(
    techs: list[IntegrationTech], budget: ConnectionBudget, bits: float = 1e12
) -> list[TechComparison]:
    """Density, bandwidth and transfer energy for each tech, in input order."""
    rows = []
    for tech in techs:
        bw = aggregate_bandwidth(tech, budget)
        rows.append(TechComparison(
            kind=tech.kind.value,
            dimensionality=tech.dimensionality.value,
            wire_density=wire_density(tech),
            wire_count=bw.wire_count,
            bandwidth_tbps=bw.terabytes_per_second,
            energy_pj=transfer_energy(tech, bits),
        ))
    return rows
