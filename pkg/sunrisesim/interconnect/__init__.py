"""Analytical models of Interposer, TSV and HITOC data paths."""

from sunrisesim.interconnect.loader import load_technologies
from sunrisesim.interconnect.models import (
    Bandwidth,
    ConnectionBudget,
    Dimensionality,
    IntegrationTech,
    TechKind,
    TechTable,
)
from sunrisesim.interconnect.paths import (
    TechComparison,
    aggregate_bandwidth,
    compare_techs,
    transfer_energy,
    wire_density,
)

__all__ = [
    "Bandwidth",
    "ConnectionBudget",
    "Dimensionality",
    "IntegrationTech",
    "TechComparison",
    "TechKind",
    "TechTable",
    "aggregate_bandwidth",
    "compare_techs",
    "load_technologies",
    "transfer_energy",
    "wire_density",
]
