"""Chip database, die-area normalization and process-node projection."""

from sunrisesim.techscale.chipdb import chip_db, find_chip, load_chips
from sunrisesim.techscale.export import projections_to_csv, projections_to_json
from sunrisesim.techscale.models import (
    AreaMetrics,
    CapacityOutlook,
    ChipProjection,
    ChipSpec,
    DramProcess,
    Integration,
    MemoryType,
    NodeTransition,
    PowerPolicy,
    ProjectionMode,
    ScaleFactors,
    ScalingTable,
)
from sunrisesim.techscale.projection import (
    capacity_at_area,
    capacity_outlook,
    dram_equivalent_capacity,
    normalize_per_area,
    parameter_capacity,
    project_chip,
)
from sunrisesim.techscale.scaling import (
    compose_transitions,
    dram_density_ratio,
    dram_process,
    load_scaling,
    transition_path,
)

__all__ = [
    "AreaMetrics",
    "CapacityOutlook",
    "ChipProjection",
    "ChipSpec",
    "DramProcess",
    "Integration",
    "MemoryType",
    "NodeTransition",
    "PowerPolicy",
    "ProjectionMode",
    "ScaleFactors",
    "ScalingTable",
    "capacity_at_area",
    "capacity_outlook",
    "chip_db",
    "compose_transitions",
    "dram_density_ratio",
    "dram_equivalent_capacity",
    "dram_process",
    "find_chip",
    "load_chips",
    "load_scaling",
    "normalize_per_area",
    "parameter_capacity",
    "project_chip",
    "projections_to_csv",
    "projections_to_json",
    "transition_path",
]
