"""Wafer cost model: NRE, dies per wafer, yield, die cost and cost per TOPS."""

from sunrisesim.econ.cost import (
    chip_cost,
    cost_per_tops,
    die_cost,
    die_yield,
    dies_per_wafer,
    dies_per_wafer_grid,
    dram_basis,
    load_cost_basis,
    logic_basis,
    nre,
)
from sunrisesim.econ.models import (
    BondingBasis,
    ChipCost,
    CostBasis,
    CostBasisFile,
    DramWaferBasis,
    YieldModel,
)

__all__ = [
    "BondingBasis",
    "ChipCost",
    "CostBasis",
    "CostBasisFile",
    "DramWaferBasis",
    "YieldModel",
    "chip_cost",
    "cost_per_tops",
    "die_cost",
    "die_yield",
    "dies_per_wafer",
    "dies_per_wafer_grid",
    "dram_basis",
    "load_cost_basis",
    "logic_basis",
    "nre",
]
