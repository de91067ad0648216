"""Cost-basis records and cost results."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field, field_validator


class YieldModel(str, Enum):
    POISSON = "Poisson"
    MURPHY = "Murphy"


class CostBasis(BaseModel):
    """Wafer economics of one logic process node."""
    model_config = {"frozen": True}

    node: float = Field(gt=0, description="nm")
    nre: float = Field(gt=0, description="USD")
    wafer_cost: float = Field(ge=0, description="USD")
    wafer_diameter: float = Field(default=300.0, gt=0, description="mm")
    defect_density: float = Field(ge=0, description="defects/mm²")
    yield_model: YieldModel = YieldModel.POISSON


class DramWaferBasis(BaseModel):
    """Wafer economics of one DRAM process, used for the stacked memory wafer."""
    model_config = {"frozen": True}

    process: str
    wafer_cost: float = Field(ge=0, description="USD")
    wafer_diameter: float = Field(default=300.0, gt=0, description="mm")
    defect_density: float = Field(ge=0, description="defects/mm²")
    yield_model: YieldModel = YieldModel.POISSON


class BondingBasis(BaseModel):
    model_config = {"frozen": True}

    bond_yield: float = Field(default=0.95, gt=0, le=1)
    # DRAM repair lifts the memory wafer's effective yield to at least this.
    repair_floor: float = Field(default=0.98, ge=0, le=1)


class CostBasisFile(BaseModel):
    """Contents of the cost-basis data file."""
    logic: list[CostBasis]
    dram: list[DramWaferBasis] = Field(default_factory=list)
    bonding: BondingBasis = Field(default_factory=BondingBasis)

    @field_validator("logic")
    @classmethod
    def unique_nodes(cls, value: list[CostBasis]) -> list[CostBasis]:
        nodes = [b.node for b in value]
        if len(set(nodes)) != len(nodes):
            raise ValueError("duplicate logic nodes")
        return value


class ChipCost(BaseModel):
    """One chip's row of the cost comparison."""
    chip: str
    node: float
    nre: float
    die_area: float
    dies_per_wafer: int
    die_yield: float
    die_cost: float
    cost_per_tops: float
    two_wafer: bool = False
