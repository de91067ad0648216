"""Gross dies per wafer, defect-limited yield and die cost."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from sunrisesim.config import Config, resolve_preset
from sunrisesim.errors import ModelParseError, SunriseSimError, UnknownNodeError
from sunrisesim.econ.models import (
    BondingBasis,
    ChipCost,
    CostBasis,
    CostBasisFile,
    DramWaferBasis,
    YieldModel,
)
from sunrisesim.techscale.models import ChipSpec, Integration
from sunrisesim.utils import get_logger, read_yaml

logger = get_logger(__name__)

DEFAULT_COST_FILE = "cost_basis"


def load_cost_basis(path: str | Path = DEFAULT_COST_FILE, config: Config | None = None) -> CostBasisFile:
    resolved = resolve_preset(path, "data", config)
    raw = read_yaml(resolved)
    if not isinstance(raw, dict):
        raise ModelParseError(f"{resolved}: expected 'logic', 'dram' and 'bonding' sections")
    return CostBasisFile.model_validate(raw)


def dies_per_wafer(die_area: float, wafer_diameter: float = 300.0) -> int:
    """Gross die count: wafer area over die area less an edge-loss term.

    >>> dies_per_wafer(110)
    579
    """
    if die_area <= 0:
        raise ValueError("die_area must be positive")
    gross = math.pi * (wafer_diameter / 2) ** 2 / die_area - math.pi * wafer_diameter / math.sqrt(2 * die_area)
    return max(math.floor(gross), 0)


def dies_per_wafer_grid(die_area: float, wafer_diameter: float = 300.0) -> int:
    """Count whole square dies on a grid that fit inside the wafer.

    Tries the grid at four half-die offsets and keeps the best placement.
    """
    if die_area <= 0:
        raise ValueError("die_area must be positive")
    side = math.sqrt(die_area)
    radius = wafer_diameter / 2
    n = int(radius / side) + 2
    steps = np.arange(-n, n) * side
    best = 0
    for ox in (0.0, side / 2):
        for oy in (0.0, side / 2):
            xs = steps + ox
            ys = steps + oy
            far_x = np.maximum(np.abs(xs), np.abs(xs + side))
            far_y = np.maximum(np.abs(ys), np.abs(ys + side))
            fits = far_x[:, None] ** 2 + far_y[None, :] ** 2 <= radius**2
            best = max(best, int(np.count_nonzero(fits)))
    return best


def die_yield(die_area: float, defect_density: float, model: YieldModel | str = YieldModel.POISSON) -> float:
    """Fraction of defect-free dies.

    Poisson: exp(-A·D0). Murphy: ((1 - exp(-A·D0)) / (A·D0))².
    """
    if die_area < 0 or defect_density < 0:
        raise ValueError("die_area and defect_density must be non-negative")
    model = YieldModel(model)
    ad = die_area * defect_density
    if ad == 0:
        return 1.0
    if model is YieldModel.POISSON:
        return math.exp(-ad)
    return (-math.expm1(-ad) / ad) ** 2


def _good_dies(die_area: float, basis: CostBasis | DramWaferBasis) -> tuple[int, float]:
    count = dies_per_wafer(die_area, basis.wafer_diameter)
    if count == 0:
        raise SunriseSimError(
            f"A {die_area:g} mm² die does not fit on a {basis.wafer_diameter:g} mm wafer"
        )
    return count, die_yield(die_area, basis.defect_density, basis.yield_model)


def die_cost(
    spec: ChipSpec,
    basis: CostBasis,
    dram: DramWaferBasis | None = None,
    bonding: BondingBasis | None = None,
) -> float:
    """Cost of one good die in USD.

    Monolithic chips: wafer_cost / (dies_per_wafer · yield). A hybrid-bonded
    chip given a ``dram`` basis pays for both wafers and divides by the logic
    yield, the repaired DRAM yield and the bonding yield.
    """
    count, logic_yield = _good_dies(spec.die_area, basis)
    if dram is None or spec.integration is not Integration.HITOC:
        return basis.wafer_cost / (count * logic_yield)

    bonding = bonding or BondingBasis()
    dram_yield = die_yield(spec.die_area, dram.defect_density, dram.yield_model)
    effective = logic_yield * max(dram_yield, bonding.repair_floor) * bonding.bond_yield
    return (basis.wafer_cost + dram.wafer_cost) / (count * effective)


def cost_per_tops(die_cost: float, peak_tops: float) -> float:
    if peak_tops <= 0:
        raise ValueError("peak_tops must be positive")
    return die_cost / peak_tops


def logic_basis(bases: CostBasisFile, node: float) -> CostBasis:
    for basis in bases.logic:
        if basis.node == node:
            return basis
    known = ", ".join(f"{b.node:g}nm" for b in bases.logic)
    raise UnknownNodeError(f"No cost basis for {node:g}nm. Known: {known}")


def dram_basis(bases: CostBasisFile, process: str) -> DramWaferBasis:
    for basis in bases.dram:
        if basis.process.lower() == process.lower():
            return basis
    known = ", ".join(b.process for b in bases.dram)
    raise UnknownNodeError(f"No DRAM wafer basis for '{process}'. Known: {known}")


def nre(node: float, bases: CostBasisFile | None = None) -> float:
    """Non-recurring engineering cost of a tape-out at ``node``."""
    return logic_basis(bases or load_cost_basis(), node).nre


def chip_cost(spec: ChipSpec, bases: CostBasisFile | None = None) -> ChipCost:
    """Die cost, yield and cost per TOPS for a chip from the cost-basis file."""
    bases = bases or load_cost_basis()
    basis = logic_basis(bases, spec.cmos_node)
    dram = None
    if spec.integration is Integration.HITOC and spec.dram_node is not None:
        dram = dram_basis(bases, spec.dram_node)

    cost = die_cost(spec, basis, dram, bases.bonding)
    row = ChipCost(
        chip=spec.name,
        node=spec.cmos_node,
        nre=basis.nre,
        die_area=spec.die_area,
        dies_per_wafer=dies_per_wafer(spec.die_area, basis.wafer_diameter),
        die_yield=die_yield(spec.die_area, basis.defect_density, basis.yield_model),
        die_cost=cost,
        cost_per_tops=cost_per_tops(cost, spec.peak_tops),
        two_wafer=dram is not None,
    )
    logger.debug("Chip costed", extra={"chip": spec.name, "die_cost": cost, "two_wafer": row.two_wafer})
    return row
