"""Die-area normalization and projection to a target process."""

from __future__ import annotations

from sunrisesim.errors import ConfigError
from sunrisesim.techscale.models import (
    AreaMetrics,
    CapacityOutlook,
    ChipProjection,
    ChipSpec,
    MemoryType,
    PowerPolicy,
    ProjectionMode,
    ScalingTable,
)
from sunrisesim.techscale.scaling import compose_transitions, dram_density_ratio, load_scaling
from sunrisesim.utils import get_logger

logger = get_logger(__name__)


def normalize_per_area(spec: ChipSpec) -> AreaMetrics:
    if spec.die_area <= 0:
        raise ValueError(f"{spec.name}: die_area must be positive")
    bandwidth = None
    if spec.memory_bandwidth is not None:
        bandwidth = spec.memory_bandwidth * 1000 / spec.die_area
    return AreaMetrics(
        perf_per_area=spec.peak_tops / spec.die_area,
        bandwidth_per_area=bandwidth,
        capacity_per_area=spec.memory_capacity / spec.die_area,
        energy_efficiency=spec.peak_tops / spec.power,
    )


def project_chip(
    spec: ChipSpec,
    target_cmos: float = 7,
    target_dram: str = "1y",
    policy: PowerPolicy | None = None,
    table: ScalingTable | None = None,
) -> ChipProjection:
    """Project a chip's per-area metrics to another CMOS node and DRAM process.

    Density packs more compute and wires into each mm². Performance gains
    apply only while the projected power density stays within the policy
    cap; above it the node's power reduction is taken instead. Capacity
    follows DRAM bit density for DRAM chips and CMOS density otherwise.
    """
    policy = policy or PowerPolicy()
    table = table or load_scaling()
    factors = compose_transitions(spec.cmos_node, target_cmos, table)
    base = normalize_per_area(spec)

    power_density = spec.power / spec.die_area * factors.density * factors.performance * factors.power
    if power_density <= policy.power_density_cap:
        mode = ProjectionMode.PERFORMANCE
        perf = base.perf_per_area * factors.density * factors.performance
    else:
        mode = ProjectionMode.POWER
        perf = base.perf_per_area * factors.density

    if spec.memory_type is MemoryType.DRAM:
        if spec.dram_node is None:
            raise ConfigError(f"{spec.name}: DRAM-based chip has no dram_node")
        capacity_scale = dram_density_ratio(table, spec.dram_node, target_dram)
    else:
        capacity_scale = factors.density

    bandwidth = base.bandwidth_per_area
    metrics = AreaMetrics(
        perf_per_area=perf,
        bandwidth_per_area=None if bandwidth is None else bandwidth * factors.density,
        capacity_per_area=base.capacity_per_area * capacity_scale,
        energy_efficiency=perf / power_density,
    )
    logger.debug(
        "Chip projected",
        extra={"chip": spec.name, "to_node": target_cmos, "mode": mode.value, "power_density": power_density},
    )
    return ChipProjection(
        chip=spec.name,
        from_node=spec.cmos_node,
        to_node=target_cmos,
        target_dram=target_dram,
        factors=factors,
        mode=mode,
        power_density=power_density,
        baseline=base,
        metrics=metrics,
    )


def capacity_at_area(metrics: AreaMetrics, die_area: float) -> float:
    """MB held by a die of ``die_area`` mm² at the given capacity density."""
    return metrics.capacity_per_area * die_area


def parameter_capacity(capacity_bytes: float, bytes_per_param: float = 2) -> float:
    return capacity_bytes / bytes_per_param


def dram_equivalent_capacity(metrics: AreaMetrics, dram_sram_ratio: float = 14.0) -> float:
    """Capacity per mm² if the chip's SRAM were replaced by DRAM."""
    return metrics.capacity_per_area * dram_sram_ratio


def capacity_outlook(
    spec: ChipSpec,
    projection: ChipProjection,
    die_area: float | None = None,
    dram_sram_ratio: float = 14.0,
    bytes_per_param: float = 2.0,
) -> CapacityOutlook:
    """What a die of ``die_area`` mm² (default: the chip's own) holds after projection.

    Parameters assume ``bytes_per_param`` bytes each (2 for 16-bit weights).
    """
    area = spec.die_area if die_area is None else die_area
    if area <= 0:
        raise ValueError(f"die_area must be positive, got {area}")
    if dram_sram_ratio <= 0:
        raise ValueError(f"dram_sram_ratio must be positive, got {dram_sram_ratio}")
    megabytes = capacity_at_area(projection.metrics, area)
    dram_equivalent = None
    if spec.memory_type is MemoryType.SRAM:
        dram_equivalent = dram_equivalent_capacity(projection.metrics, dram_sram_ratio)
    return CapacityOutlook(
        die_area=area,
        capacity=megabytes,
        bytes_per_param=bytes_per_param,
        parameters=parameter_capacity(megabytes * 1e6, bytes_per_param),
        dram_equivalent_capacity_per_area=dram_equivalent,
    )
