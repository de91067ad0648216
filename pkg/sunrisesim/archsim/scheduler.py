"""Closed-form phase model of weight-stationary layer execution.

A layer runs as concurrent phases after a pipeline fill:

- compute: the busiest VPU's MAC slots over its MAC units;
- broadcast: input features pushed once over the DSU->VPU fabric;
- weights: the busiest VPU streaming its weights from its own pool;
- writeback: outputs crossing the fabric and landing in the DSU pools;
- ingress: the host payload (first layer, only when enabled).

Output channels are dealt round-robin to VPUs, so the busiest VPU holds
ceil(out_c / vpu_count) of them. Weights load once per batch; everything
else scales with the batch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from sunrisesim.archsim.config import ArchConfig
from sunrisesim.archsim.energy import energy_breakdown
from sunrisesim.archsim.models import Bottleneck, EnergyBreakdown, LayerSim, SimResult
from sunrisesim.errors import ConfigError, ModelValidationError, SunriseSimError
from sunrisesim.workload import (
    LayerKind,
    LayerSpec,
    ModelSpec,
    layer_feature_bytes,
    layer_macs,
    layer_vector_ops,
    layer_weight_bytes,
)


@dataclass(frozen=True)
class LayerWork:
    """Static per-inference quantities of one layer on one machine."""
    layer: LayerSpec
    active_vpus: int
    vpu_slots: float
    vpu_weight_bytes: int
    macs: int
    vector_ops: int
    weight_bytes: int
    input_bytes: int
    output_bytes: int


def layer_work(layer: LayerSpec, arch: ArchConfig) -> LayerWork:
    assigned = math.ceil(layer.out_c / arch.vpu_count)
    vw = arch.vector_width
    reduction = math.ceil(layer.in_c / vw) * vw

    if layer.kind is LayerKind.CONV2D:
        per_channel = layer.out_h * layer.out_w * layer.kernel_h * layer.kernel_w * reduction
        slots = assigned * per_channel * layer.density
        vpu_weights = layer.kernel_h * layer.kernel_w * layer.in_c * layer.bytes_per_weight * assigned
    elif layer.kind is LayerKind.FULLY_CONNECTED:
        slots = assigned * reduction * layer.density
        vpu_weights = layer.in_c * layer.bytes_per_weight * assigned
    elif layer.kind is LayerKind.POOL:
        slots = assigned * layer.out_h * layer.out_w * layer.kernel_h * layer.kernel_w
        vpu_weights = 0
    else:
        slots = assigned * layer.out_h * layer.out_w
        vpu_weights = 0

    inputs, outputs = layer_feature_bytes(layer)
    return LayerWork(
        layer=layer,
        active_vpus=min(layer.out_c, arch.vpu_count),
        vpu_slots=slots,
        vpu_weight_bytes=vpu_weights,
        macs=layer_macs(layer),
        vector_ops=layer_vector_ops(layer),
        weight_bytes=layer_weight_bytes(layer),
        input_bytes=inputs,
        output_bytes=outputs,
    )


def phase_cycles(
    work: LayerWork, arch: ArchConfig, *, batch: int = 1, ingress_bytes: int = 0
) -> dict[Bottleneck, float]:
    """Standalone cycles of every phase, weights loaded in full."""
    outputs = batch * work.output_bytes
    return {
        Bottleneck.COMPUTE: float(math.ceil(batch * work.vpu_slots / arch.macs_per_vpu)),
        Bottleneck.BROADCAST: batch * work.input_bytes / arch.fabric_bytes_per_cycle,
        Bottleneck.DRAM_WEIGHTS: work.vpu_weight_bytes / arch.weight_bytes_per_cycle,
        Bottleneck.DRAM_WRITEBACK: (
            outputs / arch.fabric_bytes_per_cycle + outputs / arch.writeback_bytes_per_cycle
        ),
        Bottleneck.INGRESS: batch * ingress_bytes / arch.host_bytes_per_cycle,
    }


def classify(phases: dict[Bottleneck, float]) -> Bottleneck:
    """Longest phase; ties go to the earlier member of :class:`Bottleneck`."""
    best = Bottleneck.COMPUTE
    for kind in Bottleneck:
        if phases[kind] > phases[best]:
            best = kind
    return best


def build_layer_sim(
    work: LayerWork,
    arch: ArchConfig,
    phases: dict[Bottleneck, float],
    *,
    batch: int,
    visible_weight_cycles: float,
    total_cycles: float,
) -> LayerSim:
    visible = {**phases, Bottleneck.DRAM_WEIGHTS: visible_weight_cycles}
    capacity = arch.total_macs * total_cycles
    useful = batch * (work.macs or work.vector_ops)
    fabric = batch * (work.input_bytes + work.output_bytes)
    dram = work.weight_bytes + fabric
    return LayerSim(
        layer=work.layer.name,
        kind=work.layer.kind.value,
        compute_cycles=int(phases[Bottleneck.COMPUTE]),
        broadcast_cycles=phases[Bottleneck.BROADCAST],
        weight_load_cycles=visible_weight_cycles,
        weight_stream_cycles=phases[Bottleneck.DRAM_WEIGHTS],
        writeback_cycles=phases[Bottleneck.DRAM_WRITEBACK],
        ingress_cycles=phases[Bottleneck.INGRESS],
        pipeline_fill=arch.fill_cycles,
        total_cycles=total_cycles,
        bottleneck=classify(visible),
        vpu_utilization=min(1.0, useful / capacity) if capacity > 0 else 0.0,
        active_vpus=work.active_vpus,
        macs=batch * work.macs,
        vector_ops=batch * work.vector_ops,
        dram_bytes=dram,
        fabric_bytes=fabric,
        energy=energy_breakdown(
            arch,
            macs=batch * work.macs,
            dram_bytes=dram,
            fabric_bytes=fabric,
            seconds=total_cycles / arch.clock_hz,
        ),
    )


def schedule_layer(
    layer: LayerSpec,
    arch: ArchConfig,
    *,
    batch: int = 1,
    hidden_weight_cycles: float = 0.0,
    ingress_bytes: int = 0,
) -> LayerSim:
    """Schedule one layer on its own.

    ``hidden_weight_cycles`` is weight loading already done under a previous
    layer; only the remainder counts toward the layer.
    """
    if batch < 1:
        raise ConfigError(f"batch must be at least 1, got {batch}")
    work = layer_work(layer, arch)
    phases = phase_cycles(work, arch, batch=batch, ingress_bytes=ingress_bytes)
    visible = max(0.0, phases[Bottleneck.DRAM_WEIGHTS] - hidden_weight_cycles)
    longest = max({**phases, Bottleneck.DRAM_WEIGHTS: visible}.values())
    return build_layer_sim(
        work, arch, phases, batch=batch, visible_weight_cycles=visible,
        total_cycles=arch.fill_cycles + longest,
    )


def check_inputs(model: ModelSpec, batch: int) -> None:
    if not model.layers:
        raise ModelValidationError(f"model '{model.name}' has no layers")
    if batch < 1:
        raise ConfigError(f"batch must be at least 1, got {batch}")


def assemble_result(
    model: ModelSpec, arch: ArchConfig, batch: int, layers: list[LayerSim], total_cycles: float
) -> SimResult:
    seconds = total_cycles / arch.clock_hz
    energy = sum((layer.energy for layer in layers), EnergyBreakdown())
    macs = sum(layer.macs for layer in layers)
    effective_tops = 2 * macs / seconds / 1e12
    if effective_tops > arch.peak_tops * (1 + 1e-9):
        raise SunriseSimError(
            f"effective {effective_tops:.4g} TOPS exceeds peak {arch.peak_tops:.4g} TOPS"
        )
    return SimResult(
        model=model.name,
        arch=arch.name,
        batch=batch,
        clock_ghz=arch.clock_ghz,
        per_layer=layers,
        total_cycles=total_cycles,
        throughput=arch.clock_hz / total_cycles * batch,
        effective_tops=effective_tops,
        peak_tops=arch.peak_tops,
        avg_power=energy.total / seconds,
        energy_per_inference=energy.total / batch,
        ingress_bound_throughput=arch.host_ingress / model.payload_bytes,
        energy=energy,
    )


def closed_form_model(model: ModelSpec, arch: ArchConfig, batch: int = 1) -> SimResult:
    """Evaluate the prefetching layer timeline arithmetically.

    Layer k's weights start loading once layer k-1's phases have begun and
    layer k-1's own load has finished.
    """
    check_inputs(model, batch)
    fill = arch.fill_cycles
    now = 0.0
    prev_phase_start = 0.0
    prev_load_end = 0.0
    layers: list[LayerSim] = []

    for index, layer in enumerate(model.layers):
        work = layer_work(layer, arch)
        ingress = model.payload_bytes if arch.include_ingress and index == 0 else 0
        phases = phase_cycles(work, arch, batch=batch, ingress_bytes=ingress)

        phase_start = now + fill
        load_start = phase_start if index == 0 else max(prev_phase_start, prev_load_end)
        load_end = load_start + phases[Bottleneck.DRAM_WEIGHTS]
        visible = max(0.0, load_end - phase_start)
        end = phase_start + max({**phases, Bottleneck.DRAM_WEIGHTS: visible}.values())

        layers.append(build_layer_sim(
            work, arch, phases, batch=batch, visible_weight_cycles=visible, total_cycles=end - now,
        ))
        prev_phase_start, prev_load_end, now = phase_start, load_end, end

    return assemble_result(model, arch, batch, layers, now)
