"""Event-driven execution of a model under a central control engine."""

from __future__ import annotations

from collections.abc import Generator
from typing import Any

import simpy

from sunrisesim.archsim.config import ArchConfig
from sunrisesim.archsim.models import Bottleneck, LayerSim, SimResult
from sunrisesim.archsim.scheduler import (
    LayerWork,
    assemble_result,
    build_layer_sim,
    check_inputs,
    layer_work,
    phase_cycles,
)
from sunrisesim.utils import get_logger
from sunrisesim.workload import ModelSpec

logger = get_logger(__name__)

ProcessGen = Generator[simpy.Event, Any, None]


class WeightLoader:
    """Streams each layer's weights into the VPUs' spare weight buffer.

    Layer k may load once layer k-1 has started its phases (freeing the
    buffer it was filled into) and layer k-1's own load has finished.
    """

    def __init__(self, env: simpy.Environment, durations: list[float], started: list[simpy.Event]):
        self.env = env
        self.durations = durations
        self.started = started
        self.loaded = [env.event() for _ in durations]
        self.load_end = [0.0] * len(durations)
        self.action = env.process(self.run())

    def run(self) -> ProcessGen:
        for k, duration in enumerate(self.durations):
            yield self.started[max(k - 1, 0)]
            yield self.env.timeout(duration)
            self.load_end[k] = self.env.now
            self.loaded[k].succeed()


class ControlEngine:
    """Runs layers in order: pipeline fill, then all phases concurrently."""

    def __init__(
        self,
        env: simpy.Environment,
        arch: ArchConfig,
        phases: list[dict[Bottleneck, float]],
    ):
        self.env = env
        self.fill = arch.fill_cycles
        self.phases = phases
        self.started = [env.event() for _ in phases]
        self.loader = WeightLoader(env, [p[Bottleneck.DRAM_WEIGHTS] for p in phases], self.started)
        # (layer start, phase start, layer end) per layer
        self.timeline: list[tuple[float, float, float]] = []
        self.action = env.process(self.run())

    def run(self) -> ProcessGen:
        for k, phases in enumerate(self.phases):
            layer_start = self.env.now
            yield self.env.timeout(self.fill)
            phase_start = self.env.now
            self.started[k].succeed()
            running = [
                self.env.timeout(cycles)
                for kind, cycles in phases.items()
                if kind is not Bottleneck.DRAM_WEIGHTS
            ]
            yield self.env.all_of([*running, self.loader.loaded[k]])
            self.timeline.append((layer_start, phase_start, self.env.now))


def simulate_model(model: ModelSpec, arch: ArchConfig, batch: int = 1) -> SimResult:
    """Simulate ``model`` on ``arch`` for one batch. Deterministic."""
    check_inputs(model, batch)
    works: list[LayerWork] = [layer_work(layer, arch) for layer in model.layers]
    phases = [
        phase_cycles(
            work,
            arch,
            batch=batch,
            ingress_bytes=model.payload_bytes if arch.include_ingress and k == 0 else 0,
        )
        for k, work in enumerate(works)
    ]

    env = simpy.Environment()
    uce = ControlEngine(env, arch, phases)
    env.run()

    layers: list[LayerSim] = []
    for k, (work, (layer_start, phase_start, layer_end)) in enumerate(zip(works, uce.timeline, strict=True)):
        visible = max(0.0, uce.loader.load_end[k] - phase_start)
        sim = build_layer_sim(
            work, arch, phases[k], batch=batch,
            visible_weight_cycles=visible, total_cycles=layer_end - layer_start,
        )
        logger.debug(
            "Layer scheduled",
            extra={"layer": sim.layer, "cycles": sim.total_cycles, "bottleneck": sim.bottleneck.value},
        )
        layers.append(sim)

    result = assemble_result(model, arch, batch, layers, env.now)
    logger.info(
        "Simulation finished",
        extra={
            "model": model.name,
            "arch": arch.name,
            "batch": batch,
            "total_cycles": result.total_cycles,
            "throughput": result.throughput,
        },
    )
    return result
