"""Roofline classification, an independent cross-check of the phase model.

Each data channel has its own roof: a layer is bound by a channel when its
arithmetic intensity (MAC slots per byte on that channel) falls below the
machine balance (MAC units per byte/cycle the channel delivers). Compute
time is not rounded up to whole cycles here. Whenever one phase of
:func:`schedule_layer` is at least twice every other, both agree.
"""

from __future__ import annotations

import math

from pydantic import BaseModel

from sunrisesim.archsim.config import ArchConfig
from sunrisesim.archsim.models import Bottleneck
from sunrisesim.archsim.scheduler import layer_work
from sunrisesim.workload import LayerSpec


class ChannelRoof(BaseModel):
    channel: Bottleneck
    bytes: float
    intensity: float
    balance: float

    @property
    def memory_bound(self) -> bool:
        return self.intensity < self.balance


class RooflineResult(BaseModel):
    layer: str
    bound: Bottleneck
    compute_cycles: float
    attainable_fraction: float
    channels: list[ChannelRoof]


def roofline_check(
    layer: LayerSpec, arch: ArchConfig, *, batch: int = 1, ingress_bytes: int = 0
) -> RooflineResult:
    work = layer_work(layer, arch)
    slots = batch * work.vpu_slots
    writeback_rate = 1 / (1 / arch.fabric_bytes_per_cycle + 1 / arch.writeback_bytes_per_cycle)
    traffic = [
        (Bottleneck.BROADCAST, batch * work.input_bytes, arch.fabric_bytes_per_cycle),
        (Bottleneck.DRAM_WEIGHTS, work.vpu_weight_bytes, arch.weight_bytes_per_cycle),
        (Bottleneck.DRAM_WRITEBACK, batch * work.output_bytes, writeback_rate),
        (Bottleneck.INGRESS, batch * ingress_bytes, arch.host_bytes_per_cycle),
    ]

    channels: list[ChannelRoof] = []
    bound = Bottleneck.COMPUTE
    worst = 1.0
    for channel, nbytes, rate in traffic:
        intensity = slots / nbytes if nbytes else math.inf
        roof = ChannelRoof(channel=channel, bytes=nbytes, intensity=intensity, balance=arch.macs_per_vpu / rate)
        channels.append(roof)
        # ratio < 1 means the channel is slower than compute
        ratio = roof.intensity / roof.balance
        if ratio < worst:
            bound, worst = channel, ratio

    return RooflineResult(
        layer=layer.name,
        bound=bound,
        compute_cycles=slots / arch.macs_per_vpu,
        attainable_fraction=worst,
        channels=channels,
    )
