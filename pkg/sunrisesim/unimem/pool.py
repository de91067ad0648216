"""Bandwidth and capacity of interleaved DRAM array pools."""

from __future__ import annotations

import math
from fractions import Fraction

from sunrisesim.unimem.models import DramArrayPool


def sustained_bandwidth(pool: DramArrayPool) -> float:
    """Bytes per cycle under perfect round-robin interleaving, capped by the link."""
    raw = pool.array_count * pool.word_bytes / pool.array_latency
    return min(raw * pool.refresh_derating, pool.bus_limit)


def arrays_to_saturate(demand: float, array_latency: int, word_bytes: int) -> int:
    """Smallest array count whose interleaved rate meets ``demand`` bytes/cycle."""
    if demand < 0:
        raise ValueError(f"demand must be non-negative, got {demand}")
    return math.ceil(Fraction(demand) * array_latency / word_bytes)


def pool_capacity(pool: DramArrayPool) -> int:
    return pool.array_count * pool.array_capacity


def round_robin_bandwidth(pool: DramArrayPool, periods: int = 6) -> Fraction:
    """Cycle-by-cycle simulation of a round-robin pool; exact bytes/cycle.

    Array ``i`` issues its first access at cycle ``i % latency`` and one access
    every ``latency`` cycles afterwards, each returning ``word_bytes``. Returned
    words queue for the link, which drains at most ``bus_limit`` bytes a cycle.
    The rate is measured over the final ``latency``-cycle window, after the
    queue has had ``periods - 1`` windows to settle. Refresh is not modeled.
    """
    if periods < 2:
        raise ValueError("periods must be at least 2")
    latency = pool.array_latency
    bus = Fraction(pool.bus_limit)
    next_ready = [i % latency + latency for i in range(pool.array_count)]
    queued = Fraction(0)
    drained_in_window = Fraction(0)
    window_start = (periods - 1) * latency

    for cycle in range(periods * latency):
        for i, ready in enumerate(next_ready):
            if ready == cycle:
                queued += pool.word_bytes
                next_ready[i] = ready + latency
        sent = min(queued, bus)
        queued -= sent
        if cycle >= window_start:
            drained_in_window += sent

    return drained_in_window / latency
