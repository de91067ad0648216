"""UNIMEM: DRAM-only memory whose pooled arrays hide single-array latency."""

from sunrisesim.unimem.models import DramArrayPool
from sunrisesim.unimem.pool import (
    arrays_to_saturate,
    pool_capacity,
    round_robin_bandwidth,
    sustained_bandwidth,
)

__all__ = [
    "DramArrayPool",
    "arrays_to_saturate",
    "pool_capacity",
    "round_robin_bandwidth",
    "sustained_bandwidth",
]
