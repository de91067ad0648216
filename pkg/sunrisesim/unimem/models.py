"""Pooled DRAM array description."""

from __future__ import annotations

from pydantic import BaseModel, Field


class DramArrayPool(BaseModel):
    """A group of localized DRAM arrays serving one unit through a shared link.

    Latencies are in core clock cycles; ``bus_limit`` is the wafer-to-wafer
    link ceiling in bytes per cycle.
    """
    model_config = {"frozen": True}

    array_count: int = Field(ge=1)
    array_latency: int = Field(default=64, ge=1)
    word_bytes: int = Field(ge=1)
    array_capacity: int = Field(default=0, ge=0)
    bus_limit: float = Field(gt=0)
    refresh_derating: float = Field(default=1.0, gt=0, le=1)
