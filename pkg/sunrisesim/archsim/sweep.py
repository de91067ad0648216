"""Parameter sweeps over architecture fields."""

from __future__ import annotations

import asyncio
import itertools
from typing import Any

from pydantic import BaseModel

from sunrisesim.archsim.config import ArchConfig
from sunrisesim.archsim.engine import simulate_model
from sunrisesim.archsim.models import SimResult
from sunrisesim.errors import ConfigError
from sunrisesim.utils import get_logger, log_context
from sunrisesim.workload import ModelSpec

logger = get_logger(__name__)


class SweepPoint(BaseModel):
    params: dict[str, Any]
    result: SimResult


def with_overrides(arch: ArchConfig, overrides: dict[str, Any]) -> ArchConfig:
    """Copy of ``arch`` with dotted field paths (``vpu_pool.array_count``) replaced."""
    data = arch.model_dump()
    for path, value in overrides.items():
        target = data
        *parents, leaf = path.split(".")
        for part in parents:
            if not isinstance(target.get(part), dict):
                raise ConfigError(f"'{path}' is not an ArchConfig field")
            target = target[part]
        if leaf not in target:
            raise ConfigError(f"'{path}' is not an ArchConfig field")
        target[leaf] = value
    return ArchConfig.model_validate(data)


def sweep_points(vary: dict[str, list[Any]]) -> list[dict[str, Any]]:
    """Cartesian product of the vary lists; the last field varies fastest."""
    names = list(vary)
    return [dict(zip(names, combo, strict=True)) for combo in itertools.product(*vary.values())]


async def sweep(
    arch: ArchConfig,
    model: ModelSpec,
    vary: dict[str, list[Any]],
    *,
    batch: int = 1,
    max_concurrency: int = 4,
) -> list[SweepPoint]:
    """Simulate every point concurrently; rows come back in declaration order."""
    points = sweep_points(vary)
    configs = [with_overrides(arch, params) for params in points]
    limit = asyncio.Semaphore(max_concurrency)

    async def run(index: int, params: dict[str, Any], point_arch: ArchConfig) -> SweepPoint:
        with log_context(sweep_point=index):
            async with limit:
                result = await asyncio.to_thread(simulate_model, model, point_arch, batch)
            logger.info("Sweep point finished", extra={"params": params, "throughput": result.throughput})
        return SweepPoint(params=params, result=result)

    runs = (run(i, p, c) for i, (p, c) in enumerate(zip(points, configs, strict=True)))
    return list(await asyncio.gather(*runs))


def run_sweep(
    arch: ArchConfig,
    model: ModelSpec,
    vary: dict[str, list[Any]],
    *,
    batch: int = 1,
    max_concurrency: int = 4,
) -> list[SweepPoint]:
    return asyncio.run(sweep(arch, model, vary, batch=batch, max_concurrency=max_concurrency))
