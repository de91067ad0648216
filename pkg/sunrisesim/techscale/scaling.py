"""Process-node transition tables and their composition."""

from __future__ import annotations

from collections import deque
from pathlib import Path

from sunrisesim.config import Config, resolve_preset
from sunrisesim.errors import ModelParseError, NoTransitionPathError, UnknownNodeError
from sunrisesim.techscale.models import DramProcess, NodeTransition, ScaleFactors, ScalingTable
from sunrisesim.utils import get_logger, read_yaml

logger = get_logger(__name__)

DEFAULT_SCALING_FILE = "scaling"

Edge = tuple[float, ScaleFactors]


def load_scaling(path: str | Path = DEFAULT_SCALING_FILE, config: Config | None = None) -> ScalingTable:
    resolved = resolve_preset(path, "data", config)
    raw = read_yaml(resolved)
    if not isinstance(raw, dict):
        raise ModelParseError(f"{resolved}: expected 'cmos_transitions' and 'dram_processes'")
    return ScalingTable.model_validate(raw)


def transition_factors(t: NodeTransition) -> ScaleFactors:
    return ScaleFactors(
        density=t.density_ratio,
        performance=1 + t.perf_improvement,
        power=1 - t.power_reduction,
    )


def _graph(transitions: list[NodeTransition]) -> dict[float, list[Edge]]:
    """Adjacency with every node's forward edges ahead of its reversed ones."""
    graph: dict[float, list[Edge]] = {}
    for t in transitions:
        graph.setdefault(t.from_node, []).append((t.to_node, transition_factors(t)))
    for t in transitions:
        f = transition_factors(t)
        inverse = ScaleFactors(density=1 / f.density, performance=1 / f.performance, power=1 / f.power)
        graph.setdefault(t.to_node, []).append((t.from_node, inverse))
    return graph


def transition_path(from_node: float, to_node: float, transitions: list[NodeTransition]) -> list[Edge]:
    """Shortest edge sequence from ``from_node`` to ``to_node``; forward edges win ties."""
    if from_node == to_node:
        return []
    graph = _graph(transitions)
    available = sorted(graph, reverse=True)
    if from_node not in graph or to_node not in graph:
        raise NoTransitionPathError(from_node, to_node, available)

    previous: dict[float, tuple[float, ScaleFactors]] = {}
    queue = deque([from_node])
    seen = {from_node}
    while queue:
        node = queue.popleft()
        if node == to_node:
            break
        for nxt, factors in graph[node]:
            if nxt not in seen:
                seen.add(nxt)
                previous[nxt] = (node, factors)
                queue.append(nxt)

    if to_node not in previous:
        raise NoTransitionPathError(from_node, to_node, available)

    path: list[Edge] = []
    node = to_node
    while node != from_node:
        parent, factors = previous[node]
        path.append((node, factors))
        node = parent
    path.reverse()
    return path


def compose_transitions(
    from_node: float, to_node: float, transitions: list[NodeTransition] | ScalingTable
) -> ScaleFactors:
    """Multiply density, performance and residual power along the transition path.

    >>> table = load_scaling()
    >>> round(compose_transitions(40, 7, table).density, 2)
    13.2
    """
    rows = transitions.cmos_transitions if isinstance(transitions, ScalingTable) else transitions
    factors = ScaleFactors()
    for _, step in transition_path(from_node, to_node, rows):
        factors = factors.then(step)
    return factors


def dram_process(table: ScalingTable, name: str) -> DramProcess:
    for process in table.dram_processes:
        if process.name.lower() == name.lower():
            return process
    known = ", ".join(p.name for p in table.dram_processes)
    raise UnknownNodeError(f"Unknown DRAM process '{name}'. Known: {known}")


def dram_density_ratio(table: ScalingTable, from_name: str, to_name: str) -> float:
    return dram_process(table, to_name).density / dram_process(table, from_name).density
