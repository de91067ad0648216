"""Recompute every published table cell and pair it with the printed value."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path

from sunrisesim.config import Config, resolve_preset
from sunrisesim.econ import CostBasisFile, chip_cost, load_cost_basis
from sunrisesim.errors import ModelParseError, UnknownTableError
from sunrisesim.interconnect import TechTable, aggregate_bandwidth, load_technologies, wire_density
from sunrisesim.report.models import (
    TABLE_IDS,
    CellStatus,
    PublishedTable,
    PublishedTables,
    ReconciledCell,
    Reconciliation,
    deviation_percent,
    is_reproduced,
)
from sunrisesim.techscale import (
    ChipSpec,
    PowerPolicy,
    ScalingTable,
    chip_db,
    find_chip,
    load_scaling,
    normalize_per_area,
    project_chip,
)
from sunrisesim.utils import get_logger, log_context, read_yaml

logger = get_logger(__name__)

DEFAULT_TABLES_FILE = "published_tables"
NO_DATA_REASON = "no data published"

# (row key, column key) -> computed value; None means the quantity is unknown.
Computed = dict[tuple[str, str], float | None]


def load_published_tables(
    path: str | Path = DEFAULT_TABLES_FILE, config: Config | None = None
) -> PublishedTables:
    resolved = resolve_preset(path, "data", config)
    raw = read_yaml(resolved)
    if not isinstance(raw, dict):
        raise ModelParseError(f"{resolved}: expected a mapping with a 'tables' list")
    return PublishedTables.model_validate(raw)


@dataclass
class ReportInputs:
    """Everything the table computations read, loaded once."""
    techs: TechTable
    chips: list[ChipSpec]
    scaling: ScalingTable
    costs: CostBasisFile
    policy: PowerPolicy = field(default_factory=PowerPolicy)
    target_cmos: float = 7.0
    target_dram: str = "1y"

    @classmethod
    def load(cls, config: Config | None = None) -> ReportInputs:
        cfg = config or Config()
        return cls(
            techs=load_technologies(config=cfg),
            chips=chip_db(config=cfg),
            scaling=load_scaling(config=cfg),
            costs=load_cost_basis(config=cfg),
            policy=PowerPolicy(power_density_cap=cfg.projection.power_density_cap),
            target_cmos=cfg.projection.target_cmos,
            target_dram=cfg.projection.target_dram,
        )


def _interconnect(table: PublishedTable, inputs: ReportInputs) -> Computed:
    out: Computed = {}
    for column in table.columns:
        tech = inputs.techs.get(column.key)
        bw = aggregate_bandwidth(tech, inputs.techs.budget)
        out[("pitch", column.key)] = tech.pitch_x
        out[("density", column.key)] = wire_density(tech)
        out[("bandwidth", column.key)] = bw.terabytes_per_second
    return out


def _chip_specs(table: PublishedTable, inputs: ReportInputs) -> Computed:
    out: Computed = {}
    for column in table.columns:
        chip = find_chip(inputs.chips, column.key)
        for row in table.rows:
            out[(row.key, column.key)] = getattr(chip, row.key)
    return out


def _normalized(table: PublishedTable, inputs: ReportInputs) -> Computed:
    out: Computed = {}
    for row in table.rows:
        metrics = normalize_per_area(find_chip(inputs.chips, row.key))
        for column in table.columns:
            out[(row.key, column.key)] = getattr(metrics, column.key)
    return out


def _costs(table: PublishedTable, inputs: ReportInputs) -> Computed:
    out: Computed = {}
    for row in table.rows:
        cost = chip_cost(find_chip(inputs.chips, row.key), inputs.costs)
        for column in table.columns:
            out[(row.key, column.key)] = getattr(cost, column.key)
    return out


def _transitions(table: PublishedTable, inputs: ReportInputs) -> Computed:
    out: Computed = {}
    for row in table.rows:
        src, dst = (float(n) for n in row.key.split("-"))
        step = next(
            (t for t in inputs.scaling.cmos_transitions if t.from_node == src and t.to_node == dst), None
        )
        out[(row.key, "density_ratio")] = step.density_ratio if step else None
        out[(row.key, "perf_improvement")] = step.perf_improvement * 100 if step else None
        out[(row.key, "power_reduction")] = step.power_reduction * 100 if step else None
    return out


def _dram_density(table: PublishedTable, inputs: ReportInputs) -> Computed:
    by_name = {p.name: p.density for p in inputs.scaling.dram_processes}
    return {("density", c.key): by_name.get(c.key) for c in table.columns}


def _projected(table: PublishedTable, inputs: ReportInputs) -> Computed:
    out: Computed = {}
    for row in table.rows:
        projection = project_chip(
            find_chip(inputs.chips, row.key),
            target_cmos=inputs.target_cmos,
            target_dram=inputs.target_dram,
            policy=inputs.policy,
            table=inputs.scaling,
        )
        for column in table.columns:
            out[(row.key, column.key)] = getattr(projection.metrics, column.key)
    return out


COMPUTATIONS: dict[str, Callable[[PublishedTable, ReportInputs], Computed]] = {
    "T1": _interconnect,
    "T2": _chip_specs,
    "T3": _normalized,
    "T4": _costs,
    "T5": _transitions,
    "T6": _dram_density,
    "T7": _projected,
}


def _table_id(table_id: str) -> str:
    normalized = table_id.strip().upper()
    if not normalized.startswith("T"):
        normalized = f"T{normalized}"
    if normalized not in TABLE_IDS:
        raise UnknownTableError(f"Unknown table '{table_id}'. Known tables: {', '.join(TABLE_IDS)}")
    return normalized


def reconcile_table(table: PublishedTable, inputs: ReportInputs) -> Reconciliation:
    with log_context(table=table.id):
        computed = COMPUTATIONS[table.id](table, inputs)
    cells: list[ReconciledCell] = []
    notes: list[str] = []

    for row in table.rows:
        for column, published in zip(table.columns, row.cells, strict=True):
            value = computed.get((row.key, column.key))
            tolerance = next(
                (t for t in (published.tolerance_percent, row.tolerance_percent, column.tolerance_percent)
                 if t is not None),
                table.tolerance_percent,
            )
            note = published.note or row.note or column.note
            reason = None
            deviation = None
            if published.value is None or value is None:
                status = CellStatus.NOT_APPLICABLE
                reason = NO_DATA_REASON if published.value is None else "no computed value"
                note = None
            else:
                deviation = deviation_percent(value, published.value)
                if is_reproduced(value, published, tolerance):
                    status = CellStatus.REPRODUCED
                    note = None
                else:
                    status = CellStatus.DEVIATION
                    if note and note not in notes:
                        notes.append(note)

            cells.append(ReconciledCell(
                row=row.label,
                column=column.label,
                computed=value,
                published=published.value,
                published_printed=published.printed,
                deviation_percent=deviation,
                tolerance_percent=tolerance,
                status=status,
                not_applicable=reason,
                note=note,
                provenance=f"{table.id} / {row.label} / {column.label}",
            ))

    recon = Reconciliation(
        table_id=table.id,
        title=table.title,
        rows=[r.label for r in table.rows],
        columns=[c.label for c in table.columns],
        cells=cells,
        notes=notes,
    )
    logger.info(
        "Table reconciled",
        extra={
            "table": table.id,
            "reproduced": recon.count(CellStatus.REPRODUCED),
            "deviations": recon.count(CellStatus.DEVIATION),
            "not_applicable": recon.count(CellStatus.NOT_APPLICABLE),
        },
    )
    return recon


def reconcile(
    table_id: str,
    inputs: ReportInputs | None = None,
    tables: PublishedTables | None = None,
) -> Reconciliation:
    """Reconcile one published table ("T1".."T7") against the toolkit's own computations.

    Raises:
        UnknownTableError: for ids outside T1..T7 or missing from ``tables``.
    """
    wanted = _table_id(table_id)
    tables = tables or load_published_tables()
    table = next((t for t in tables.tables if t.id == wanted), None)
    if table is None:
        raise UnknownTableError(f"Table {wanted} is missing from the published tables file")
    return reconcile_table(table, inputs or ReportInputs.load())


def reconcile_all(inputs: ReportInputs | None = None, tables: PublishedTables | None = None) -> list[Reconciliation]:
    inputs = inputs or ReportInputs.load()
    tables = tables or load_published_tables()
    return [reconcile_table(t, inputs) for t in tables.tables]
