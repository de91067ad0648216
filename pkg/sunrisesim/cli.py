"""CLI interface for sunrisesim."""

from __future__ import annotations

import functools
import json
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

import click
import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from sunrisesim import __version__
from sunrisesim.config import Config, generate_default_config, load_config
from sunrisesim.errors import SunriseSimError
from sunrisesim.utils import format_sig, setup_logging

# Diagnostics and summaries go to stderr; stdout carries only artifacts.
console = Console(stderr=True)

F = TypeVar("F", bound=Callable[..., Any])

FORMATS = ["csv", "json", "markdown", "md"]
DEFAULT_CONFIG_FILE = "sunrisesim.yaml"


def handle_errors(func: F) -> F:
    """Map failures to exit codes: 2 for I/O problems, 1 for invalid input."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except OSError as e:
            console.print(f"[red]I/O error: {e}[/]")
            raise SystemExit(2) from e
        except ValidationError as e:
            console.print(f"[red]Invalid input ({e.error_count()} problem(s)):[/]")
            for err in e.errors():
                field = ".".join(str(part) for part in err["loc"]) or "<root>"
                console.print(f"  [bold]{field}[/]: {err['msg']}")
            raise SystemExit(1) from e
        except (SunriseSimError, ValueError, yaml.YAMLError) as e:
            console.print(f"[red]Error: {e}[/]")
            raise SystemExit(1) from e

    return wrapper  # type: ignore[return-value]


def _config(ctx: click.Context) -> Config:
    cfg: Config = ctx.obj["config"]
    return cfg


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        console.print(f"[dim]Wrote {output}[/]")
    else:
        click.echo(text, nl=False)


def _node(value: str) -> float:
    """Parse a process node such as ``7nm`` or ``7``."""
    text = value.strip().lower().removesuffix("nm").strip()
    try:
        return float(text)
    except ValueError as e:
        raise click.BadParameter(f"'{value}' is not a process node (e.g. 7nm)") from e


def _parse_vary(entries: tuple[str, ...]) -> dict[str, list[Any]]:
    vary: dict[str, list[Any]] = {}
    for entry in entries:
        name, sep, values = entry.partition("=")
        if not sep or not name.strip() or not values.strip():
            raise click.BadParameter(f"expected FIELD=V1,V2,... got '{entry}'", param_hint="--vary")
        vary[name.strip()] = [yaml.safe_load(v.strip()) for v in values.split(",")]
    return vary


@click.group()
@click.version_option(version=__version__, prog_name="sunrisesim")
@click.option("--config", "-c", "config_path", default=DEFAULT_CONFIG_FILE, show_default=True,
              help="Config file path (defaults apply when it does not exist)")
@click.option("--log-level", default=None, help="Override the configured log level")
@click.pass_context
def cli(ctx: click.Context, config_path: str, log_level: str | None) -> None:
    """Sunrisesim - near-memory accelerator simulator and analytical toolkit."""
    try:
        cfg = load_config(config_path)
    except (ValidationError, SunriseSimError) as e:
        console.print(f"[red]Invalid config {config_path}: {escape(str(e))}[/]")
        raise SystemExit(1) from e
    setup_logging(log_level or cfg.logging.level, cfg.logging.format, command=ctx.invoked_subcommand)
    ctx.obj = {"config": cfg}


@cli.command()
@click.option("--id", "table_ids", multiple=True, help="Table id T1..T7 (repeatable; default all)")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="markdown", show_default=True)
@click.option("--output", "-o", default=None, help="Write to a file instead of stdout")
@click.pass_context
@handle_errors
def tables(ctx: click.Context, table_ids: tuple[str, ...], fmt: str, output: str | None) -> None:
    """Reconcile published tables against computed values."""
    from sunrisesim.report import (
        TABLE_IDS,
        CellStatus,
        ReportInputs,
        emit,
        emit_many,
        load_published_tables,
        reconcile,
    )

    cfg = _config(ctx)
    inputs = ReportInputs.load(cfg)
    published = load_published_tables(config=cfg)
    recons = [reconcile(tid, inputs, published) for tid in (table_ids or TABLE_IDS)]

    summary = Table(title="Reconciliation")
    summary.add_column("Table")
    summary.add_column("Reproduced", justify="right")
    summary.add_column("Deviations", justify="right")
    summary.add_column("No data", justify="right")
    for recon in recons:
        deviations = recon.count(CellStatus.DEVIATION)
        summary.add_row(
            f"{recon.table_id}: {recon.title}",
            str(recon.count(CellStatus.REPRODUCED)),
            f"[yellow]{deviations}[/]" if deviations else "0",
            str(recon.count(CellStatus.NOT_APPLICABLE)),
        )
    console.print(summary)

    digits = cfg.report.significant_digits
    text = emit(recons[0], fmt, digits) if len(recons) == 1 else emit_many(recons, fmt, digits)
    _write(text, output)


@cli.command()
@click.option("--model", "model_name", default="resnet50", show_default=True, help="Model preset or file")
@click.option("--arch", "arch_name", default="sunrise-40nm", show_default=True, help="Arch preset or file")
@click.option("--batch", default=1, show_default=True, type=click.IntRange(min=1))
@click.option("--engine", type=click.Choice(["event", "closed-form"]), default="event", show_default=True,
              help="Event-driven simulation or the closed-form timeline")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True,
              help="csv: per-layer rows; json: the full result")
@click.option("--output", "-o", default=None, help="Write to a file instead of stdout")
@click.pass_context
@handle_errors
def simulate(
    ctx: click.Context, model_name: str, arch_name: str, batch: int, engine: str, fmt: str, output: str | None
) -> None:
    """Simulate a model on an architecture."""
    from sunrisesim.archsim import closed_form_model, layers_to_csv, load_arch, result_to_json, simulate_model
    from sunrisesim.workload import load_model

    cfg = _config(ctx)
    arch = load_arch(arch_name, cfg)
    model = load_model(model_name, cfg)
    run = simulate_model if engine == "event" else closed_form_model
    result = run(model, arch, batch)

    bottlenecks = ", ".join(f"{k} {v}" for k, v in result.bottleneck_counts().items() if v)
    console.print(Panel.fit(
        f"[bold green]{model.name} on {arch.name}[/] (batch {batch}, {engine})\n"
        f"Throughput: {format_sig(result.throughput, 4)} inferences/s\n"
        f"Effective: {format_sig(result.effective_tops, 4)} of {format_sig(result.peak_tops, 4)} TOPS\n"
        f"Average power: {format_sig(result.avg_power, 4)} W\n"
        f"Ingress bound: {format_sig(result.ingress_bound_throughput, 4)} inferences/s\n"
        f"Bottlenecks: {bottlenecks}"
    ))
    _write(layers_to_csv(result) if fmt == "csv" else result_to_json(result) + "\n", output)


@cli.command()
@click.option("--chip", default="all", show_default=True, help="Chip key or name, or 'all'")
@click.option("--to", "to_node", default=None, help="Target CMOS node, e.g. 7nm (default from config)")
@click.option("--dram", "target_dram", default=None, help="Target DRAM process (default from config)")
@click.option("--chips-file", multiple=True, help="Extra chip database file (repeatable)")
@click.option("--die-area", type=click.FloatRange(min=0, min_open=True), default=None,
              help="Die area (mm²) for the capacity outlook; default each chip's own")
@click.option("--bytes-per-param", type=click.FloatRange(min=0, min_open=True), default=2.0, show_default=True,
              help="Bytes per model parameter in the capacity outlook")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--output", "-o", default=None, help="Write to a file instead of stdout")
@click.pass_context
@handle_errors
def project(
    ctx: click.Context,
    chip: str,
    to_node: str | None,
    target_dram: str | None,
    chips_file: tuple[str, ...],
    die_area: float | None,
    bytes_per_param: float,
    fmt: str,
    output: str | None,
) -> None:
    """Project die-normalized chip metrics to another process node.

    Each row also carries a capacity outlook: megabytes and model parameters
    a die of --die-area mm² holds at the projected density, and for SRAM
    chips the density if DRAM replaced the SRAM
    (projection.dram_sram_density_ratio).
    """
    from sunrisesim.techscale import (
        PowerPolicy,
        capacity_outlook,
        chip_db,
        find_chip,
        load_scaling,
        project_chip,
        projections_to_csv,
        projections_to_json,
    )

    cfg = _config(ctx)
    chips = chip_db(list(chips_file), cfg)
    selected = chips if chip.lower() == "all" else [find_chip(chips, chip)]
    table = load_scaling(config=cfg)
    policy = PowerPolicy(power_density_cap=cfg.projection.power_density_cap)
    target = _node(to_node) if to_node else cfg.projection.target_cmos
    dram = target_dram or cfg.projection.target_dram

    projections = []
    outlooks = []
    for c in selected:
        p = project_chip(c, target, dram, policy, table)
        outlook = capacity_outlook(
            c, p, die_area, cfg.projection.dram_sram_density_ratio, bytes_per_param
        )
        projections.append(p.model_copy(update={"outlook": outlook}))
        outlooks.append(outlook)

    summary = Table(title=f"Projected to {target:g}nm CMOS / {dram} DRAM")
    for column in (
        "Chip", "Mode", "TOPS/mm²", "GB/s/mm²", "MB/mm²", "TOPS/W", "Die mm²", "MB", "Params", "DRAM MB/mm²"
    ):
        summary.add_column(column)
    for p, o in zip(projections, outlooks, strict=True):
        m = p.metrics
        summary.add_row(
            p.chip,
            p.mode.value,
            format_sig(m.perf_per_area),
            "no data" if m.bandwidth_per_area is None else format_sig(m.bandwidth_per_area),
            format_sig(m.capacity_per_area),
            format_sig(m.energy_efficiency),
            format_sig(o.die_area),
            format_sig(o.capacity),
            format_sig(o.parameters),
            "-" if o.dram_equivalent_capacity_per_area is None
            else format_sig(o.dram_equivalent_capacity_per_area),
        )
    console.print(summary)
    _write(projections_to_csv(projections) if fmt == "csv" else projections_to_json(projections), output)


@cli.command()
@click.option("--chip", default="all", show_default=True,
              help="Chip key or name; 'all' emits the cost table reconciliation")
@click.option("--basis", default="cost_basis", show_default=True, help="Cost-basis preset or file")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="markdown", show_default=True)
@click.option("--output", "-o", default=None, help="Write to a file instead of stdout")
@click.pass_context
@handle_errors
def cost(ctx: click.Context, chip: str, basis: str, fmt: str, output: str | None) -> None:
    """Die cost, yield and cost per TOPS."""
    from sunrisesim.econ import chip_cost, load_cost_basis
    from sunrisesim.report import ReportInputs, emit, load_published_tables, reconcile
    from sunrisesim.techscale import chip_db, find_chip

    cfg = _config(ctx)
    bases = load_cost_basis(basis, cfg)

    if chip.lower() == "all":
        inputs = ReportInputs.load(cfg)
        inputs.costs = bases
        recon = reconcile("T4", inputs, load_published_tables(config=cfg))
        _write(emit(recon, fmt, cfg.report.significant_digits), output)
        return

    row = chip_cost(find_chip(chip_db(config=cfg), chip), bases)
    console.print(Panel.fit(
        f"[bold]{row.chip}[/] at {row.node:g}nm\n"
        f"Dies per wafer: {row.dies_per_wafer}, yield {format_sig(row.die_yield)}\n"
        f"Die cost: ${format_sig(row.die_cost)}  (${format_sig(row.cost_per_tops)} per TOPS)\n"
        f"NRE: ${format_sig(row.nre)}"
    ))
    if fmt == "json":
        text = row.model_dump_json(indent=2) + "\n"
    else:
        data = row.model_dump()
        text = ",".join(data) + "\n" + ",".join(str(v) for v in data.values()) + "\n"
    _write(text, output)


@cli.command()
@click.option("--arch", "arch_name", default="sunrise-40nm", show_default=True, help="Arch preset or file")
@click.option("--model", "model_name", default="resnet50", show_default=True, help="Model preset or file")
@click.option("--vary", multiple=True, required=True,
              help="FIELD=V1,V2,... (repeatable; dotted paths such as vpu_pool.array_count)")
@click.option("--batch", default=1, show_default=True, type=click.IntRange(min=1))
@click.option("--concurrency", default=None, type=click.IntRange(min=1),
              help="Points simulated at once (default from config)")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--output", "-o", default=None, help="Write to a file instead of stdout")
@click.pass_context
@handle_errors
def sweep(
    ctx: click.Context,
    arch_name: str,
    model_name: str,
    vary: tuple[str, ...],
    batch: int,
    concurrency: int | None,
    fmt: str,
    output: str | None,
) -> None:
    """Simulate every combination of the varied architecture fields."""
    from sunrisesim.archsim import load_arch, run_sweep, sweep_to_csv, sweep_to_json
    from sunrisesim.workload import load_model

    cfg = _config(ctx)
    grid = _parse_vary(vary)
    arch = load_arch(arch_name, cfg)
    model = load_model(model_name, cfg)
    points = run_sweep(
        arch, model, grid, batch=batch, max_concurrency=concurrency or cfg.sweep.max_concurrency
    )
    console.print(f"[green]{len(points)} sweep point(s) simulated[/]")
    _write(sweep_to_csv(points) if fmt == "csv" else sweep_to_json(points) + "\n", output)


@cli.command()
@click.option("--tech-file", default="interconnect", show_default=True, help="Technology preset or file")
@click.option("--bits", default=1e12, show_default=True, type=float, help="Bits moved for the energy column")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--output", "-o", default=None, help="Write to a file instead of stdout")
@click.pass_context
@handle_errors
def interconnect(ctx: click.Context, tech_file: str, bits: float, fmt: str, output: str | None) -> None:
    """Compare wire density, bandwidth and transfer energy of integration technologies."""
    import csv
    import io

    from sunrisesim.interconnect import compare_techs, load_technologies

    techs = load_technologies(tech_file, _config(ctx))
    rows = compare_techs(techs.techs, techs.budget, bits)

    table = Table(title=f"Data paths ({techs.budget.die_area:g} mm² die, {techs.budget.io_frequency:g} GHz)")
    for column in ("Tech", "Layout", "Density", "Wires", "TB/s", "Energy (J)"):
        table.add_column(column)
    for r in rows:
        table.add_row(
            r.kind, r.dimensionality, format_sig(r.wire_density), format_sig(r.wire_count),
            format_sig(r.bandwidth_tbps), format_sig(r.energy_pj * 1e-12),
        )
    console.print(table)

    if fmt == "json":
        text = json.dumps([r.model_dump() for r in rows], indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        fields = list(rows[0].model_dump()) if rows else []
        writer.writerow(fields)
        for r in rows:
            writer.writerow(r.model_dump().values())
        text = buf.getvalue()
    _write(text, output)


@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@handle_errors
def validate(path: str) -> None:
    """Check an input file against its schema and cross-field rules."""
    from sunrisesim.utils import read_yaml
    from sunrisesim.validation import detect_kind, validate_config

    diagnostics = validate_config(path)
    try:
        kind = detect_kind(read_yaml(path)) or "unknown"
    except SunriseSimError:
        kind = "unknown"

    if not diagnostics:
        console.print(f"[green]✓ {path} ({kind}) is valid[/]")
        return

    console.print(f"[bold]{path}[/] ({kind})")
    for d in diagnostics:
        severity = "[red]error[/]" if d.severity == "error" else "[yellow]warning[/]"
        console.print(f"  {severity} [bold]{d.field}[/]: {d.message}")
    if any(d.severity == "error" for d in diagnostics):
        raise SystemExit(1)


@cli.command()
@click.argument("kind", type=click.Choice(["arch", "model", "chips", "scaling", "cost",
                                           "interconnect", "tables", "config"]))
def schema(kind: str) -> None:
    """Print the JSON schema of an input file type."""
    from sunrisesim.validation import SCHEMAS

    click.echo(json.dumps(SCHEMAS[kind].model_json_schema(), indent=2))


@cli.command()
@click.option("--path", "config_path", default=DEFAULT_CONFIG_FILE, show_default=True)
def init(config_path: str) -> None:
    """Generate a default sunrisesim.yaml."""
    if Path(config_path).exists():
        if not click.confirm(f"{config_path} already exists. Overwrite?"):
            console.print("[yellow]Cancelled.[/]")
            return

    Path(config_path).write_text(generate_default_config(), encoding="utf-8")
    console.print(f"[green]Created {config_path}[/]")


if __name__ == "__main__":
    cli()
