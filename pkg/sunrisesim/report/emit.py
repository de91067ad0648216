"""Render reconciliations as CSV, JSON or Markdown.

CSV and Markdown print numbers with a fixed count of significant digits
(three by default) and published values exactly as printed. JSON keeps full
floats, so emitting a parsed JSON document reproduces it byte for byte.
"""

from __future__ import annotations

import csv
import io
from enum import Enum

from sunrisesim.report.models import CellStatus, ReconciledCell, Reconciliation
from sunrisesim.utils import format_sig

CSV_COLUMNS = [
    "table",
    "row",
    "column",
    "computed",
    "published",
    "deviation_percent",
    "tolerance_percent",
    "status",
    "not_applicable",
    "note",
]


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    MARKDOWN = "markdown"

    @classmethod
    def parse(cls, value: str) -> OutputFormat:
        aliases = {"md": cls.MARKDOWN}
        return aliases.get(value.lower()) or cls(value.lower())


def _num(value: float | None, digits: int) -> str:
    return "" if value is None else format_sig(value, digits)


def to_csv(recons: list[Reconciliation], digits: int = 3) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for recon in recons:
        for cell in recon.cells:
            writer.writerow([
                recon.table_id,
                cell.row,
                cell.column,
                _num(cell.computed, digits),
                cell.published_printed,
                _num(cell.deviation_percent, digits),
                _num(cell.tolerance_percent, digits),
                cell.status.value,
                cell.not_applicable or "",
                cell.note or "",
            ])
    return buf.getvalue()


def to_json(recon: Reconciliation) -> str:
    return recon.model_dump_json(indent=2) + "\n"


def parse_json(text: str) -> Reconciliation:
    return Reconciliation.model_validate_json(text)


def _md_cell(cell: ReconciledCell, digits: int) -> str:
    if cell.status is CellStatus.NOT_APPLICABLE:
        return f"n/a ({cell.published_printed})" if cell.published is None else "n/a"
    deviation = "" if cell.deviation_percent is None else f", {format_sig(cell.deviation_percent, digits)}%"
    marker = " *" if cell.status is CellStatus.DEVIATION else ""
    return f"{_num(cell.computed, digits)} vs {cell.published_printed}{deviation}{marker}"


def to_markdown(recon: Reconciliation, digits: int = 3) -> str:
    """Aligned Markdown table laid out like the published one."""
    header = ["", *recon.columns]
    body = [
        [row, *(_md_cell(recon.get(row, column), digits) for column in recon.columns)]
        for row in recon.rows
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]

    def fmt(line: list[str]) -> str:
        return "| " + " | ".join(text.ljust(width) for text, width in zip(line, widths, strict=True)) + " |"

    lines = [
        f"### {recon.table_id}: {recon.title}",
        "",
        "Cells read computed vs published (deviation %); * marks a documented deviation.",
        "",
        fmt(header),
        "|" + "|".join("-" * (w + 2) for w in widths) + "|",
        *(fmt(line) for line in body),
    ]
    if recon.notes:
        lines += ["", "#### Notes", "", *(f"- {note}" for note in recon.notes)]
    return "\n".join(lines) + "\n"


def emit(recon: Reconciliation, output_format: OutputFormat | str, digits: int = 3) -> str:
    """Deterministic text for one reconciliation."""
    fmt = output_format if isinstance(output_format, OutputFormat) else OutputFormat.parse(output_format)
    if fmt is OutputFormat.CSV:
        return to_csv([recon], digits)
    if fmt is OutputFormat.JSON:
        return to_json(recon)
    return to_markdown(recon, digits)


def emit_many(recons: list[Reconciliation], output_format: OutputFormat | str, digits: int = 3) -> str:
    """Several tables in one document: one CSV, a JSON array, or Markdown sections."""
    fmt = output_format if isinstance(output_format, OutputFormat) else OutputFormat.parse(output_format)
    if fmt is OutputFormat.CSV:
        return to_csv(recons, digits)
    if fmt is OutputFormat.JSON:
        return "[\n" + ",\n".join(r.model_dump_json(indent=2) for r in recons) + "\n]\n"
    return "\n".join(to_markdown(r, digits) for r in recons)
