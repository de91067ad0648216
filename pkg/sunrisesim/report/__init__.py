"""Reconciliation of published tables and table emission."""

from sunrisesim.report.emit import OutputFormat, emit, emit_many, parse_json, to_csv, to_json, to_markdown
from sunrisesim.report.models import (
    TABLE_IDS,
    CellStatus,
    PublishedCell,
    PublishedTable,
    PublishedTables,
    ReconciledCell,
    Reconciliation,
    deviation_percent,
    is_reproduced,
)
from sunrisesim.report.reconcile import (
    ReportInputs,
    load_published_tables,
    reconcile,
    reconcile_all,
    reconcile_table,
)

__all__ = [
    "TABLE_IDS",
    "CellStatus",
    "OutputFormat",
    "PublishedCell",
    "PublishedTable",
    "PublishedTables",
    "ReconciledCell",
    "Reconciliation",
    "ReportInputs",
    "deviation_percent",
    "emit",
    "emit_many",
    "is_reproduced",
    "load_published_tables",
    "parse_json",
    "reconcile",
    "reconcile_all",
    "reconcile_table",
    "to_csv",
    "to_json",
    "to_markdown",
]
