"""Published tables and their reconciliation against computed values."""

from __future__ import annotations

from decimal import InvalidOperation
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

from sunrisesim.utils import round_sig, significant_digits

NO_DATA = "no data"
TABLE_IDS = ("T1", "T2", "T3", "T4", "T5", "T6", "T7")


class PublishedCell(BaseModel):
    """One published value and the string it was printed as.

    Written in the data file as a number, a printed string ("50.10", "45%",
    "1.2e4"), "no data", or a ``{value, printed}`` mapping when the printed
    form is not itself a number.
    """
    model_config = {"frozen": True}

    value: float | None
    printed: str
    note: str | None = None
    tolerance_percent: float | None = Field(default=None, ge=0)

    @model_validator(mode="before")
    @classmethod
    def from_scalar(cls, data: Any) -> Any:
        if isinstance(data, bool):
            raise ValueError("expected a number or a printed value")
        if isinstance(data, int | float):
            return {"value": float(data), "printed": f"{data:g}"}
        if isinstance(data, str):
            text = data.strip()
            if text.lower() == NO_DATA:
                return {"value": None, "printed": NO_DATA}
            try:
                return {"value": float(text.rstrip("%")), "printed": text}
            except ValueError as exc:
                raise ValueError(f"'{text}' is not a number; use {{value, printed}}") from exc
        if isinstance(data, dict) and "printed" not in data and data.get("value") is not None:
            return {**data, "printed": f"{data['value']:g}"}
        return data

    @property
    def digits(self) -> int:
        """Significant figures the value was published with."""
        try:
            return significant_digits(self.printed.rstrip("%"))
        except (InvalidOperation, ValueError):
            if self.value is None:
                return 1
            return significant_digits(f"{self.value:g}")


class Axis(BaseModel):
    """A row or column: a key the computation uses and the label shown."""
    model_config = {"frozen": True}

    key: str
    label: str
    tolerance_percent: float | None = Field(default=None, ge=0)
    note: str | None = None

    @model_validator(mode="before")
    @classmethod
    def from_key(cls, data: Any) -> Any:
        if isinstance(data, str):
            return {"key": data, "label": data}
        if isinstance(data, dict) and "label" not in data and "key" in data:
            return {**data, "label": data["key"]}
        return data


class PublishedRow(Axis):
    cells: list[PublishedCell]


class PublishedTable(BaseModel):
    id: str
    title: str
    source: str
    columns: list[Axis]
    rows: list[PublishedRow]
    tolerance_percent: float = Field(default=2.0, ge=0)

    @field_validator("id")
    @classmethod
    def known_id(cls, value: str) -> str:
        if value not in TABLE_IDS:
            raise ValueError(f"table id must be one of {', '.join(TABLE_IDS)}")
        return value

    @model_validator(mode="after")
    def rectangular(self) -> PublishedTable:
        for row in self.rows:
            if len(row.cells) != len(self.columns):
                raise ValueError(
                    f"{self.id} row '{row.label}' has {len(row.cells)} cells for {len(self.columns)} columns"
                )
        return self

    def cell(self, row_key: str, column_key: str) -> PublishedCell:
        index = [c.key for c in self.columns].index(column_key)
        return next(r for r in self.rows if r.key == row_key).cells[index]


class PublishedTables(BaseModel):
    tables: list[PublishedTable]

    @field_validator("tables")
    @classmethod
    def unique_ids(cls, value: list[PublishedTable]) -> list[PublishedTable]:
        ids = [t.id for t in value]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate table ids")
        return value


class CellStatus(str, Enum):
    REPRODUCED = "reproduced"
    DEVIATION = "deviation"
    NOT_APPLICABLE = "not_applicable"


class ReconciledCell(BaseModel):
    row: str
    column: str
    computed: float | None
    published: float | None
    published_printed: str
    deviation_percent: float | None
    tolerance_percent: float | None
    status: CellStatus
    not_applicable: str | None = None
    note: str | None = None
    provenance: str


class Reconciliation(BaseModel):
    """A published table beside its recomputation, cell by cell."""
    table_id: str
    title: str
    rows: list[str]
    columns: list[str]
    cells: list[ReconciledCell]
    notes: list[str] = Field(default_factory=list)

    def get(self, row: str, column: str) -> ReconciledCell:
        for cell in self.cells:
            if cell.row == row and cell.column == column:
                return cell
        raise KeyError(f"{self.table_id} has no cell ({row}, {column})")

    def count(self, status: CellStatus) -> int:
        return sum(1 for c in self.cells if c.status is status)


def deviation_percent(computed: float, published: float) -> float | None:
    """|computed - published| / published as a percentage; None when published is 0."""
    if published == 0:
        return None
    return abs(computed - published) / abs(published) * 100


def is_reproduced(computed: float, cell: PublishedCell, tolerance_percent: float) -> bool:
    """True when ``computed``, rounded to the cell's published precision, is within tolerance."""
    assert cell.value is not None
    if cell.value == 0:
        return computed == 0
    rounded = round_sig(computed, cell.digits)
    return abs(rounded - cell.value) / abs(cell.value) * 100 <= tolerance_percent + 1e-9
