"""Tests for table reconciliation and emission."""

from __future__ import annotations

import csv
import io
import json

import pytest

from sunrisesim.errors import UnknownTableError
from sunrisesim.report import (
    TABLE_IDS,
    CellStatus,
    PublishedCell,
    PublishedTables,
    Reconciliation,
    ReportInputs,
    emit,
    emit_many,
    is_reproduced,
    load_published_tables,
    parse_json,
    reconcile,
)


@pytest.fixture(scope="module")
def inputs() -> ReportInputs:
    return ReportInputs.load()


@pytest.fixture(scope="module")
def tables() -> PublishedTables:
    return load_published_tables()


@pytest.fixture(scope="module")
def recons(inputs: ReportInputs, tables: PublishedTables) -> dict[str, Reconciliation]:
    return {tid: reconcile(tid, inputs, tables) for tid in TABLE_IDS}


class TestPublishedCell:
    @pytest.mark.parametrize(
        ("raw", "value", "digits"),
        [
            (0.23, 0.23, 2),
            ("50.10", 50.1, 4),
            ("45%", 45.0, 2),
            ("1.2e4", 12000.0, 2),
            ("1e6", 1e6, 1),
            (560, 560.0, 3),
            ({"value": 9.2, "printed": "9.2x9.2"}, 9.2, 2),
        ],
    )
    def test_parse(self, raw, value: float, digits: int):
        cell = PublishedCell.model_validate(raw)
        assert cell.value == value
        assert cell.digits == digits

    def test_no_data(self):
        cell = PublishedCell.model_validate("no data")
        assert cell.value is None

    def test_rejects_words(self):
        with pytest.raises(ValueError):
            PublishedCell.model_validate("lots")

    def test_rounding_to_printed_precision(self):
        assert is_reproduced(0.17630, PublishedCell.model_validate(0.18), 2)
        assert not is_reproduced(0.17630, PublishedCell.model_validate("0.180"), 2)


class TestCoverage:
    def test_table_shapes(self, tables: PublishedTables):
        assert [t.id for t in tables.tables] == list(TABLE_IDS)
        shapes = {t.id: (len(t.rows), len(t.columns)) for t in tables.tables}
        assert shapes == {
            "T1": (3, 3), "T2": (6, 4), "T3": (4, 4), "T4": (4, 3),
            "T5": (5, 3), "T6": (1, 3), "T7": (4, 4),
        }

    def test_every_cell_reconciled_or_explained(self, recons: dict[str, Reconciliation]):
        for recon in recons.values():
            assert len(recon.cells) == len(recon.rows) * len(recon.columns)
            for cell in recon.cells:
                if cell.status is CellStatus.NOT_APPLICABLE:
                    assert cell.not_applicable == "no data published", cell.provenance
                else:
                    assert cell.computed is not None, cell.provenance
                    assert cell.published is not None

    def test_deviation_definition(self, recons: dict[str, Reconciliation]):
        for recon in recons.values():
            for cell in recon.cells:
                if cell.deviation_percent is not None:
                    expected = abs(cell.computed - cell.published) / cell.published * 100
                    assert cell.deviation_percent == pytest.approx(expected)

    def test_chip_b_bandwidth_no_data(self, recons: dict[str, Reconciliation]):
        cell = recons["T2"].get("Memory bandwidth (TB/s)", "Chip B")
        assert cell.status is CellStatus.NOT_APPLICABLE
        assert cell.published_printed == "no data"

    def test_unknown_table(self, inputs: ReportInputs, tables: PublishedTables):
        with pytest.raises(UnknownTableError, match="T1"):
            reconcile("T8", inputs, tables)

    def test_lenient_ids(self, inputs: ReportInputs, tables: PublishedTables):
        assert reconcile("t3", inputs, tables).table_id == "T3"
        assert reconcile("3", inputs, tables).table_id == "T3"


class TestPublishedTables:
    def test_normalized_table_reproduces(self, recons: dict[str, Reconciliation]):
        recon = recons["T3"]
        assert recon.count(CellStatus.REPRODUCED) == 15
        assert recon.count(CellStatus.NOT_APPLICABLE) == 1
        assert recon.notes == []

    def test_interconnect_density(self, recons: dict[str, Reconciliation]):
        recon = recons["T1"]
        density = "Wire density (/mm or /mm²)"
        assert recon.get(density, "HITOC").computed == 1e6
        assert recon.get(density, "Interposer").computed == 86
        assert recon.get(density, "TSV").deviation_percent <= 5
        assert all(recon.get(density, c).status is CellStatus.REPRODUCED for c in recon.columns)

    def test_interconnect_bandwidth_flagged(self, recons: dict[str, Reconciliation]):
        recon = recons["T1"]
        hitoc = recon.get("Bandwidth (TB/s)", "HITOC")
        assert hitoc.computed == pytest.approx(125)
        assert hitoc.status is CellStatus.DEVIATION
        assert len(recon.notes) == 1

    def test_specs_match(self, recons: dict[str, Reconciliation]):
        recon = recons["T2"]
        assert recon.count(CellStatus.DEVIATION) == 0
        assert recon.get("Memory capacity (MB)", "Sunrise").computed == 562.5

    def test_costs(self, recons: dict[str, Reconciliation]):
        recon = recons["T4"]
        for chip in ("Sunrise (40nm)", "Chip C (7nm)"):
            assert recon.get(chip, "NRE").status is CellStatus.REPRODUCED
            assert recon.get(chip, "Die cost").status is CellStatus.REPRODUCED
            assert recon.get(chip, "Cost per TOPS").status is CellStatus.REPRODUCED
        assert recon.get("Chip A (16nm)", "Cost per TOPS").status is CellStatus.DEVIATION
        assert recon.get("Chip B (12nm)", "Cost per TOPS").status is CellStatus.DEVIATION
        assert len(recon.notes) == 1

    @pytest.mark.parametrize("table_id", ["T5", "T6"])
    def test_process_tables_match_data(self, recons: dict[str, Reconciliation], table_id: str):
        recon = recons[table_id]
        assert recon.count(CellStatus.REPRODUCED) == len(recon.cells)

    def test_projection(self, recons: dict[str, Reconciliation]):
        recon = recons["T7"]
        assert recon.get("Sunrise", "Memory capacity (MB/mm²)").status is CellStatus.REPRODUCED
        assert recon.get("Sunrise", "Memory bandwidth (GB/s/mm²)").status is CellStatus.REPRODUCED
        assert recon.get("Sunrise", "Peak performance (TOPS/mm²)").status is CellStatus.REPRODUCED
        for column in recon.columns:
            assert recon.get("Chip C", column).status is CellStatus.REPRODUCED
        assert recon.get("Chip A", "Peak performance (TOPS/mm²)").status is CellStatus.DEVIATION
        assert len(recon.notes) == 2


class TestEmit:
    def test_json_round_trip(self, recons: dict[str, Reconciliation]):
        for recon in recons.values():
            text = emit(recon, "json")
            assert emit(parse_json(text), "json") == text

    def test_deterministic(self, inputs: ReportInputs, tables: PublishedTables):
        for fmt in ("csv", "json", "markdown"):
            first = emit(reconcile("T7", inputs, tables), fmt)
            assert emit(reconcile("T7", inputs, tables), fmt) == first

    def test_markdown_layout(self, recons: dict[str, Reconciliation]):
        text = emit(recons["T3"], "md")
        lines = text.splitlines()
        assert lines[0] == "### T3: Die-normalized benchmarks"
        table_lines = [line for line in lines if line.startswith("|")]
        assert len(table_lines) == 2 + 4
        assert "Peak performance (TOPS/mm²)" in table_lines[0]
        assert table_lines[2].startswith("| Sunrise (40nm)")
        assert "0.227 vs 0.23" in table_lines[2]
        assert "Notes" not in text
        assert len({len(line) for line in table_lines}) == 1

    def test_markdown_notes(self, recons: dict[str, Reconciliation]):
        text = emit(recons["T4"], "markdown")
        assert "#### Notes" in text
        assert " *" in text

    def test_csv_rows(self, recons: dict[str, Reconciliation]):
        rows = list(csv.DictReader(io.StringIO(emit(recons["T3"], "csv"))))
        assert len(rows) == 16
        sunrise_bw = next(r for r in rows if r["row"] == "Sunrise (40nm)" and r["column"].startswith("Memory bandwidth"))
        assert sunrise_bw["computed"] == "16.4"
        assert sunrise_bw["published"] == "16.3"
        assert sunrise_bw["status"] == "reproduced"

    def test_emit_many_json(self, recons: dict[str, Reconciliation]):
        data = json.loads(emit_many(list(recons.values()), "json"))
        assert [d["table_id"] for d in data] == list(TABLE_IDS)

    def test_unknown_format(self, recons: dict[str, Reconciliation]):
        with pytest.raises(ValueError):
            emit(recons["T3"], "xml")
