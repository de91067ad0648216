"""Projection export as CSV and JSON."""

from __future__ import annotations

import csv
import io
import json

from sunrisesim.techscale.models import ChipProjection

METRICS = ["perf_per_area", "bandwidth_per_area", "capacity_per_area", "energy_efficiency"]

OUTLOOK = ["die_area", "capacity", "parameters", "dram_equivalent_capacity_per_area"]

PROJECTION_COLUMNS = [
    "chip",
    "from_node",
    "to_node",
    "target_dram",
    "mode",
    "power_density",
    *(f"baseline_{m}" for m in METRICS),
    *METRICS,
    *OUTLOOK,
]


def projections_to_csv(projections: list[ChipProjection]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(PROJECTION_COLUMNS)
    for p in projections:
        baseline = p.baseline.model_dump()
        metrics = p.metrics.model_dump()
        outlook = p.outlook.model_dump() if p.outlook else {}
        writer.writerow([
            p.chip,
            p.from_node,
            p.to_node,
            p.target_dram,
            p.mode.value,
            p.power_density,
            *("" if baseline[m] is None else baseline[m] for m in METRICS),
            *("" if metrics[m] is None else metrics[m] for m in METRICS),
            *("" if outlook.get(c) is None else outlook[c] for c in OUTLOOK),
        ])
    return buf.getvalue()


def projections_to_json(projections: list[ChipProjection]) -> str:
    return json.dumps([p.model_dump(mode="json") for p in projections], indent=2) + "\n"
