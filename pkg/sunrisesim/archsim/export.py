"""SimResult and sweep export as JSON and CSV."""

from __future__ import annotations

import csv
import io
import json

from sunrisesim.archsim.models import SimResult
from sunrisesim.archsim.sweep import SweepPoint

LAYER_COLUMNS = [
    "layer",
    "kind",
    "compute_cycles",
    "broadcast_cycles",
    "weight_load_cycles",
    "weight_stream_cycles",
    "writeback_cycles",
    "ingress_cycles",
    "total_cycles",
    "bottleneck",
    "vpu_utilization",
    "active_vpus",
    "macs",
    "dram_bytes",
    "fabric_bytes",
    "energy_j",
]

SUMMARY_COLUMNS = [
    "total_cycles",
    "throughput",
    "effective_tops",
    "avg_power",
    "energy_per_inference",
    "ingress_bound_throughput",
]


def result_to_json(result: SimResult) -> str:
    return result.model_dump_json(indent=2)


def layers_to_csv(result: SimResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(LAYER_COLUMNS)
    for layer in result.per_layer:
        row = layer.model_dump(mode="json", include=set(LAYER_COLUMNS))
        row["energy_j"] = layer.energy.total
        writer.writerow([row[col] for col in LAYER_COLUMNS])
    return buf.getvalue()


def sweep_to_csv(points: list[SweepPoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    params = list(points[0].params) if points else []
    writer.writerow([*params, *SUMMARY_COLUMNS])
    for point in points:
        summary = point.result.model_dump(include=set(SUMMARY_COLUMNS))
        writer.writerow([*(point.params[p] for p in params), *(summary[c] for c in SUMMARY_COLUMNS)])
    return buf.getvalue()


def sweep_to_json(points: list[SweepPoint]) -> str:
    rows = [
        {"params": p.params, **p.result.model_dump(mode="json", include=set(SUMMARY_COLUMNS))}
        for p in points
    ]
    return json.dumps(rows, indent=2)
