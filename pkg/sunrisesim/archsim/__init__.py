"""Deterministic simulation of the weight-stationary DSU/VPU dataflow."""

from sunrisesim.archsim.config import (
    ArchConfig,
    Diagnostic,
    arch_diagnostics,
    derive_clock,
    load_arch,
    parse_arch,
)
from sunrisesim.archsim.energy import EnergyReport, energy_report, power_report
from sunrisesim.archsim.engine import simulate_model
from sunrisesim.archsim.export import layers_to_csv, result_to_json, sweep_to_csv, sweep_to_json
from sunrisesim.archsim.models import Bottleneck, EnergyBreakdown, LayerSim, SimResult
from sunrisesim.archsim.roofline import RooflineResult, roofline_check
from sunrisesim.archsim.scheduler import classify, closed_form_model, schedule_layer
from sunrisesim.archsim.sweep import SweepPoint, run_sweep, sweep, sweep_points, with_overrides

__all__ = [
    "ArchConfig",
    "Bottleneck",
    "Diagnostic",
    "EnergyBreakdown",
    "EnergyReport",
    "LayerSim",
    "RooflineResult",
    "SimResult",
    "SweepPoint",
    "arch_diagnostics",
    "classify",
    "closed_form_model",
    "derive_clock",
    "energy_report",
    "layers_to_csv",
    "load_arch",
    "parse_arch",
    "power_report",
    "result_to_json",
    "roofline_check",
    "run_sweep",
    "schedule_layer",
    "simulate_model",
    "sweep",
    "sweep_points",
    "sweep_to_csv",
    "sweep_to_json",
    "with_overrides",
]
