"""Shared fixtures for simulator tests."""

from __future__ import annotations

import pytest

from sunrisesim.archsim import ArchConfig, load_arch
from sunrisesim.workload import ModelSpec, load_model

# 1 GHz toy machine: fabric 16 B/cycle, weights 4 B/cycle per VPU,
# writeback pools 16 B/cycle, host 1 B/cycle, pipeline fill 4 cycles.
TOY = {
    "name": "toy",
    "vpu_count": 4,
    "macs_per_vpu": 8,
    "dsu_count": 2,
    "clock": 1.0,
    "dsu_vpu_bandwidth": 16e9,
    "dram_bandwidth_total": 32e9,
    "host_ingress": 1e9,
    "vpu_pool": {"array_count": 4, "array_latency": 4, "word_bytes": 4, "array_capacity": 1024, "bus_limit": 64},
    "dsu_pool": {"array_count": 4, "array_latency": 4, "word_bytes": 8, "array_capacity": 1024, "bus_limit": 64},
    "energy_mac": 1.0,
    "energy_dram_bit": 0.5,
    "energy_fabric_bit": 0.02,
    "static_power": 1.0,
}


def toy_config(**overrides) -> ArchConfig:
    data = {**TOY, **overrides}
    return ArchConfig.model_validate(data)


@pytest.fixture
def toy() -> ArchConfig:
    return toy_config()


@pytest.fixture(scope="session")
def sunrise() -> ArchConfig:
    return load_arch("sunrise-40nm")


@pytest.fixture(scope="session")
def resnet50() -> ModelSpec:
    return load_model("resnet50")
