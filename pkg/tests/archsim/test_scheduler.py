"""Tests for the phase model, the event-driven engine and their agreement."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sunrisesim.archsim import (
    ArchConfig,
    Bottleneck,
    classify,
    closed_form_model,
    roofline_check,
    schedule_layer,
    simulate_model,
)
from sunrisesim.errors import ConfigError, ModelValidationError
from sunrisesim.workload import LayerSpec, ModelSpec

from .conftest import toy_config


def compute_case(n: int) -> LayerSpec:
    return LayerSpec(name=f"conv{n}", kind="Conv2D", in_h=n, in_w=n, in_c=8,
                     kernel_h=3, kernel_w=3, out_c=8, padding=1)


def broadcast_case(n: int) -> LayerSpec:
    return LayerSpec(name=f"pool{n}", kind="Pool", in_h=4 * n, in_w=4 * n, in_c=4, out_c=4, stride=4)


def weights_case(n: int) -> LayerSpec:
    return LayerSpec(name=f"fc{n}", kind="FullyConnected", in_c=64 * n, out_c=4)


def writeback_case(n: int) -> LayerSpec:
    return LayerSpec(name=f"add{n}", kind="ElementWise", in_h=n, in_w=n, in_c=16, out_c=16)


def ingress_case(n: int) -> LayerSpec:
    return LayerSpec(name=f"stem{n}", kind="Conv2D", in_h=n, in_w=n, in_c=1, out_c=1)


ORACLE_CASES = [
    *[(compute_case(n), Bottleneck.COMPUTE, False) for n in (4, 8, 12, 16)],
    *[(broadcast_case(n), Bottleneck.BROADCAST, False) for n in (1, 2, 4, 8)],
    *[(weights_case(n), Bottleneck.DRAM_WEIGHTS, False) for n in (1, 2, 4, 8)],
    *[(writeback_case(n), Bottleneck.DRAM_WRITEBACK, False) for n in (1, 2, 4, 8)],
    *[(ingress_case(n), Bottleneck.INGRESS, True) for n in (2, 4, 8, 16)],
]


def single(layer: LayerSpec) -> ModelSpec:
    return ModelSpec(name=layer.name, layers=[layer])


class TestScheduleLayer:
    def test_balanced_compute_bound(self):
        arch = toy_config(
            vpu_count=64, macs_per_vpu=512, dsu_vpu_bandwidth=1e18,
            vpu_pool={**toy_config().vpu_pool.model_dump(), "bus_limit": 1e12, "word_bytes": 1_000_000},
            dsu_pool={**toy_config().dsu_pool.model_dump(), "bus_limit": 1e12, "word_bytes": 1_000_000},
        )
        layer = LayerSpec(name="fc", kind="FullyConnected", in_c=1024, out_c=64)
        sim = schedule_layer(layer, arch)
        assert sim.compute_cycles == 2
        assert sim.bottleneck is Bottleneck.COMPUTE

    def test_single_channel_starves_vpus(self, toy: ArchConfig):
        layer = LayerSpec(name="fc", kind="FullyConnected", in_c=64, out_c=1)
        sim = schedule_layer(layer, toy)
        assert sim.active_vpus == 1
        assert sim.vpu_utilization <= 1 / toy.vpu_count

    def test_trivial_layer(self, toy: ArchConfig):
        sim = schedule_layer(LayerSpec(name="one", kind="Conv2D", in_c=1, out_c=1), toy)
        assert sim.compute_cycles == 1
        assert sim.total_cycles == toy.fill_cycles + 1
        assert sim.bottleneck is Bottleneck.COMPUTE

    def test_total_covers_every_phase(self, toy: ArchConfig):
        for layer, _, _ in ORACLE_CASES:
            sim = schedule_layer(layer, toy)
            assert sim.total_cycles >= max(sim.phase_cycles.values())
            assert 0 <= sim.vpu_utilization <= 1

    def test_doubling_fabric_halves_broadcast(self, toy: ArchConfig):
        layer = broadcast_case(4)
        before = schedule_layer(layer, toy)
        after = schedule_layer(layer, toy_config(dsu_vpu_bandwidth=2 * toy.dsu_vpu_bandwidth))
        assert before.bottleneck is Bottleneck.BROADCAST
        assert after.broadcast_cycles == pytest.approx(before.broadcast_cycles / 2)

    def test_hidden_weights_shrink_visible_load(self, toy: ArchConfig):
        layer = weights_case(2)
        full = schedule_layer(layer, toy)
        hidden = schedule_layer(layer, toy, hidden_weight_cycles=full.weight_stream_cycles)
        assert hidden.weight_load_cycles == 0
        assert hidden.bottleneck is not Bottleneck.DRAM_WEIGHTS

    def test_fabric_carries_features(self, toy: ArchConfig):
        for layer, _, _ in ORACLE_CASES:
            sim = schedule_layer(layer, toy, batch=3)
            inputs = layer.in_h * layer.in_w * layer.in_c
            outputs = layer.out_h * layer.out_w * layer.out_c
            assert sim.fabric_bytes >= 3 * (inputs + outputs)

    def test_bad_batch(self, toy: ArchConfig):
        with pytest.raises(ConfigError):
            schedule_layer(compute_case(4), toy, batch=0)


class TestClassify:
    def test_ties_go_to_compute(self):
        phases = dict.fromkeys(Bottleneck, 5.0)
        assert classify(phases) is Bottleneck.COMPUTE

    def test_later_tie_goes_to_earlier_member(self):
        phases = {**dict.fromkeys(Bottleneck, 1.0), Bottleneck.DRAM_WEIGHTS: 3.0, Bottleneck.INGRESS: 3.0}
        assert classify(phases) is Bottleneck.DRAM_WEIGHTS


class TestOracleEquivalence:
    @pytest.mark.parametrize(("layer", "expected", "ingress"), ORACLE_CASES, ids=lambda v: getattr(v, "name", None))
    def test_engine_matches_closed_form(self, layer: LayerSpec, expected: Bottleneck, ingress: bool):
        arch = toy_config(include_ingress=ingress)
        model = single(layer)
        event = simulate_model(model, arch)
        closed = closed_form_model(model, arch)
        assert event.total_cycles == pytest.approx(closed.total_cycles, abs=arch.fill_cycles)
        assert event.per_layer[0].bottleneck is expected
        assert closed.per_layer[0].bottleneck is expected

    @pytest.mark.parametrize(("layer", "expected", "ingress"), ORACLE_CASES, ids=lambda v: getattr(v, "name", None))
    def test_single_layer_is_fill_plus_longest_phase(self, layer: LayerSpec, expected: Bottleneck, ingress: bool):
        arch = toy_config(include_ingress=ingress)
        sim = simulate_model(single(layer), arch)
        phases = sim.per_layer[0].phase_cycles
        assert sim.total_cycles == pytest.approx(arch.fill_cycles + phases[expected])
        assert sim.total_cycles == pytest.approx(arch.fill_cycles + max(phases.values()))

    @pytest.mark.parametrize(("layer", "expected", "ingress"), ORACLE_CASES, ids=lambda v: getattr(v, "name", None))
    def test_roofline_agrees_when_one_phase_dominates(self, layer: LayerSpec, expected: Bottleneck, ingress: bool):
        arch = toy_config()
        sim = schedule_layer(layer, arch, ingress_bytes=layer.in_h * layer.in_w * layer.in_c if ingress else 0)
        ranked = sorted(sim.phase_cycles.values(), reverse=True)
        assert ranked[0] >= 2 * ranked[1]
        roof = roofline_check(layer, arch, ingress_bytes=layer.in_h * layer.in_w * layer.in_c if ingress else 0)
        assert roof.bound is sim.bottleneck is expected

    def test_multi_layer_models_agree(self, toy: ArchConfig):
        model = ModelSpec(name="mixed", layers=[case for case, _, _ in ORACLE_CASES[:16]])
        event = simulate_model(model, toy, batch=2)
        closed = closed_form_model(model, toy, batch=2)
        assert event.total_cycles == pytest.approx(closed.total_cycles, rel=1e-12)
        assert [l.bottleneck for l in event.per_layer] == [l.bottleneck for l in closed.per_layer]


class TestPrefetch:
    def test_first_layer_loads_in_full(self, toy: ArchConfig):
        result = closed_form_model(single(weights_case(4)), toy)
        layer = result.per_layer[0]
        assert layer.weight_load_cycles == layer.weight_stream_cycles

    def test_next_layer_loads_under_current(self, toy: ArchConfig):
        # long compute layer hides the FC layer's whole weight load
        model = ModelSpec(name="m", layers=[compute_case(16), weights_case(2)])
        result = simulate_model(model, toy)
        assert result.per_layer[1].weight_stream_cycles > 0
        assert result.per_layer[1].weight_load_cycles == 0

    def test_back_to_back_loads_serialize(self, toy: ArchConfig):
        model = ModelSpec(name="m", layers=[weights_case(8), weights_case(8), weights_case(8)])
        result = closed_form_model(model, toy)
        stream = result.per_layer[0].weight_stream_cycles
        assert all(layer.bottleneck is Bottleneck.DRAM_WEIGHTS for layer in result.per_layer)
        assert result.total_cycles == pytest.approx(3 * toy.fill_cycles + 3 * stream - 2 * toy.fill_cycles)


class TestModelErrors:
    def test_empty_model(self, toy: ArchConfig):
        with pytest.raises(ModelValidationError):
            simulate_model(ModelSpec(name="empty"), toy)

    def test_bad_batch(self, toy: ArchConfig):
        with pytest.raises(ConfigError):
            simulate_model(single(compute_case(4)), toy, batch=0)


SMALL_MODEL = ModelSpec(
    name="small",
    layers=[compute_case(8), broadcast_case(2), weights_case(4), writeback_case(4), weights_case(1)],
)


class TestMonotonicity:
    @settings(max_examples=40, deadline=None)
    @given(
        field=st.sampled_from(["dsu_vpu_bandwidth", "host_ingress", "vpu_pool", "dsu_pool"]),
        factor=st.floats(min_value=1.0, max_value=8.0),
    )
    def test_more_bandwidth_never_slower(self, field: str, factor: float):
        base = toy_config(include_ingress=True)
        if field in ("vpu_pool", "dsu_pool"):
            pool = getattr(base, field).model_dump()
            pool["word_bytes"] = int(pool["word_bytes"] * factor)
            faster = toy_config(include_ingress=True, **{field: pool})
        else:
            faster = toy_config(include_ingress=True, **{field: getattr(base, field) * factor})
        slow = closed_form_model(SMALL_MODEL, base).total_cycles
        fast = closed_form_model(SMALL_MODEL, faster).total_cycles
        assert fast <= slow * (1 + 1e-12)

    def test_more_vpus_keeps_broadcast_share(self):
        layer = LayerSpec(name="c", kind="Conv2D", in_h=28, in_w=28, in_c=128,
                          kernel_h=3, kernel_w=3, out_c=256, padding=1)
        shares = []
        for vpus in (16, 32, 64, 128):
            arch = toy_config(vpu_count=vpus, macs_per_vpu=32_768 // vpus)
            sim = schedule_layer(layer, arch)
            shares.append(sim.broadcast_cycles / sim.total_cycles)
        assert shares == sorted(shares)


class TestDeterminism:
    def test_repeat_runs_identical(self, toy: ArchConfig):
        first = simulate_model(SMALL_MODEL, toy, batch=3)
        second = simulate_model(SMALL_MODEL, toy, batch=3)
        assert first.model_dump_json() == second.model_dump_json()
