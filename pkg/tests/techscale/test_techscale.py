"""Tests for chip normalization, transition composition and projection."""

from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sunrisesim.errors import ConfigError, NoTransitionPathError, SunriseSimError, UnknownNodeError
from sunrisesim.techscale import (
    ChipSpec,
    NodeTransition,
    PowerPolicy,
    ProjectionMode,
    ScalingTable,
    capacity_at_area,
    capacity_outlook,
    chip_db,
    compose_transitions,
    dram_density_ratio,
    dram_equivalent_capacity,
    find_chip,
    load_scaling,
    normalize_per_area,
    parameter_capacity,
    project_chip,
    transition_path,
)

CANONICAL_CHAIN = [40, 28, 16, 10, 7]


@pytest.fixture(scope="module")
def chips() -> list[ChipSpec]:
    return chip_db()


@pytest.fixture(scope="module")
def table() -> ScalingTable:
    return load_scaling()


class TestChipDb:
    def test_builtin_count(self, chips: list[ChipSpec]):
        assert [c.key for c in chips] == ["sunrise", "chip-a", "chip-b", "chip-c"]

    def test_chip_b_bandwidth_unknown(self, chips: list[ChipSpec]):
        assert find_chip(chips, "Chip B").memory_bandwidth is None

    def test_user_file_appends(self, tmp_path: Path):
        path = tmp_path / "more.yaml"
        path.write_text(
            "chips:\n"
            "  - {name: Chip D, cmos_node: 5, die_area: 300, peak_tops: 400, memory_capacity: 64, power: 200}\n"
        )
        chips = chip_db([path])
        assert len(chips) == 5
        assert find_chip(chips, "chip-d").cmos_node == 5

    def test_unknown_chip(self, chips: list[ChipSpec]):
        with pytest.raises(SunriseSimError, match="chip-a"):
            find_chip(chips, "chip-z")

    def test_dram_chip_needs_process(self):
        with pytest.raises(ValueError, match="dram_node"):
            ChipSpec(name="x", cmos_node=40, die_area=1, peak_tops=1, memory_capacity=1, power=1, memory_type="DRAM")


class TestNormalize:
    def test_sunrise(self, chips: list[ChipSpec]):
        m = normalize_per_area(find_chip(chips, "sunrise"))
        assert m.perf_per_area == pytest.approx(0.2273, abs=1e-4)
        assert m.bandwidth_per_area == pytest.approx(16.36, abs=1e-2)
        assert m.capacity_per_area == pytest.approx(5.11, abs=1e-2)
        assert m.energy_efficiency == pytest.approx(2.08, abs=1e-2)

    def test_chip_a(self, chips: list[ChipSpec]):
        m = normalize_per_area(find_chip(chips, "chip-a"))
        assert m.perf_per_area == pytest.approx(0.1525)
        assert m.bandwidth_per_area == pytest.approx(56.25)
        assert m.capacity_per_area == pytest.approx(0.375)
        assert m.energy_efficiency == pytest.approx(1.0167, abs=1e-4)

    def test_zero_tops(self):
        m = normalize_per_area(ChipSpec(name="idle", cmos_node=7, die_area=10, peak_tops=0, memory_capacity=1, power=1))
        assert m.perf_per_area == 0
        assert m.energy_efficiency == 0

    @given(k=st.floats(min_value=0.01, max_value=100))
    def test_scale_invariant(self, k: float):
        base = ChipSpec(name="x", cmos_node=16, die_area=800, peak_tops=122, memory_capacity=300, power=120,
                        memory_bandwidth=45)
        scaled = base.model_copy(update={
            f: getattr(base, f) * k
            for f in ("die_area", "peak_tops", "memory_capacity", "power", "memory_bandwidth")
        })
        a, b = normalize_per_area(base), normalize_per_area(scaled)
        for field in ("perf_per_area", "bandwidth_per_area", "capacity_per_area", "energy_efficiency"):
            assert getattr(b, field) == pytest.approx(getattr(a, field), rel=1e-9)


class TestComposeTransitions:
    def test_forty_to_seven(self, table: ScalingTable):
        f = compose_transitions(40, 7, table)
        assert f.density == pytest.approx(13.2)
        assert f.performance == pytest.approx(2.74637, rel=1e-5)
        assert f.power == pytest.approx(0.08073, rel=1e-4)

    def test_identity(self, table: ScalingTable):
        f = compose_transitions(7, 7, table)
        assert (f.density, f.performance, f.power) == (1, 1, 1)

    def test_sixteen_to_seven(self, table: ScalingTable):
        f = compose_transitions(16, 7, table)
        assert f.density == pytest.approx(3.3)
        assert f.performance == pytest.approx(1.403)
        assert f.power == pytest.approx(0.299)

    def test_canonical_path_skips_twelve(self, table: ScalingTable):
        path = transition_path(16, 7, table.cmos_transitions)
        assert [node for node, _ in path] == [10, 7]

    def test_twelve_walks_back_through_sixteen(self, table: ScalingTable):
        path = transition_path(12, 7, table.cmos_transitions)
        assert [node for node, _ in path] == [16, 10, 7]
        f = compose_transitions(12, 7, table)
        assert f.density == pytest.approx(2.75)
        assert f.performance == pytest.approx(1.403 / 1.28)
        assert f.power == pytest.approx(0.46)

    def test_no_path_lists_nodes(self, table: ScalingTable):
        with pytest.raises(NoTransitionPathError, match="40nm"):
            compose_transitions(5, 7, table)

    def test_disconnected_table(self):
        rows = [
            NodeTransition(from_node=40, to_node=28, density_ratio=2, perf_improvement=0.1, power_reduction=0.1),
            NodeTransition(from_node=10, to_node=7, density_ratio=2, perf_improvement=0.1, power_reduction=0.1),
        ]
        with pytest.raises(NoTransitionPathError) as exc_info:
            compose_transitions(40, 7, rows)
        assert exc_info.value.available == [40, 28, 10, 7]

    @given(
        nodes=st.lists(st.sampled_from(CANONICAL_CHAIN), min_size=3, max_size=3, unique=True).map(
            lambda xs: sorted(xs, reverse=True)
        )
    )
    def test_path_multiplicative(self, nodes: list[int]):
        table = load_scaling()
        a, b, c = nodes
        joined = compose_transitions(a, b, table).then(compose_transitions(b, c, table))
        direct = compose_transitions(a, c, table)
        assert joined.density == pytest.approx(direct.density)
        assert joined.performance == pytest.approx(direct.performance)
        assert joined.power == pytest.approx(direct.power)

    @given(pair=st.lists(st.sampled_from(CANONICAL_CHAIN), min_size=2, max_size=2, unique=True))
    def test_shrinking_nodes_scale_up(self, pair: list[int]):
        src, dst = max(pair), min(pair)
        f = compose_transitions(src, dst, load_scaling())
        assert f.density >= 1
        assert f.performance >= 1
        assert 0 < f.power <= 1


class TestDram:
    def test_sunrise_ratio(self, table: ScalingTable):
        assert dram_density_ratio(table, "3x", "1y") == pytest.approx(5.925)

    def test_unknown_process(self, table: ScalingTable):
        with pytest.raises(UnknownNodeError, match="2z"):
            dram_density_ratio(table, "3x", "2z")


class TestProjectChip:
    def test_sunrise(self, chips: list[ChipSpec]):
        p = project_chip(find_chip(chips, "sunrise"))
        assert p.mode is ProjectionMode.PERFORMANCE
        assert p.metrics.capacity_per_area == pytest.approx(30.3, rel=1e-2)
        assert p.metrics.bandwidth_per_area == pytest.approx(216, rel=1e-2)
        assert abs(p.metrics.perf_per_area - 7.58) / 7.58 <= 0.15
        assert p.metrics.energy_efficiency == pytest.approx(25.8, rel=1e-2)

    def test_chip_c_is_identity(self, chips: list[ChipSpec]):
        chip = find_chip(chips, "chip-c")
        p = project_chip(chip)
        base = normalize_per_area(chip)
        assert p.metrics.perf_per_area == pytest.approx(base.perf_per_area)
        assert p.metrics.bandwidth_per_area == pytest.approx(base.bandwidth_per_area)
        assert p.metrics.capacity_per_area == pytest.approx(base.capacity_per_area)
        assert p.metrics.energy_efficiency == pytest.approx(base.energy_efficiency)

    def test_chip_b_power_mode(self, chips: list[ChipSpec]):
        p = project_chip(find_chip(chips, "chip-b"))
        assert p.mode is ProjectionMode.POWER
        assert p.metrics.bandwidth_per_area is None
        assert p.metrics.perf_per_area == pytest.approx(125 / 709 * 2.75)

    def test_chip_a_capacity_follows_cmos(self, chips: list[ChipSpec]):
        p = project_chip(find_chip(chips, "chip-a"))
        assert p.metrics.capacity_per_area == pytest.approx(0.375 * 3.3)

    def test_cap_switches_mode(self, chips: list[ChipSpec]):
        sunrise = find_chip(chips, "sunrise")
        p = project_chip(sunrise, policy=PowerPolicy(power_density_cap=0.1))
        assert p.mode is ProjectionMode.POWER
        assert p.metrics.perf_per_area == pytest.approx(25 / 110 * 13.2)

    def test_identity_target(self, chips: list[ChipSpec]):
        sunrise = find_chip(chips, "sunrise")
        p = project_chip(sunrise, target_cmos=40, target_dram="3x")
        base = normalize_per_area(sunrise)
        assert p.metrics.perf_per_area == pytest.approx(base.perf_per_area)
        assert p.metrics.capacity_per_area == pytest.approx(base.capacity_per_area)
        assert p.metrics.energy_efficiency == pytest.approx(base.energy_efficiency)

    def test_missing_dram_process(self, chips: list[ChipSpec]):
        with pytest.raises(UnknownNodeError):
            project_chip(find_chip(chips, "sunrise"), target_dram="2a")


class TestCapacityNarrative:
    def test_large_die_capacity(self, chips: list[ChipSpec]):
        metrics = project_chip(find_chip(chips, "sunrise")).metrics
        megabytes = capacity_at_area(metrics, 800)
        assert megabytes == pytest.approx(24_000, rel=0.02)
        assert parameter_capacity(megabytes * 1e6, 2) == pytest.approx(12e9, rel=0.02)

    def test_dram_equivalent(self, chips: list[ChipSpec]):
        metrics = normalize_per_area(find_chip(chips, "chip-a"))
        assert dram_equivalent_capacity(metrics) == pytest.approx(0.375 * 14)

    def test_outlook_on_large_die(self, chips: list[ChipSpec]):
        sunrise = find_chip(chips, "sunrise")
        outlook = capacity_outlook(sunrise, project_chip(sunrise), die_area=800)
        assert outlook.capacity == pytest.approx(24_000, rel=0.02)
        assert outlook.parameters == pytest.approx(12e9, rel=0.02)
        assert outlook.dram_equivalent_capacity_per_area is None

    def test_outlook_defaults_to_own_die(self, chips: list[ChipSpec]):
        chip_c = find_chip(chips, "chip-c")
        projection = project_chip(chip_c)
        outlook = capacity_outlook(chip_c, projection)
        assert outlook.die_area == 456
        assert outlook.capacity == pytest.approx(32)
        assert outlook.parameters == pytest.approx(16e6)

    @pytest.mark.parametrize("ratio", [14, 99])
    def test_outlook_uses_density_ratio(self, chips: list[ChipSpec], ratio: float):
        chip_a = find_chip(chips, "chip-a")
        projection = project_chip(chip_a)
        outlook = capacity_outlook(chip_a, projection, dram_sram_ratio=ratio)
        assert outlook.dram_equivalent_capacity_per_area == pytest.approx(
            projection.metrics.capacity_per_area * ratio
        )

    def test_outlook_rejects_bad_area(self, chips: list[ChipSpec]):
        sunrise = find_chip(chips, "sunrise")
        with pytest.raises(ValueError):
            capacity_outlook(sunrise, project_chip(sunrise), die_area=0)

    def test_config_error_is_domain_error(self):
        assert issubclass(ConfigError, SunriseSimError)
