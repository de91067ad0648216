"""Tests for pooled DRAM bandwidth and capacity."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from sunrisesim.unimem import (
    DramArrayPool,
    arrays_to_saturate,
    pool_capacity,
    round_robin_bandwidth,
    sustained_bandwidth,
)

UNBOUNDED_BUS = 1e9

ARRAY_COUNTS = [1, 2, 3, 5, 8, 16, 64]
LATENCIES = [1, 2, 4, 7, 32, 64]
WORDS = [1, 4, 16]


def pool(k: int, latency: int, word: int, bus: float = UNBOUNDED_BUS, **kw) -> DramArrayPool:
    return DramArrayPool(array_count=k, array_latency=latency, word_bytes=word, bus_limit=bus, **kw)


class TestSustainedBandwidth:
    def test_single_fast_array(self):
        assert sustained_bandwidth(pool(1, 1, 16, bus=1e6)) == 16

    def test_interleaved(self):
        assert sustained_bandwidth(pool(64, 32, 16)) == 32

    def test_bus_cap(self):
        assert sustained_bandwidth(pool(64, 32, 16, bus=16)) == 16

    def test_refresh_derating(self):
        assert sustained_bandwidth(pool(64, 32, 16, refresh_derating=0.9)) == pytest.approx(28.8)

    def test_invalid_pool(self):
        with pytest.raises(ValidationError):
            pool(0, 32, 16)
        with pytest.raises(ValidationError):
            pool(1, 32, 16, bus=0)

    @given(
        k=st.integers(min_value=1, max_value=256),
        latency=st.integers(min_value=1, max_value=128),
        word=st.integers(min_value=1, max_value=128),
        bus=st.floats(min_value=0.5, max_value=1e4),
    )
    def test_monotone_and_capped(self, k: int, latency: int, word: int, bus: float):
        base = sustained_bandwidth(pool(k, latency, word, bus))
        assert base <= bus
        assert sustained_bandwidth(pool(k + 1, latency, word, bus)) >= base
        assert sustained_bandwidth(pool(k, latency, word + 1, bus)) >= base
        assert sustained_bandwidth(pool(k, latency + 1, word, bus)) <= base


class TestRoundRobinOracle:
    @pytest.mark.parametrize(
        ("k", "latency", "word"), list(itertools.product(ARRAY_COUNTS, LATENCIES, WORDS))
    )
    def test_matches_uncapped(self, k: int, latency: int, word: int):
        p = pool(k, latency, word)
        oracle = round_robin_bandwidth(p)
        assert oracle == Fraction(k * word, latency)
        assert float(oracle) == sustained_bandwidth(p)

    @pytest.mark.parametrize(
        ("k", "latency", "word"),
        [(8, 4, 16), (16, 2, 4), (64, 32, 16), (64, 64, 64), (39, 1, 4), (5, 1, 16)],
    )
    def test_matches_capped(self, k: int, latency: int, word: int):
        bus = k * word / latency / 4
        p = pool(k, latency, word, bus)
        assert float(round_robin_bandwidth(p)) == sustained_bandwidth(p) == bus

    def test_needs_two_periods(self):
        with pytest.raises(ValueError):
            round_robin_bandwidth(pool(1, 1, 1), periods=1)


class TestArraysToSaturate:
    def test_zero_demand(self):
        assert arrays_to_saturate(0, 64, 16) == 0

    def test_inverse_of_interleaving(self):
        assert arrays_to_saturate(32, 32, 16) == 64

    def test_one_array(self):
        assert arrays_to_saturate(16 / 64, 64, 16) == 1

    def test_negative_demand(self):
        with pytest.raises(ValueError):
            arrays_to_saturate(-1, 1, 1)

    @pytest.mark.parametrize(
        ("demand", "latency", "word"),
        list(itertools.product([0.5, 1, 3, 7.5, 16], [1, 3, 16, 64], [1, 8, 64])),
    )
    def test_ceiling_meets_demand(self, demand: float, latency: int, word: int):
        arrays = arrays_to_saturate(demand, latency, word)
        assert round_robin_bandwidth(pool(arrays, latency, word)) >= Fraction(demand)
        if arrays > 1:
            assert round_robin_bandwidth(pool(arrays - 1, latency, word)) < Fraction(demand)


class TestPoolCapacity:
    def test_zero_capacity(self):
        assert pool_capacity(pool(8, 64, 64, array_capacity=0)) == 0

    def test_product(self):
        assert pool_capacity(pool(64, 64, 64, array_capacity=131_072)) == 8_388_608

    def test_two_pools_add(self):
        p = pool(39, 64, 64, array_capacity=40_960)
        assert 2 * pool_capacity(p) == pool_capacity(p.model_copy(update={"array_count": 78}))
