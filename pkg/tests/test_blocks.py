from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slkcheck.blocks import (
    block_count,
    content,
    count_simples,
    enumerate_compositions,
    lower_at,
    mu_weight,
    orbit_classes,
    partitions,
    raise_at,
    tuple_count,
    tuples_in_block,
    weight_space_dim,
)


def test_enumerate_compositions():
    assert enumerate_compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert enumerate_compositions(0, 3) == [(0, 0, 0)]
    assert len(enumerate_compositions(3, 2)) == 4
    for n in range(7):
        for k in (1, 2, 3):
            comps = enumerate_compositions(n, k)
            assert len(comps) == block_count(n, k) == comb(n + k - 1, k - 1)
            assert len(set(comps)) == len(comps)
            assert all(sum(a) == n and len(a) == k and min(a) >= 0 for a in comps)


def test_raise_and_lower():
    assert raise_at((1, 1), 1) == (2, 0)
    assert raise_at((2, 0), 1) is None
    assert raise_at((1, 1, 1), 2) == (1, 2, 0)
    assert lower_at((2, 0), 1) == (1, 1)
    assert lower_at((0, 2), 1) is None
    assert lower_at((1, 2), 1) == (0, 3)
    with pytest.raises(IndexError):
        raise_at((1, 1), 2)


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=2, max_value=4),
       st.data())
def test_raise_lower_inverse(n, k, data):
    comps = enumerate_compositions(n, k)
    a = data.draw(st.sampled_from(comps))
    i = data.draw(st.integers(min_value=1, max_value=k - 1))
    up = raise_at(a, i)
    if up is not None:
        assert lower_at(up, i) == a
    down = lower_at(a, i)
    if down is not None:
        assert raise_at(down, i) == a


def test_mu_weight():
    assert mu_weight((1, 1)) == (-1, -2)
    assert mu_weight((2, 0)) == (-1, -1)
    assert mu_weight((0, 2)) == (-2, -2)


def test_tuples_in_block():
    assert tuples_in_block((1, 1)) == [(1, 2), (2, 1)]
    assert tuples_in_block((2, 0)) == [(1, 1)]
    assert len(tuples_in_block((1, 1, 1))) == 6
    for a in enumerate_compositions(4, 3):
        ts = tuples_in_block(a)
        assert len(ts) == tuple_count(a)
        assert ts == sorted(ts)
        assert all(content(r, 3) == a for r in ts)


def test_orbit_classes_extremes():
    for a in enumerate_compositions(4, 2):
        assert count_simples((4,), a) == 1
        assert count_simples((1, 1, 1, 1), a) == tuple_count(a)


def test_orbit_classes_partition_property():
    for a in enumerate_compositions(3, 2):
        classes = orbit_classes((2, 1), a)
        flat = [r for cls in classes for r in cls]
        assert sorted(flat) == tuples_in_block(a)


def test_count_simples_2_1():
    lam = (2, 1)
    counts = [count_simples(lam, (3 - r, r)) for r in range(4)]
    assert counts == [1, 2, 2, 1]


def test_weight_space_dims():
    assert [weight_space_dim((2, 1), 2, (3 - r, r)) for r in range(4)] == [1, 2, 2, 1]
    assert weight_space_dim((3,), 3, (1, 1, 1)) == 1
    assert weight_space_dim((1, 1, 1), 3, (1, 1, 1)) == 6
    assert count_simples((1, 1, 1), (1, 1, 1)) == 6


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]


def test_counts_match_dims_small():
    for n in range(1, 6):
        for k in (2, 3):
            comps = enumerate_compositions(n, k)
            for lam in partitions(n):
                for a in comps:
                    assert count_simples(lam, a) == weight_space_dim(lam, k, a), (lam, a)


def test_dim_sum_is_product_dimension():
    # sum over all blocks of the weight-space dims = prod dim S^{lam_j}C^k
    for n in (3, 4):
        for k in (2, 3):
            for lam in partitions(n):
                total = sum(weight_space_dim(lam, k, a) for a in enumerate_compositions(n, k))
                expect = 1
                for part in lam:
                    expect *= comb(part + k - 1, k - 1)
                assert total == expect
