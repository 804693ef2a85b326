from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import random_configs
from lissajous_lebesgue.errors import ValidationError
from lissajous_lebesgue.lattice import (Config, IndexSet, Rel, as_rational, gamma_bar,
                                        gamma_bar_partition, gamma_parity_parts, gamma_set, reflect,
                                        sigma_set, symmetrize, xi_set)


def pts(s: IndexSet):
    return s.tolist()


# ---------------------------------------------------------------------------
# Config and Rational

def test_config_validation():
    with pytest.raises(ValidationError):
        Config(2, (2, 4))
    with pytest.raises(ValidationError):
        Config(2, ())
    with pytest.raises(ValidationError):
        Config(3, (1, 2))
    assert Config(2, (1, 2), (3, -2)).parity == (1, 0)


def test_as_rational():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(0.4) == Fraction(2, 5)
    assert as_rational(7) == 7
    with pytest.raises(ValidationError):
        as_rational("1/0")
    with pytest.raises(ValidationError):
        as_rational(float("nan"))


# ---------------------------------------------------------------------------
# documented examples

def test_gamma_set_examples():
    assert pts(gamma_set(Config(2, (1, 2), (0, 0)))) == [
        (0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 1), (1, 2)]
    assert pts(gamma_set(Config(2, (1,), (0,)))) == [(0,), (1,), (2,)]
    assert pts(gamma_set(Config(1, (1, 1), (0, 1)))) == [(0, 0), (0, 1)]


def test_gamma_parity_parts_examples():
    p0, p1 = gamma_parity_parts(Config(2, (1,), (0,)))
    assert pts(p0) == [(0,), (1,)] and pts(p1) == [(0,)]
    cfg = Config(2, (1, 2), (0, 0))
    p0, _ = gamma_parity_parts(cfg)
    assert len(p0) == 6 and pts(p0) == [(a, b) for a in range(2) for b in range(3)]


def test_parity_parts_are_subsets():
    for cfg in random_configs(40, seed=5):
        full = set(pts(gamma_set(cfg)))
        for part in gamma_parity_parts(cfg):
            assert set(pts(part)) <= full


def test_gamma_bar_examples():
    assert pts(gamma_bar((2, 2))) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]
    assert pts(gamma_bar((1,))) == [(0,), (1,)]
    assert pts(gamma_bar((5, 10, 5))) == oracles.gamma_bar_oracle((5, 10, 5))
    with pytest.raises(ValidationError):
        gamma_bar(())


def test_sigma_set_examples():
    assert sigma_set((2, 2), 1) == gamma_bar((2, 2))
    assert pts(sigma_set((3,), 1)) == [(0,), (1,), (2,), (3,)]
    assert pts(sigma_set((5, 10, 5), 1)) == oracles.sigma_oracle((5, 10, 5), 1)
    with pytest.raises(ValidationError):
        sigma_set((2, 2), 0)


def test_xi_set_examples():
    assert pts(xi_set((2, 3), 0, 1)) == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (2, 3)]
    assert pts(xi_set((4,), 0, 1, rels=("LE", "LE"))) == [(0,), (1,), (2,), (3,), (4,)]
    assert pts(xi_set((2, 2), 0, 1, rels=(Rel.LE, Rel.EQ, Rel.LE))) == [(0, 0), (1, 1), (2, 2)]
    with pytest.raises(ValidationError):
        xi_set((2, 2), 1, 0)
    with pytest.raises(ValidationError):
        xi_set((2, 2), 0, 1, perm=(0, 0))


def test_xi_set_perm_and_strict():
    # 0 <= g0/2 < g1/3 <= 1 with the chain running through axis 1 first
    got = pts(xi_set((2, 3), 0, 1, perm=(1, 0), rels=("LE", "LT", "LE")))
    want = oracles.box_filter([2, 3], lambda g: Fraction(g[0], 2) < Fraction(g[1], 3))
    assert got == want


def test_symmetrize_examples():
    assert pts(symmetrize(IndexSet([(1, 0)]))) == [(-1, 0), (1, 0)]
    assert pts(symmetrize(IndexSet([(0, 0)]))) == [(0, 0)]
    s = symmetrize(gamma_bar((2, 2)))
    assert pts(s) == oracles.symmetrize_oracle(pts(gamma_bar((2, 2))))
    assert s == symmetrize(sigma_set((2, 2), 1))


def test_reflect_examples():
    assert pts(reflect((4,), 0, IndexSet([0, 1]))) == [(3,), (4,)]
    assert pts(reflect((2, 3), 1, IndexSet([(1, 0)]))) == [(1, 3)]
    with pytest.raises(ValidationError):
        reflect((2, 3), 2, IndexSet([(1, 0)]))


def test_partition_examples():
    center, pieces = gamma_bar_partition((2, 2))
    assert pts(center) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    center, pieces = gamma_bar_partition((1,))
    assert pts(center) == [(0,)]
    assert [(p.subset, p.axis, pts(p.part)) for p in pieces] == [(frozenset({0}), 0, [(1,)])]


# ---------------------------------------------------------------------------
# invariants

def test_gamma_set_matches_box_filter():
    for cfg in random_configs(60, seed=11, max_prod=5000):
        assert pts(gamma_set(cfg)) == oracles.gamma_oracle(cfg.eps, cfg.freq, cfg.parity), cfg


@pytest.mark.parametrize("m", [(1, 1), (3, 5), (6, 4), (7,), (2, 3, 4), (5, 1, 3), (4, 4, 4, 2)])
def test_generators_match_box_filter(m):
    assert pts(gamma_bar(m)) == oracles.gamma_bar_oracle(m)
    for r in (Fraction(1, 2), 1, Fraction(5, 3)):
        assert pts(sigma_set(m, r)) == oracles.sigma_oracle(m, r)


def test_xi_set_matches_box_filter():
    rng = np.random.default_rng(3)
    for _ in range(20):
        d = int(rng.integers(1, 4))
        m = tuple(int(v) for v in rng.integers(1, 9, size=d))
        a, b = sorted(Fraction(int(rng.integers(-4, 9)), int(rng.integers(1, 5))) for _ in range(2))
        assert pts(xi_set(m, a, b)) == oracles.xi_oracle(m, a, b), (m, a, b)


def test_large_keys_fall_back_to_python_ints():
    # lcm of these exceeds the int64-safe range for the scaled keys
    m = (2**31 - 1, 2**31 - 19)
    assert len(sigma_set(m, Fraction(1, 2**30))) == len(oracles.box_filter(
        [1, 1], lambda g: Fraction(g[0], m[0]) + Fraction(g[1], m[1]) <= Fraction(1, 2**30)))


def test_symmetrize_idempotent_and_permutation_commuting():
    rng = np.random.default_rng(7)
    for _ in range(15):
        d = int(rng.integers(1, 4))
        m = tuple(int(v) for v in rng.integers(1, 7, size=d))
        s = gamma_bar(m)
        sym = symmetrize(s)
        assert symmetrize(sym) == sym
        perm = rng.permutation(d)
        permuted = IndexSet(s.points[:, perm])
        assert symmetrize(permuted) == IndexSet(sym.points[:, perm])
        assert IndexSet(gamma_bar(tuple(m[p] for p in perm)).points) == permuted


@pytest.mark.parametrize("m1", range(1, 13))
def test_d2_gamma_bar_equals_sigma(m1):
    for m2 in range(1, 13):
        assert gamma_bar((m1, m2)) == sigma_set((m1, m2), 1)
        assert symmetrize(gamma_bar((m1, m2))) == symmetrize(sigma_set((m1, m2), 1))


def _check_partition(m):
    center, pieces = gamma_bar_partition(m)
    parts = [center] + [p.part for p in pieces]
    total = sum(len(p) for p in parts)
    union = center.union(*[p.part for p in pieces])
    assert union == gamma_bar(m)
    assert total == len(gamma_bar(m))
    for a, b in itertools.combinations(parts, 2):
        assert a.isdisjoint(b)


@pytest.mark.parametrize("m", [(2, 2), (1,), (5,), (3, 7), (4, 6, 5), (2, 2, 2, 3)])
def test_partition_disjoint_cover(m):
    _check_partition(m)


def test_partition_order():
    _, pieces = gamma_bar_partition((3, 3, 3))
    keys = [(sum(1 << i for i in p.subset), p.axis) for p in pieces]
    assert keys == sorted(keys)


def test_reflect_involution():
    s = gamma_bar((3, 5, 2))
    for k in range(3):
        assert reflect((3, 5, 2), k, reflect((3, 5, 2), k, s)) == s


# ---------------------------------------------------------------------------
# IndexSet behaviour and serialisation

def test_indexset_dedup_and_order():
    s = IndexSet([(1, 0), (0, 5), (1, 0), (-1, 2)])
    assert pts(s) == [(-1, 2), (0, 5), (1, 0)]
    assert (0, 5) in s and (5, 0) not in s
    assert not s.points.flags.writeable
    with pytest.raises(ValidationError):
        IndexSet([])


point_lists = st.integers(1, 4).flatmap(lambda d: st.lists(
    st.lists(st.integers(-10**6, 10**6), min_size=d, max_size=d), max_size=40).map(lambda p: (d, p)))


@settings(max_examples=100, deadline=None)
@given(point_lists)
def test_serialisation_round_trip(case):
    d, points = case
    s = IndexSet(points, dim=d)
    assert IndexSet.from_json(s.to_json(), dim=d) == s
    assert IndexSet.from_text(s.to_text(), dim=d) == s
    assert len(s) == len({tuple(p) for p in points})


def test_json_format():
    assert IndexSet([(0, 1), (0, 0)]).to_json() == "[[0,0],[0,1]]"
    assert IndexSet([(0, 1), (0, 0)]).to_text() == "0 0\n0 1\n"
