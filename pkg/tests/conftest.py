from __future__ import annotations

import math
import os

import numpy as np
import pytest

from lissajous_lebesgue.lattice import Config

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def random_configs(count: int, seed: int, max_prod: int = 10**4, dims=(1, 2, 3), max_n: int = 12):
    """Random valid Configs with prod(eps n_i + 1) <= max_prod."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        d = int(rng.choice(dims))
        eps = int(rng.integers(1, 3))
        n = tuple(int(v) for v in rng.integers(1, max_n + 1, size=d))
        if any(math.gcd(a, b) != 1 for i, a in enumerate(n) for b in n[i + 1:]):
            continue
        if math.prod(eps * v + 1 for v in n) > max_prod:
            continue
        kappa = tuple(int(v) for v in rng.integers(0, 2, size=d))
        out.append(Config(eps, n, kappa))
    return out


@pytest.fixture(scope="session")
def config_suite():
    """Fixed suite of 50 Configs with at most 2000 nodes, shared by several tests.

    Frequencies are drawn log-uniformly per dimension so that the suite spans
    tiny configurations up to the node cap.
    """
    from lissajous_lebesgue.lattice import gamma_set

    rng = np.random.default_rng(2024)
    top = {1: 1000, 2: 64, 3: 16}
    out = []
    while len(out) < 50:
        d = len(out) % 3 + 1
        n = tuple(int(v) for v in np.exp(rng.uniform(0, math.log(top[d]), size=d)).round())
        if any(math.gcd(a, b) != 1 for i, a in enumerate(n) for b in n[i + 1:]):
            continue
        cfg = Config(int(rng.integers(1, 3)), n, tuple(int(v) for v in rng.integers(0, 2, size=d)))
        if len(gamma_set(cfg)) <= 2000:
            out.append(cfg)
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        name, ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {k:2d}. {name}: {detail}")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running checks")
    os.environ.setdefault("NUMBA_DISABLE_PERFORMANCE_WARNINGS", "1")
