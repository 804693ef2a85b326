"""
Compare the numba and numpy backends on the three hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--grid 256]

Each kernel is run once per backend to warm up (numba compiles on first
call), then timed; the table reports the best of `--repeat` runs and the
largest absolute difference between the two backends' outputs.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lissajous_lebesgue import _accel
from lissajous_lebesgue.chebinterp import interpolator
from lissajous_lebesgue.lattice import Config, gamma_bar, symmetrize


def _best_time(fn, repeat: int) -> tuple[float, np.ndarray]:
    out = fn()
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(grid: int):
    it = interpolator(Config(2, (12, 13)))
    axis = np.linspace(0.0, np.pi, grid)
    theta = np.stack(np.meshgrid(axis, axis, indexing="ij"), axis=-1).reshape(-1, 2)
    gam = it.gamma.points
    sym = symmetrize(gamma_bar((16, 16))).points
    rng = np.random.default_rng(0)
    t = rng.uniform(-np.pi, np.pi, size=(grid * grid // 4, 2))
    return [
        (f"chebyshev_basis |G|={len(gam)} pts={len(theta)}", lambda: _accel.chebyshev_basis(gam, theta)),
        (f"lebesgue_function |G|={len(gam)} pts={len(theta)}",
         lambda: _accel.lebesgue_function(it.coef, gam, theta)),
        (f"dirichlet_sum |S|={len(sym)} pts={len(t)}", lambda: _accel.dirichlet_sum(sym, t)),
    ]


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--grid", type=int, default=256)
    args = ap.parse_args(argv)
    if not _accel.HAS_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    before = _accel.get_backend()
    print(f"{'kernel':<48} {'numpy s':>10} {'numba s':>10} {'speedup':>8} {'max diff':>10}")
    try:
        for name, fn in cases(args.grid):
            _accel.set_backend("numpy")
            t_np, ref = _best_time(fn, args.repeat)
            _accel.set_backend("numba")
            t_nb, got = _best_time(fn, args.repeat)
            diff = float(np.max(np.abs(ref - got)))
            print(f"{name:<48} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.2f} {diff:>10.2e}")
    finally:
        _accel.set_backend(before)


if __name__ == "__main__":
    main()
