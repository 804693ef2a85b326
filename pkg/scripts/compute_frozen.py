"""
Compute the frozen regression constants from the brute-force oracles in
tests/oracles.py and write them to tests/frozen.py.

    python3 scripts/compute_frozen.py

Run once; the tests then check the library against these numbers.
"""

from __future__ import annotations

import math
import pprint
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402

# sweeps shared with the tests
DISCRETE_FAMILY = [(k, k + 1) for k in range(1, 13)]
GAMMABAR_M = [2, 4, 8, 16]
MZ_SWEEP = ([(eps, (n,), None) for eps in (1, 2) for n in range(1, 13)]
            + [(eps, (k, k + 1), kap) for eps in (1, 2) for k in range(1, 9)
               for kap in ((0, 0), (0, 1))]
            + [(eps, n, None) for eps in (1, 2) for n in ((1, 2, 3), (2, 3, 5))])
H_NU = [1, 2, 3]
H_M = list(range(2, 33))
H_CUTOFF_FACTOR = 16


def spread(vals):
    return max(vals) / min(vals)


def main() -> None:
    t0 = time.perf_counter()
    out: dict[str, object] = {}

    out["DISCRETE_N12"] = oracles.lebesgue_oracle_max(2, (1, 2), None, grid=2001)
    print("discrete n=(1,2):", out["DISCRETE_N12"], flush=True)

    ratios = []
    for n in DISCRETE_FAMILY:
        lam = oracles.lebesgue_oracle_max(2, n, None, grid=1001)
        ratios.append(lam / (math.log(n[0] + 1) * math.log(n[1] + 1)))
        print("  discrete", n, lam, flush=True)
    out["DISCRETE_RATIOS"] = ratios
    out["DISCRETE_SPREAD"] = spread(ratios)

    grid_ratios = {}
    for m1 in GAMMABAR_M:
        for m2 in GAMMABAR_M:
            pts = oracles.gamma_bar_oracle((m1, m2))
            val = oracles.fourier_oracle(pts, 2048)
            grid_ratios[(m1, m2)] = val / (math.log(m1 + 1) * math.log(m2 + 1))
    out["GAMMABAR_RATIOS"] = grid_ratios
    out["GAMMABAR_SPREAD"] = spread(list(grid_ratios.values()))
    out["GAMMABAR_DIAG_SPREAD"] = spread([grid_ratios[(m, m)] for m in GAMMABAR_M])
    print("gammabar spreads:", out["GAMMABAR_SPREAD"], out["GAMMABAR_DIAG_SPREAD"], flush=True)

    mz = {(eps, n, kap): oracles.mz_ratio_p2_oracle(eps, n, kap, 100) for eps, n, kap in MZ_SWEEP}
    out["MZ_VALUES"] = mz
    out["MZ_CONSTANT"] = max(mz.values())
    print("MZ constant:", out["MZ_CONSTANT"], flush=True)

    hr = {}
    for nu in H_NU:
        for m in H_M:
            cutoff = H_CUTOFF_FACTOR * m * nu
            a = 1.0 - 1.0 / m
            tail = 2.0 * (nu * a ** (nu - 1) + m * a**nu) / (2.0 * math.pi**2 * cutoff)
            hr[(nu, m)] = (oracles.h_abs_sum_oracle(nu, m, cutoff) + tail) / math.log(m * nu + 1)
    out["H_RATIOS"] = hr
    out["H_CONSTANT"] = max(hr.values())
    print("h constant:", out["H_CONSTANT"], flush=True)

    lines = ['"""Frozen regression constants written by scripts/compute_frozen.py; do not edit."""',
             "", "# fmt: off"]
    for name in ("DISCRETE_FAMILY", "GAMMABAR_M", "MZ_SWEEP", "H_NU", "H_M", "H_CUTOFF_FACTOR"):
        lines.append(f"{name} = {pprint.pformat(globals()[name], width=100, compact=True)}")
    for name, value in out.items():
        lines.append(f"{name} = {pprint.pformat(value, width=100, compact=True)}")
    (ROOT / "tests" / "frozen.py").write_text("\n".join(lines) + "\n")
    print(f"wrote tests/frozen.py in {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
