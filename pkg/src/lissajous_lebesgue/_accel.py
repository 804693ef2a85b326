"""
Hot loops: tensor Chebyshev basis evaluation, Lebesgue-function scans and
direct Dirichlet sums.

Each kernel has a numba version and a pure-numpy version.  The numba path is
used when numba imports and the environment variable
``LISSAJOUS_LEBESGUE_BACKEND`` is not set to ``numpy``.  Both paths compute
every point independently, so results do not depend on thread count.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
    HAS_NUMBA = True
    # skip the TBB probe; an outdated system TBB only produces a warning
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

ENV_FLAG = "LISSAJOUS_LEBESGUE_BACKEND"
_CHUNK = 4096


def _initial_backend() -> str:
    want = os.environ.get(ENV_FLAG, "numba").strip().lower()
    if want not in ("numba", "numpy"):
        raise ValueError(f"{ENV_FLAG} must be 'numba' or 'numpy', got {want!r}")
    return "numba" if (want == "numba" and HAS_NUMBA) else "numpy"


_backend = _initial_backend()


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    """Switch between ``"numba"`` and ``"numpy"`` at runtime (used by benchmarks)."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba is not available")
    _backend = name


def set_threads(n: int | None) -> None:
    if n is not None and HAS_NUMBA:
        numba.set_num_threads(max(1, min(int(n), numba.config.NUMBA_NUM_THREADS)))


# ---------------------------------------------------------------------------
# numpy reference versions

def _basis_numpy(gam: np.ndarray, theta: np.ndarray) -> np.ndarray:
    # T_gamma(cos theta) = prod_j cos(gamma_j theta_j); shape (len(gam), len(theta))
    out = np.ones((gam.shape[0], theta.shape[0]))
    for j in range(gam.shape[1]):
        out *= np.cos(np.multiply.outer(gam[:, j].astype(np.float64), theta[:, j]))
    return out


def _lebesgue_numpy(coef: np.ndarray, gam: np.ndarray, theta: np.ndarray) -> np.ndarray:
    out = np.empty(theta.shape[0])
    for a in range(0, theta.shape[0], _CHUNK):
        basis = _basis_numpy(gam, theta[a:a + _CHUNK])
        out[a:a + _CHUNK] = np.abs(coef @ basis).sum(axis=0)
    return out


def _dirichlet_numpy(gam: np.ndarray, t: np.ndarray) -> np.ndarray:
    out = np.empty(t.shape[0], dtype=np.complex128)
    g = gam.astype(np.float64)
    for a in range(0, t.shape[0], _CHUNK):
        out[a:a + _CHUNK] = np.exp(1j * (t[a:a + _CHUNK] @ g.T)).sum(axis=1)
    return out


# ---------------------------------------------------------------------------
# numba versions

if HAS_NUMBA:

    @numba.njit(cache=True)
    def _cos_tables(gam, th):
        d = gam.shape[1]
        kmax = 0
        for i in range(gam.shape[0]):
            for j in range(d):
                if gam[i, j] > kmax:
                    kmax = gam[i, j]
        tab = np.empty((d, kmax + 1))
        for j in range(d):
            for k in range(kmax + 1):
                tab[j, k] = np.cos(k * th[j])
        return tab

    @numba.njit(cache=True, parallel=True)
    def _basis_numba(gam, theta):
        ng, d = gam.shape
        npts = theta.shape[0]
        out = np.empty((ng, npts))
        for p in numba.prange(npts):
            tab = _cos_tables(gam, theta[p])
            for i in range(ng):
                v = 1.0
                for j in range(d):
                    v *= tab[j, gam[i, j]]
                out[i, p] = v
        return out

    @numba.njit(cache=True, parallel=True)
    def _lebesgue_numba(coef, gam, theta):
        # blocks of points: basis from per-point cosine tables, then one BLAS product
        ng, d = gam.shape
        npts = theta.shape[0]
        block = 256
        nblocks = (npts + block - 1) // block
        out = np.empty(npts)
        for b in numba.prange(nblocks):
            a = b * block
            e = min(a + block, npts)
            basis = np.empty((ng, e - a))
            for p in range(a, e):
                tab = _cos_tables(gam, theta[p])
                for i in range(ng):
                    v = 1.0
                    for j in range(d):
                        v *= tab[j, gam[i, j]]
                    basis[i, p - a] = v
            vals = np.dot(coef, basis)
            for p in range(e - a):
                acc = 0.0
                for r in range(vals.shape[0]):
                    acc += abs(vals[r, p])
                out[a + p] = acc
        return out

    @numba.njit(cache=True, parallel=True)
    def _dirichlet_numba(gam, t):
        ng, d = gam.shape
        npts = t.shape[0]
        out = np.empty(npts, dtype=np.complex128)
        for p in numba.prange(npts):
            re = 0.0
            im = 0.0
            for i in range(ng):
                ph = 0.0
                for j in range(d):
                    ph += gam[i, j] * t[p, j]
                re += np.cos(ph)
                im += np.sin(ph)
            out[p] = re + 1j * im
        return out


# ---------------------------------------------------------------------------
# dispatch

def _prep(gam, pts):
    gam = np.ascontiguousarray(gam, dtype=np.int64)
    pts = np.ascontiguousarray(np.atleast_2d(pts), dtype=np.float64)
    if pts.shape[1] != gam.shape[1]:
        raise ValueError(f"points have dimension {pts.shape[1]}, exponents {gam.shape[1]}")
    return gam, pts


def chebyshev_basis(gam: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """Matrix ``T[k, p] = prod_j cos(gam[k, j] * theta[p, j])``.

    `gam` must be non-negative.
    """
    gam, theta = _prep(gam, theta)
    if _backend == "numba" and len(gam):
        return _basis_numba(gam, theta)
    return _basis_numpy(gam, theta)


def lebesgue_function(coef: np.ndarray, gam: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """``sum_r |sum_k coef[r, k] T_k(cos theta_p)|`` for every row p of `theta`."""
    gam, theta = _prep(gam, theta)
    coef = np.ascontiguousarray(coef, dtype=np.float64)
    if _backend == "numba":
        return _lebesgue_numba(coef, gam, theta)
    return _lebesgue_numpy(coef, gam, theta)


def dirichlet_sum(gam: np.ndarray, t: np.ndarray) -> np.ndarray:
    """``sum_k exp(i <gam[k], t_p>)`` for every row p of `t`."""
    gam, t = _prep(gam, t)
    if _backend == "numba":
        return _dirichlet_numba(gam, t)
    return _dirichlet_numpy(gam, t)
