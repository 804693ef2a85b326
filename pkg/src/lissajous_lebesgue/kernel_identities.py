"""
Dirichlet kernels of chain and simplex index sets, their decomposition
terms, and the auxiliary periodic function h.

For m in (0, inf)^d and r <= s the chain kernel is

    D(t) = sum exp(i <gamma, t>)  over  r <= gamma_d/m_d <= ... <= gamma_1/m_1 <= s.

Removing axis k leaves the (d-1)-dimensional chain set, whose kernel appears
three ways: plain (D0, the t_k entry dropped), "sharp" (the neighbour k-1
receives ``t_{k-1} + t_k m_k/m_{k-1}``) and "flat" (the neighbour k+1
receives ``t_{k+1} + t_k m_k/m_{k+1}``).  Summing the geometric series over
gamma_k exactly yields

    D = G_k + H_k + F_k,

where F collects the fractional-part phase corrections.  The simplex kernel
over sum gamma_i/m_i <= r splits the same way into G + F.

Every term is computed by direct summation over explicitly enumerated index
points; the recursions linking dimensions d and d-1 are evaluated separately
so that tests can compare the two.  Axes are 0-based.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import SingularPointError, ValidationError
from .lattice import as_rational

SINGULAR_GAP = 1e-6


@dataclass(frozen=True)
class XiKernelParams:
    """Dilations m (positive rationals) and chain endpoints r <= s."""

    m: tuple[Fraction, ...]
    r: Fraction
    s: Fraction

    def __post_init__(self):
        m = tuple(as_rational(v) for v in self.m)
        r, s = as_rational(self.r), as_rational(self.s)
        if not m:
            raise ValidationError("m must not be empty")
        if any(v <= 0 for v in m):
            raise ValidationError("entries of m must be positive")
        if r > s:
            raise ValidationError(f"r = {r} exceeds s = {s}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    @property
    def dim(self) -> int:
        return len(self.m)

    def without(self, k: int) -> XiKernelParams:
        return XiKernelParams(self.m[:k] + self.m[k + 1:], self.r, self.s)

    def with_ends(self, r, s) -> XiKernelParams:
        return XiKernelParams(self.m, r, s)


@dataclass(frozen=True)
class FracParts:
    """``down = x - floor(x)`` and ``up = ceil(x) - x``, exact."""

    down: Fraction
    up: Fraction


def frac_parts(x) -> FracParts:
    q = Fraction(x) if isinstance(x, float) else as_rational(x)
    return FracParts(q - math.floor(q), math.ceil(q) - q)


# ---------------------------------------------------------------------------
# index points by nested floor/ceil bounds

@functools.lru_cache(maxsize=4096)
def chain_points(m: tuple[Fraction, ...], r: Fraction, s: Fraction) -> np.ndarray:
    """Points of the chain set, generated coordinate by coordinate.

    gamma_1 runs over ceil(r m_1)..floor(s m_1); each further gamma_j over
    ceil(r m_j)..floor(gamma_{j-1} m_j / m_{j-1}).
    """
    d = len(m)
    rows: list[tuple[int, ...]] = []

    def walk(prefix: tuple[int, ...], upper: Fraction):
        j = len(prefix)
        if j == d:
            rows.append(prefix)
            return
        for g in range(math.ceil(r * m[j]), math.floor(upper * m[j]) + 1):
            walk(prefix + (g,), Fraction(g) / m[j])

    walk((), s)
    out = np.asarray(rows, dtype=np.int64).reshape(len(rows), d)
    out.setflags(write=False)
    return out


@functools.lru_cache(maxsize=4096)
def simplex_points(m: tuple[Fraction, ...], r: Fraction) -> np.ndarray:
    """Points gamma >= 0 with sum gamma_i / m_i <= r, generated by nested bounds."""
    d = len(m)
    rows: list[tuple[int, ...]] = []

    def walk(prefix: tuple[int, ...], left: Fraction):
        j = len(prefix)
        if j == d:
            rows.append(prefix)
            return
        for g in range(0, math.floor(left * m[j]) + 1):
            walk(prefix + (g,), left - Fraction(g) / m[j])

    walk((), r)
    out = np.asarray(rows, dtype=np.int64).reshape(len(rows), d)
    out.setflags(write=False)
    return out


def _phase_sum(pts: np.ndarray, t: np.ndarray, extra: np.ndarray | None = None) -> np.ndarray:
    """``sum_gamma exp(i <gamma, t_p>) * extra[gamma, p]`` for rows t_p of t."""
    if pts.shape[0] == 0:
        return np.zeros(t.shape[0], dtype=np.complex128)
    if pts.shape[1] == 0:
        ph = np.ones((1, t.shape[0]), dtype=np.complex128)
    else:
        ph = np.exp(1j * (pts.astype(np.float64) @ t.T))
    if extra is not None:
        ph = ph * extra
    return ph.sum(axis=0)


def _points_2d(t, dim: int) -> tuple[np.ndarray, bool]:
    tv = np.asarray(t, dtype=np.float64)
    single = tv.ndim == 1
    tv = np.atleast_2d(tv)
    if tv.shape[1] != dim:
        raise ValidationError(f"t must have dimension {dim}")
    return tv, single


def _out(values, single: bool):
    if single:
        return tuple(complex(v[0]) for v in values) if isinstance(values, tuple) else complex(values[0])
    return values


def _guard(tk: np.ndarray) -> np.ndarray:
    den = np.exp(1j * tk) - 1.0
    if np.any(np.abs(den) <= SINGULAR_GAP):
        raise SingularPointError(
            f"|exp(i t) - 1| <= {SINGULAR_GAP} at a decomposition axis; resample the point")
    return den


# ---------------------------------------------------------------------------
# chain kernels

def _kernel(p: XiKernelParams, t: np.ndarray) -> np.ndarray:
    return _phase_sum(chain_points(p.m, p.r, p.s), t)


def d_rs_eval(p: XiKernelParams, t):
    """Chain Dirichlet kernel at a point (or at the rows of an array)."""
    tv, single = _points_2d(t, p.dim)
    return _out(_kernel(p, tv), single)


def _sharp_args(p: XiKernelParams, k: int, t: np.ndarray) -> np.ndarray:
    red = np.delete(t, k, axis=1)
    red[:, k - 1] = t[:, k - 1] + t[:, k] * float(p.m[k] / p.m[k - 1])
    return red


def _flat_args(p: XiKernelParams, k: int, t: np.ndarray) -> np.ndarray:
    red = np.delete(t, k, axis=1)
    red[:, k] = t[:, k + 1] + t[:, k] * float(p.m[k] / p.m[k + 1])
    return red


def _sharp_correction(p: XiKernelParams, k: int, t: np.ndarray, den: np.ndarray) -> np.ndarray:
    red = p.without(k)
    pts = chain_points(red.m, red.r, red.s)
    ratio = p.m[k] / p.m[k - 1]
    frac = np.array([float(frac_parts(int(g) * ratio).down) for g in pts[:, k - 1]])
    corr = np.exp(-1j * np.multiply.outer(frac, t[:, k])) - 1.0
    ek = np.exp(1j * t[:, k])
    return ek / den * _phase_sum(pts, _sharp_args(p, k, t), corr)


def _flat_correction(p: XiKernelParams, k: int, t: np.ndarray, den: np.ndarray) -> np.ndarray:
    red = p.without(k)
    pts = chain_points(red.m, red.r, red.s)
    ratio = p.m[k] / p.m[k + 1]
    frac = np.array([float(frac_parts(int(g) * ratio).up) for g in pts[:, k]])
    corr = np.exp(1j * np.multiply.outer(frac, t[:, k])) - 1.0
    return _phase_sum(pts, _flat_args(p, k, t), corr) / den


def _terms_k(p: XiKernelParams, k: int, t: np.ndarray) -> dict[str, np.ndarray]:
    d = p.dim
    if d < 2:
        raise ValidationError("decompositions need dimension at least 2")
    if not 0 <= k < d:
        raise ValidationError(f"axis {k} out of range for dimension {d}")
    den = _guard(t[:, k])
    red = p.without(k)
    plain = _kernel(red, np.delete(t, k, axis=1))
    out = {"D": _kernel(p, t), "D0": plain}
    tk = t[:, k]
    if k > 0:
        out["Dsharp"] = _kernel(red, _sharp_args(p, k, t))
        out["Fsharp"] = _sharp_correction(p, k, t, den)
    if k < d - 1:
        out["Dflat"] = _kernel(red, _flat_args(p, k, t))
        out["Fflat"] = _flat_correction(p, k, t, den)
    if k == 0:
        top = math.floor(p.s * p.m[0]) + 1
        out["G"] = ((np.exp(1j * top * tk) - 1.0) * plain - (out["Dflat"] - plain)) / den
        out["H"] = np.zeros_like(plain)
        out["F"] = -out["Fflat"]
    elif k == d - 1:
        low = math.ceil(p.r * p.m[k])
        out["G"] = ((out["Dsharp"] - plain) - (np.exp(1j * low * tk) - 1.0) * plain) / den
        out["H"] = out["Dsharp"]
        out["F"] = out["Fsharp"]
    else:
        out["G"] = ((out["Dsharp"] - plain) - (out["Dflat"] - plain)) / den
        out["H"] = out["Dsharp"]
        out["F"] = out["Fsharp"] - out["Fflat"]
    return out


def decomposition_terms_k(p: XiKernelParams, k: int, t):
    """``(G_k, H_k, F_k)`` for axis k; their sum equals the chain kernel."""
    tv, single = _points_2d(t, p.dim)
    out = _terms_k(p, k, tv)
    return _out((out["G"], out["H"], out["F"]), single)


def decomposition_terms_d(p: XiKernelParams, t):
    """``(G, D_sharp, F_sharp)`` for the last axis; their sum equals the chain kernel."""
    return decomposition_terms_k(p, p.dim - 1, t)


# ---------------------------------------------------------------------------
# simplex kernels

def _simplex_terms(m: tuple[Fraction, ...], r: Fraction, t: np.ndarray) -> dict[str, np.ndarray]:
    d = len(m)
    den = _guard(t[:, -1])
    td = t[:, -1]
    lead = m[:-1]
    red_pts = simplex_points(lead, r)
    shifted = t[:, :-1] - np.multiply.outer(td, [float(m[-1] / v) for v in lead])
    head = np.exp(1j * float(r * m[-1] + 1) * td)
    lam = [m[-1] * (r - sum((Fraction(int(g)) / v for g, v in zip(row, lead)), Fraction(0)))
           for row in red_pts]
    frac = np.array([float(frac_parts(v).down) for v in lam])
    corr = np.exp(-1j * np.multiply.outer(frac, td)) - 1.0
    out = {"D": _phase_sum(simplex_points(m, r), t)}
    out["F"] = head * _phase_sum(red_pts, shifted, corr) / den
    out["G"] = (head * _phase_sum(red_pts, shifted) - _phase_sum(red_pts, t[:, :-1])) / den
    return out


def _simplex_args(m, r) -> tuple[tuple[Fraction, ...], Fraction]:
    mq = tuple(as_rational(v) for v in m)
    rq = as_rational(r)
    if not mq or any(v <= 0 for v in mq):
        raise ValidationError("m must be a nonempty vector of positive numbers")
    if rq < 0:
        raise ValidationError("r must be non-negative")
    return mq, rq


def sigma_terms(m: Sequence, r, t):
    """``(D_Sigma, G_Sigma, F_Sigma)`` of the simplex set; ``D = G + F``."""
    mq, rq = _simplex_args(m, r)
    if rq == 0:
        raise ValidationError("r must be positive")
    tv, single = _points_2d(t, len(mq))
    out = _simplex_terms(mq, rq, tv)
    return _out((out["D"], out["G"], out["F"]), single)


# ---------------------------------------------------------------------------
# recursions between dimensions d and d-1

CHAIN_D_TERMS = ("D", "G", "Dsharp", "Fsharp")
CHAIN_K_TERMS = ("D", "G", "H", "F")
SIMPLEX_TERMS = ("D", "G", "F")


def chain_term(name: str, p: XiKernelParams, k: int, t: np.ndarray) -> np.ndarray:
    """One named term (D, G, H, F, Dsharp, Fsharp, Dflat, Fflat) at axis k."""
    return _terms_k(p, k, np.atleast_2d(np.asarray(t, dtype=np.float64)))[name]


def descending_recursion(name: str, p: XiKernelParams, t) -> np.ndarray:
    """Last-axis term rebuilt from the leading coordinate:

    ``S(t) = sum_{g1} exp(i g1 t_1) S'_{(r, g1/m_1)}(t_2, ..., t_d)``
    with S' the same term for ``(m_2, ..., m_d)``.
    """
    tv = np.atleast_2d(np.asarray(t, dtype=np.float64))
    if p.dim < 3:
        raise ValidationError("the recursion needs dimension at least 3")
    tail = XiKernelParams(p.m[1:], p.r, p.s)
    total = np.zeros(tv.shape[0], dtype=np.complex128)
    for g in range(math.ceil(p.r * p.m[0]), math.floor(p.s * p.m[0]) + 1):
        sub = tail.with_ends(p.r, Fraction(g) / p.m[0])
        total += np.exp(1j * g * tv[:, 0]) * chain_term(name, sub, sub.dim - 1, tv[:, 1:])
    return total


def ascending_recursion(name: str, p: XiKernelParams, k: int, t) -> np.ndarray:
    """Axis-k term rebuilt from the last coordinate (needs ``k <= d - 3``):

    ``S_k(t) = sum_{g_d} exp(i g_d t_d) S'_{k, (g_d/m_d, s)}(t_1, ..., t_{d-1})``.
    """
    tv = np.atleast_2d(np.asarray(t, dtype=np.float64))
    d = p.dim
    if k > d - 3:
        raise ValidationError("the recursion needs k <= d - 3")
    head = XiKernelParams(p.m[:-1], p.r, p.s)
    total = np.zeros(tv.shape[0], dtype=np.complex128)
    for g in range(math.ceil(p.r * p.m[-1]), math.floor(p.s * p.m[-1]) + 1):
        sub = head.with_ends(Fraction(g) / p.m[-1], p.s)
        total += np.exp(1j * g * tv[:, -1]) * chain_term(name, sub, k, tv[:, :-1])
    return total


def simplex_term(name: str, m: Sequence, r, t) -> np.ndarray:
    mq, rq = _simplex_args(m, r)
    return _simplex_terms(mq, rq, np.atleast_2d(np.asarray(t, dtype=np.float64)))[name]


def simplex_recursion(name: str, m: Sequence, r, t) -> np.ndarray:
    """``S_r(t) = sum_{g1=0}^{floor(r m_1)} exp(i g1 t_1) S'_{r - g1/m_1}(t_2, ..., t_d)``."""
    mq, rq = _simplex_args(m, r)
    tv = np.atleast_2d(np.asarray(t, dtype=np.float64))
    if len(mq) < 2:
        raise ValidationError("the recursion needs dimension at least 2")
    total = np.zeros(tv.shape[0], dtype=np.complex128)
    for g in range(0, math.floor(rq * mq[0]) + 1):
        total += np.exp(1j * g * tv[:, 0]) * simplex_term(name, mq[1:], rq - Fraction(g) / mq[0], tv[:, 1:])
    return total


# ---------------------------------------------------------------------------
# the periodic function h

def h_eval(nu: int, m, t) -> float:
    """1-periodic h with ``h(t) = t^nu`` on [0, 1 - 1/m] and the linear
    descent ``m (1 - 1/m)^nu (1 - t)`` on (1 - 1/m, 1).

    For m = 1 the power branch covers all of [0, 1).  Fractions are reduced
    exactly; floats with ``t - floor(t)``.
    """
    if nu < 1:
        raise ValidationError("nu must be a positive integer")
    if m < 1:
        raise ValidationError("m must be at least 1")
    tau = t - math.floor(t)
    if tau >= 1:  # t slightly below an integer can round up
        tau = 0.0
    if m == 1:
        return float(tau) ** nu
    a = 1 - Fraction(1) / as_rational(m) if not isinstance(m, float) else 1.0 - 1.0 / m
    if tau <= a:
        return float(tau) ** nu
    return float(m) * float(a) ** nu * float(1 - tau)


def _h_samples(nu: int, m: int, n: int) -> np.ndarray:
    tau = np.arange(n) / n
    if m == 1:
        return tau**nu
    a = 1.0 - 1.0 / m
    return np.where(tau <= a, tau**nu, m * a**nu * (1.0 - tau))


def h_fourier_coefficients(nu: int, m: int, cutoff: int, oversample: int = 64) -> np.ndarray:
    """Rectangle-rule values of ``hat h(mu)`` for mu = -cutoff..cutoff."""
    n = oversample * cutoff
    coef = np.fft.fft(_h_samples(nu, m, n)) / n
    return np.concatenate([coef[n - cutoff:], coef[:cutoff + 1]])


def h_tail_bound(nu: int, m: int, cutoff: int) -> float:
    """Bound for ``sum_{|mu| > cutoff} |hat h(mu)|``.

    h is continuous and piecewise smooth, so ``|hat h(mu)| <= V / (4 pi^2
    mu^2)`` with V the total variation of h' around the circle, here
    ``2 (nu a^(nu-1) + m a^nu)``, a = 1 - 1/m.  Summing over |mu| > cutoff
    gives at most ``V / (2 pi^2 cutoff)``.  For m = 1, h jumps at 0 and the
    series diverges.
    """
    if m == 1:
        return math.inf
    a = 1.0 - 1.0 / m
    variation = 2.0 * (nu * a ** (nu - 1) + m * a**nu)
    return variation / (2.0 * math.pi**2 * cutoff)


def h_fourier_partial(nu: int, m: int, cutoff: int) -> float:
    """``sum_{|mu| <= cutoff} |hat h(mu)|``."""
    if nu < 1 or m < 1:
        raise ValidationError("nu and m must be positive")
    if cutoff < m * nu:
        raise ValidationError(f"cutoff must be at least m * nu = {m * nu}")
    return math.fsum(np.abs(h_fourier_coefficients(nu, m, cutoff)).tolist())


def h_fourier_sum(nu: int, m: int, cutoff: int) -> float:
    """Truncated sum of ``|hat h|`` plus the tail bound (infinite for m = 1)."""
    return h_fourier_partial(nu, m, cutoff) + h_tail_bound(nu, m, cutoff)
