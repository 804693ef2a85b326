"""
Lebesgue constants.

Fourier side: the L1 mean over the torus of the Dirichlet kernel
``D(t) = sum_{gamma in S} exp(i <gamma, t>)``.  The mean is taken on the
uniform periodic grid t = 2 pi k / M; D is evaluated there exactly (up to
rounding) by an inverse FFT of the index counts folded mod M.  M starts at
``max(64, 8 * max |gamma_j|)`` and is doubled until two successive means agree
to the relative tolerance.

Discrete side: the maximum of the Lebesgue function ``sum_i |L_i(x)|`` found
by a tensor grid scan in ``t`` with ``x = cos t`` followed by coordinate-wise
golden-section refinement.  The result is a lower estimate of the maximum.
"""

from __future__ import annotations

import enum
import io
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _accel
from .chebinterp import interpolator
from .errors import ValidationError
from .lattice import Config, IndexSet, gamma_set, symmetrize

_DENSE_LIMIT = 1 << 22
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class QuadratureSpec:
    """Resolution policy; ``points_per_dim=None`` selects the default start value."""

    points_per_dim: int | None = None
    max_doublings: int = 5
    rel_tol: float = 1e-4

    def __post_init__(self):
        if self.points_per_dim is not None and self.points_per_dim < 8:
            raise ValidationError("points_per_dim must be at least 8")
        if self.max_doublings < 0:
            raise ValidationError("max_doublings must be non-negative")
        if not self.rel_tol > 0:
            raise ValidationError("rel_tol must be positive")

    def start(self, s: IndexSet) -> int:
        if self.points_per_dim is not None:
            return int(self.points_per_dim)
        return max(64, 8 * s.max_abs())


@dataclass(frozen=True)
class LebesgueEstimate:
    value: float
    error_indicator: float
    resolution: int


class Which(enum.Enum):
    DISCRETE = "discrete"
    FOURIER = "fourier"


# ---------------------------------------------------------------------------
# Dirichlet kernel

def dirichlet_eval(s: IndexSet, t: Sequence[float]) -> complex:
    """``sum_{gamma in s} exp(i <gamma, t>)`` at one point."""
    tv = np.asarray(t, dtype=np.float64).reshape(1, -1)
    if tv.shape[1] != s.dim:
        raise ValidationError("t has the wrong dimension")
    return complex(_accel.dirichlet_sum(s.points, tv)[0])


def dirichlet_values(s: IndexSet, t: np.ndarray) -> np.ndarray:
    """Vectorised `dirichlet_eval` over the rows of `t`."""
    return _accel.dirichlet_sum(s.points, t)


def torus_mean_abs(s: IndexSet, size: int) -> float:
    """Mean of ``|D|`` over the grid ``2 pi k / size``, k in {0..size-1}^d."""
    d = s.dim
    folded = np.mod(s.points, size)
    if size**d <= _DENSE_LIMIT:
        counts = np.zeros((size,) * d)
        np.add.at(counts, tuple(folded.T), 1.0)
        vals = np.fft.ifftn(counts) * float(size) ** d
        return float(np.mean(np.abs(vals)))
    # slab-wise: transform the trailing axes once per distinct leading residue,
    # then sweep the leading grid coordinate
    lead = np.unique(folded[:, 0])
    slabs = np.empty((len(lead),) + (size,) * (d - 1), dtype=np.complex128)
    for n, a in enumerate(lead):
        counts = np.zeros((size,) * (d - 1))
        np.add.at(counts, tuple(folded[folded[:, 0] == a, 1:].T), 1.0)
        slabs[n] = np.fft.ifftn(counts) * float(size) ** (d - 1)
    sums = np.empty(size)
    for k in range(size):
        phase = np.exp(2j * np.pi * ((lead * k) % size) / size)
        sums[k] = np.abs(np.tensordot(phase, slabs, axes=1)).sum()
    return float(np.sum(sums) / float(size) ** d)


def fourier_lebesgue(s: IndexSet, q: QuadratureSpec | None = None) -> LebesgueEstimate:
    """Fourier Lebesgue constant of a nonempty index set."""
    q = QuadratureSpec() if q is None else q
    if len(s) == 0:
        raise ValidationError("the Lebesgue constant of an empty set is not defined")
    size = q.start(s)
    size += size % 2
    value = torus_mean_abs(s, size)
    delta = math.inf
    for _ in range(q.max_doublings):
        size *= 2
        new = torus_mean_abs(s, size)
        delta, value = abs(new - value), new
        if delta <= q.rel_tol * abs(value):
            break
    return LebesgueEstimate(value, delta, size)


# ---------------------------------------------------------------------------
# discrete Lebesgue constant

def _golden_max(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Golden-section search for a maximum of `f` on [a, b]."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def _separated_candidates(lam: np.ndarray, shape: tuple[int, ...], count: int, gap: int = 2) -> list[int]:
    """Flat indices of the largest grid values, pairwise more than `gap` cells apart."""
    order = np.argsort(-lam, kind="stable")[:64 * count]
    picked: list[int] = []
    coords: list[np.ndarray] = []
    for flat in order.tolist():
        c = np.array(np.unravel_index(flat, shape))
        if all(np.max(np.abs(c - o)) > gap for o in coords):
            picked.append(flat)
            coords.append(c)
            if len(picked) == count:
                break
    return picked


def discrete_lebesgue(cfg: Config, grid_per_dim: int = 256, refine: bool = True,
                      sweeps: int = 4, starts: int = 8) -> LebesgueEstimate:
    """Lower estimate of the Lebesgue constant of the interpolation problem.

    Refinement runs coordinate-wise golden-section sweeps from the `starts`
    largest well-separated grid values; the best result wins.  The error
    indicator is the gain of the last stage of the winning start: coarse
    grid (every other point) to full grid, then each sweep.
    """
    if grid_per_dim < 16:
        raise ValidationError("grid_per_dim must be at least 16")
    if starts < 1:
        raise ValidationError("starts must be positive")
    it = interpolator(cfg)
    d = cfg.dim
    shape = (grid_per_dim,) * d
    axis = np.linspace(0.0, np.pi, grid_per_dim)
    mesh = np.stack(np.meshgrid(*([axis] * d), indexing="ij"), axis=-1).reshape(-1, d)
    lam = it.lebesgue_function_theta(mesh)
    best = int(np.argmax(lam))
    coarse = lam.reshape(shape)[(slice(None, None, 2),) * d]
    base = [float(coarse.max()), float(lam[best])]
    if not refine:
        return LebesgueEstimate(base[-1], base[-1] - base[-2], grid_per_dim)

    step = np.pi / (grid_per_dim - 1)
    tol = 1e-9 * step
    winner = base
    for flat in _separated_candidates(lam, shape, starts):
        point = mesh[flat].copy()
        value = float(lam[flat])
        stages = list(base)
        for _ in range(sweeps):
            for j in range(d):
                lo, hi = max(0.0, point[j] - step), min(np.pi, point[j] + step)

                def along(v, j=j):
                    trial = point.copy()
                    trial[j] = v
                    return float(it.lebesgue_function_theta(trial[None, :])[0])

                arg, val = _golden_max(along, lo, hi, tol)
                if val > value:
                    point[j], value = arg, val
            stages.append(max(value, stages[-1]))
            if stages[-1] - stages[-2] <= 1e-12 * value:
                break
        if stages[-1] > winner[-1]:
            winner = stages
    return LebesgueEstimate(winner[-1], winner[-1] - winner[-2], grid_per_dim)


# ---------------------------------------------------------------------------
# lower bounds

def hardy_littlewood_bound(s: IndexSet) -> float:
    """``pi^-d sum_{gamma in s} prod_j 1 / (gamma_j + 1)`` for a set of non-negative points."""
    if np.any(s.points < 0):
        raise ValidationError("the bound needs non-negative points; shift or restrict the set first")
    terms = np.prod(1.0 / (s.points + 1.0), axis=1)
    return math.fsum(terms.tolist()) / math.pi**s.dim


def floor_bound_check(est: LebesgueEstimate, d: int) -> bool:
    """True iff the estimate is at least ``pi^-d`` up to its error indicator."""
    return bool(est.value >= math.pi ** (-d) - est.error_indicator)


# ---------------------------------------------------------------------------
# ratio tables

@dataclass(frozen=True)
class RatioRow:
    label: str
    value: float
    error_indicator: float
    denominator: float
    ratio: float


@dataclass(frozen=True)
class RatioTable:
    rows: tuple[RatioRow, ...]

    @property
    def ratios(self) -> np.ndarray:
        return np.array([r.ratio for r in self.rows])

    def summary(self) -> dict[str, float]:
        lo, hi = float(self.ratios.min()), float(self.ratios.max())
        return {"min": lo, "max": hi, "spread": hi / lo}

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("label,value,error_indicator,denominator,ratio\n")
        for r in self.rows:
            cells = [r.value, r.error_indicator, r.denominator, r.ratio]
            buf.write(",".join([r.label] + [format(v, ".17g") for v in cells]) + "\n")
        s = self.summary()
        buf.write(f"# min={s['min']:.17g} max={s['max']:.17g} spread={s['spread']:.17g}\n")
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"rows": [r.__dict__ for r in self.rows], "summary": self.summary()}
        return json.dumps(doc, indent=1)


def log_denominator(m: Iterable[int]) -> float:
    return math.prod(math.log(v + 1) for v in m)


def ratio_table(family: Sequence, which: Which | str, q: QuadratureSpec | None = None,
                grid_per_dim: int = 256, refine: bool = True) -> RatioTable:
    """Lebesgue constants of a family divided by ``prod ln(m_i + 1)``.

    Entries are either Configs (m = n; the Fourier mode uses the symmetrized
    spectral index set) or tuples ``(label, IndexSet)`` / ``(label, IndexSet,
    m)``; without m the per-axis maximum of |gamma_j| is used.
    """
    which = Which(which)
    if not family:
        raise ValidationError("empty family")
    rows = []
    for entry in family:
        if isinstance(entry, Config):
            label = "n=" + "x".join(str(v) for v in entry.freq)
            m = entry.freq
            if which is Which.DISCRETE:
                est = discrete_lebesgue(entry, grid_per_dim, refine)
            else:
                est = fourier_lebesgue(symmetrize(gamma_set(entry)), q)
        else:
            label, s = entry[0], entry[1]
            m = entry[2] if len(entry) > 2 else tuple(int(v) for v in np.abs(s.points).max(axis=0))
            if which is Which.DISCRETE:
                raise ValidationError("discrete constants need a Config, not an index set")
            est = fourier_lebesgue(s, q)
        den = log_denominator(m)
        rows.append(RatioRow(str(label), est.value, est.error_indicator, den, est.value / den))
    return RatioTable(tuple(rows))
