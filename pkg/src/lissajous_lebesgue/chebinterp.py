"""
Tensor Chebyshev basis, Lagrange polynomials of the Lissajous-Chebyshev
nodes and the interpolation operator.

The Lagrange polynomial of node i is

    L_i(x) = w_i ( sum_{gamma in Gamma} 2^(e(gamma) - f(gamma)) T_gamma(z_i) T_gamma(x)
                   - T_{eps n_d}(z_{i_d}) T_{eps n_d}(x_d) ),

with e(gamma) the number of nonzero entries and f(gamma) = max(#{j : 2 gamma_j
= eps n_j} - 1, 0).  The subtracted term is the basis function of the extra
point (0, ..., 0, eps n_d), so it folds into that point's factor, which drops
from 2 to 1.  Collecting the factors in a matrix

    A[i, gamma] = w_i * factor(gamma) * T_gamma(z_i)

gives ``L_i(x) = sum_gamma A[i, gamma] T_gamma(x)`` and the interpolation
coefficients ``c = A^T f``.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from . import _accel
from .errors import DomainError, ValidationError
from .lattice import Config, IndexSet, gamma_set
from .nodes import NodeTable, build_node_table

_DOMAIN_SLACK = 1e-14


@dataclass(frozen=True)
class BasisExponents:
    e: int
    f: int


def basis_exponents(cfg: Config, gamma: Sequence[int]) -> BasisExponents:
    """The exponents e(gamma) and f(gamma) of the factor 2^(e - f)."""
    if len(gamma) != cfg.dim:
        raise ValidationError("gamma has the wrong dimension")
    e = sum(1 for g in gamma if g != 0)
    halves = sum(1 for g, v in zip(gamma, cfg.eps_freq) if 2 * g == v)
    return BasisExponents(e, max(halves - 1, 0))


def _check_cube(x: np.ndarray) -> np.ndarray:
    if not np.all(np.isfinite(x)) or np.any(np.abs(x) > 1 + _DOMAIN_SLACK):
        raise DomainError("evaluation point lies outside [-1, 1]^d")
    return np.clip(x, -1.0, 1.0)


def cheb_eval(gamma: Sequence[int], x: Sequence[float]) -> float:
    """``prod_j cos(gamma_j arccos x_j)``."""
    g = np.asarray(gamma, dtype=np.int64)
    xv = _check_cube(np.asarray(x, dtype=np.float64).reshape(-1))
    if g.shape != xv.shape:
        raise ValidationError("gamma and x differ in dimension")
    if np.any(g < 0):
        raise ValidationError("exponents must be non-negative")
    return float(np.prod(np.cos(g * np.arccos(xv))))


def _as_theta(x, dim: int) -> np.ndarray:
    xv = np.atleast_2d(np.asarray(x, dtype=np.float64))
    if xv.shape[1] != dim:
        if xv.shape == (dim, 1) or (dim == 1 and xv.shape[0] == 1):
            xv = xv.reshape(-1, dim)
        else:
            raise ValidationError(f"points must have dimension {dim}")
    return np.arccos(_check_cube(xv))


# ---------------------------------------------------------------------------
# polynomials

class ChebPoly:
    """Finite Chebyshev expansion ``sum c_gamma T_gamma``; exact zeros are dropped."""

    __slots__ = ("dim", "coeffs", "_exps", "_vals")

    def __init__(self, dim: int, coeffs: Mapping[Sequence[int], float]):
        clean = {}
        for key, val in coeffs.items():
            k = tuple(int(v) for v in key)
            if len(k) != dim:
                raise ValidationError(f"exponent {k} does not have dimension {dim}")
            if any(v < 0 for v in k):
                raise ValidationError(f"exponent {k} has a negative entry")
            if val != 0:
                clean[k] = clean.get(k, 0.0) + float(val)
        clean = {k: v for k, v in sorted(clean.items()) if v != 0}
        self.dim = int(dim)
        self.coeffs = MappingProxyType(clean)
        self._exps = np.asarray(list(clean), dtype=np.int64).reshape(len(clean), dim)
        self._vals = np.asarray(list(clean.values()), dtype=np.float64)

    def __eq__(self, other):
        if not isinstance(other, ChebPoly):
            return NotImplemented
        return self.dim == other.dim and dict(self.coeffs) == dict(other.coeffs)

    def __repr__(self):
        return f"ChebPoly(dim={self.dim}, terms={len(self.coeffs)})"

    def __call__(self, x):
        return eval_poly(self, x)

    def to_json(self) -> str:
        doc = {",".join(str(v) for v in k): c for k, c in self.coeffs.items()}
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str, dim: int | None = None) -> ChebPoly:
        doc = json.loads(text)
        coeffs = {tuple(int(v) for v in key.split(",")): float(val) for key, val in doc.items()}
        if dim is None:
            if not coeffs:
                raise ValidationError("dimension of an empty polynomial must be given")
            dim = len(next(iter(coeffs)))
        return cls(dim, coeffs)


def eval_poly(p: ChebPoly, x):
    """Evaluate at one point (returns float) or at rows of a ``(P, d)`` array."""
    xv = np.asarray(x, dtype=np.float64)
    single = xv.ndim <= 1
    theta = _as_theta(xv.reshape(1, -1) if single else xv, p.dim)
    if len(p._vals) == 0:
        out = np.zeros(theta.shape[0])
    else:
        out = p._vals @ _accel.chebyshev_basis(p._exps, theta)
    return float(out[0]) if single else out


# ---------------------------------------------------------------------------
# interpolation operator

class Interpolator:
    """Precomputed matrices of the interpolation problem for one Config."""

    def __init__(self, cfg: Config):
        self.cfg = cfg
        self.table: NodeTable = build_node_table(cfg)
        self.gamma: IndexSet = gamma_set(cfg)
        gam = self.gamma.points
        if len(gam) != len(self.table):
            raise AssertionError("node count differs from the dimension of the polynomial space")
        self.factors = self._factors(cfg, gam)
        self.node_basis = self._node_basis(cfg, self.table.indices, gam)
        coef = self.table.weights[:, None] * self.node_basis * self.factors[None, :]
        coef.setflags(write=False)
        self.coef = coef

    @staticmethod
    def _factors(cfg: Config, gam: np.ndarray) -> np.ndarray:
        en = np.asarray(cfg.eps_freq)
        e = np.count_nonzero(gam, axis=1)
        f = np.maximum(np.count_nonzero(2 * gam == en, axis=1) - 1, 0)
        fac = np.ldexp(1.0, e - f)
        special = np.zeros(cfg.dim, dtype=np.int64)
        special[-1] = en[-1]
        fac[np.all(gam == special, axis=1)] -= 1.0
        fac.setflags(write=False)
        return fac

    @staticmethod
    def _node_basis(cfg: Config, idx: np.ndarray, gam: np.ndarray) -> np.ndarray:
        # T_gamma(z_i) = prod_j cos(pi * gamma_j * i_j / (eps n_j)), angle reduced exactly
        out = np.ones((idx.shape[0], gam.shape[0]))
        for j, v in enumerate(cfg.eps_freq):
            phase = np.multiply.outer(idx[:, j], gam[:, j]) % (2 * v)
            out *= np.cos(phase * (np.pi / v))
        out.setflags(write=False)
        return out

    def __len__(self) -> int:
        return len(self.table)

    def lagrange_matrix(self, x) -> np.ndarray:
        """``L[i, p]`` = value of the Lagrange polynomial of row i at point p."""
        theta = _as_theta(x, self.cfg.dim)
        return self.coef @ _accel.chebyshev_basis(self.gamma.points, theta)

    def lebesgue_function_theta(self, theta) -> np.ndarray:
        """Lebesgue function at ``x = cos(theta)`` for rows of `theta`."""
        return _accel.lebesgue_function(self.coef, self.gamma.points, np.atleast_2d(theta))

    def lebesgue_function(self, x) -> np.ndarray:
        return self.lebesgue_function_theta(_as_theta(x, self.cfg.dim))

    def coefficients(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=np.float64)
        if values.shape[0] != len(self):
            raise ValidationError(f"expected {len(self)} samples, got {values.shape[0]}")
        return self.coef.T @ values

    def interpolate(self, values) -> ChebPoly:
        c = self.coefficients(values)
        return ChebPoly(self.cfg.dim, dict(zip(self.gamma, c.tolist())))

    def sample(self, func) -> np.ndarray:
        """Evaluate ``func`` (taking a ``(N, d)`` array) at the nodes."""
        return np.asarray(func(self.table.points), dtype=np.float64)


@functools.lru_cache(maxsize=16)
def interpolator(cfg: Config) -> Interpolator:
    return Interpolator(cfg)


@dataclass(frozen=True)
class SampleVector:
    """Function values aligned with the rows of ``build_node_table(cfg)``."""

    cfg: Config
    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        expected = len(interpolator(self.cfg))
        if len(vals) != expected:
            raise ValidationError(f"expected {expected} samples, got {len(vals)}")
        object.__setattr__(self, "values", vals)


def lagrange_eval(cfg: Config, table: NodeTable, i, x) -> float:
    """Lagrange polynomial of node index `i` at the point `x`."""
    if table.cfg != cfg:
        raise ValidationError("node table belongs to a different Config")
    row = table.row_of(i)
    it = interpolator(cfg)
    theta = _as_theta(np.asarray(x, dtype=np.float64).reshape(1, -1), cfg.dim)
    return float(it.coef[row] @ _accel.chebyshev_basis(it.gamma.points, theta)[:, 0])


def interpolate(samples: SampleVector) -> ChebPoly:
    return interpolator(samples.cfg).interpolate(samples.values)


# ---------------------------------------------------------------------------
# Marcinkiewicz-Zygmund ratio

def _torus_values(coeff_grid: np.ndarray, sizes: Sequence[int]) -> np.ndarray:
    """Values of ``sum c_gamma prod cos(gamma_j theta_j)`` on the uniform torus grid."""
    out = coeff_grid
    for j, size in enumerate(sizes):
        theta = 2.0 * np.pi * np.arange(size) / size
        deg = np.arange(coeff_grid.shape[j + 1])
        mat = np.cos(np.multiply.outer(theta, deg))
        # contract axis j + 1 (the leading axis indexes trials)
        out = np.moveaxis(np.tensordot(out, mat, axes=([j + 1], [1])), -1, j + 1)
    return out


def weighted_norm_p(cfg: Config, coeffs: np.ndarray, p: float) -> np.ndarray:
    """``||P||_p^p`` for the Chebyshev-weighted measure normalised to mass 1.

    With ``x = cos(theta)`` the weighted integral becomes a plain average over
    the torus, evaluated by the trapezoidal rule.  Each axis uses more than
    ``max(4, p) * degree`` points, which is exact when p is an even integer.
    `coeffs` has shape ``(trials, len(gamma_set(cfg)))``.
    """
    gam = gamma_set(cfg).points
    deg = gam.max(axis=0)
    sizes = [int(max(4.0, math.ceil(p)) * max(int(g), 1)) + 1 for g in deg]
    grid = np.zeros((coeffs.shape[0],) + tuple(int(g) + 1 for g in deg))
    grid[(slice(None),) + tuple(gam.T)] = coeffs
    vals = _torus_values(grid, sizes)
    return np.mean(np.abs(vals) ** p, axis=tuple(range(1, cfg.dim + 1)))


def mz_ratio(cfg: Config, p_exponent: float, trials: int, seed: int = 0) -> float:
    """Largest ratio of discrete to continuous weighted p-norms over random polynomials.

    The discrete side is ``sum_i w_i |P(z_i)|^p`` over the nodes; coefficients
    are drawn independently and uniformly from [-1, 1] on the spectral index set.
    """
    if not p_exponent > 0:
        raise ValidationError("p must be positive")
    if trials < 1:
        raise ValidationError("trials must be at least 1")
    it = interpolator(cfg)
    rng = np.random.default_rng(seed)
    coeffs = rng.uniform(-1.0, 1.0, size=(trials, len(it)))
    node_vals = coeffs @ it.node_basis.T
    lhs = np.abs(node_vals) ** p_exponent @ it.table.weights
    rhs = weighted_norm_p(cfg, coeffs, p_exponent)
    return float(np.max(lhs / rhs))
