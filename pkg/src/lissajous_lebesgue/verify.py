"""
Randomised checks of the kernel identities, used by the ``verify`` verb.

Each check returns a record ``{identity, params, samples, max_residual,
status}``.  Decomposition residuals are measured relative to ``|D(t)| + 1``.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .kernel_identities import (CHAIN_D_TERMS, CHAIN_K_TERMS, SIMPLEX_TERMS, SINGULAR_GAP,
                                XiKernelParams, ascending_recursion, chain_term,
                                decomposition_terms_d, decomposition_terms_k, descending_recursion,
                                d_rs_eval, frac_parts, h_eval, sigma_terms, simplex_recursion,
                                simplex_term)

SUITES = ("all", "xi-d", "xi-k", "sigma", "recursion", "phase", "h")

_ENDS = [(Fraction(0), Fraction(1)), (Fraction(1, 4), Fraction(3, 4)), (Fraction(2, 5), Fraction(3, 5)),
         (Fraction(1, 3), Fraction(1)), (Fraction(-1, 2), Fraction(1, 2)), (Fraction(0), Fraction(2))]


def random_points(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """Uniform points of [-pi, pi)^dim away from the removable poles on every axis."""
    t = rng.uniform(-np.pi, np.pi, size=(count, dim))
    bad = np.abs(np.exp(1j * t) - 1.0) <= 10 * SINGULAR_GAP
    while np.any(bad):
        t[bad] = rng.uniform(-np.pi, np.pi, size=int(bad.sum()))
        bad = np.abs(np.exp(1j * t) - 1.0) <= 10 * SINGULAR_GAP
    return t


def chain_parameter_sets(rng: np.random.Generator, count: int = 20) -> list[XiKernelParams]:
    """Integer dilations up to 8 in dimensions 2 and 3, plus one fractional spot check."""
    out = []
    for _ in range(count - 1):
        d = int(rng.integers(2, 4))
        m = tuple(int(v) for v in rng.integers(1, 9, size=d))
        r, s = _ENDS[int(rng.integers(len(_ENDS)))]
        out.append(XiKernelParams(m, r, s))
    out.append(XiKernelParams((Fraction(5, 2), Fraction(7, 3), Fraction(3)), Fraction(1, 5), Fraction(6, 5)))
    return out


def simplex_parameter_sets(rng: np.random.Generator, count: int = 20):
    out = []
    for _ in range(count):
        d = int(rng.integers(2, 4))
        m = tuple(int(v) for v in rng.integers(1, 9, size=d))
        r = [Fraction(1), Fraction(1, 2), Fraction(3, 2), Fraction(2, 3)][int(rng.integers(4))]
        out.append((m, r))
    return out


def _record(identity, params, samples, residual, tol):
    return {"identity": identity, "params": params, "samples": int(samples),
            "max_residual": float(residual), "status": "pass" if residual < tol else "fail"}


def _chain_params_doc(p: XiKernelParams) -> dict:
    return {"m": [str(v) for v in p.m], "r": str(p.r), "s": str(p.s)}


def check_xi_d(rng, samples, tol):
    out = []
    for p in chain_parameter_sets(rng):
        t = random_points(rng, samples, p.dim)
        D = d_rs_eval(p, t)
        G, Ds, Fs = decomposition_terms_d(p, t)
        res = np.max(np.abs(D - (G + Ds + Fs)) / (np.abs(D) + 1.0))
        out.append(_record("D = G + Dsharp + Fsharp", _chain_params_doc(p), samples, res, tol))
    return out


def check_xi_k(rng, samples, tol):
    out = []
    for p in chain_parameter_sets(rng):
        t = random_points(rng, samples, p.dim)
        D = d_rs_eval(p, t)
        worst = 0.0
        for k in range(p.dim):
            G, H, F = decomposition_terms_k(p, k, t)
            worst = max(worst, float(np.max(np.abs(D - (G + H + F)) / (np.abs(D) + 1.0))))
        out.append(_record("D = G_k + H_k + F_k (all k)", _chain_params_doc(p), samples, worst, tol))
        # the last axis reproduces the (G, Dsharp, Fsharp) split term by term
        last = np.max([np.max(np.abs(a - b)) for a, b in
                       zip(decomposition_terms_k(p, p.dim - 1, t), decomposition_terms_d(p, t))])
        out.append(_record("last-axis terms = (G, Dsharp, Fsharp)", _chain_params_doc(p), samples,
                           last, tol))
    return out


def check_sigma(rng, samples, tol):
    out = []
    for m, r in simplex_parameter_sets(rng):
        t = random_points(rng, samples, len(m))
        D, G, F = sigma_terms(m, r, t)
        res = np.max(np.abs(D - (G + F)) / (np.abs(D) + 1.0))
        out.append(_record("D_Sigma = G_Sigma + F_Sigma", {"m": list(m), "r": str(r)}, samples, res, tol))
    return out


def check_recursions(rng, samples, tol):
    out = []
    for p in [q for q in chain_parameter_sets(rng) if q.dim == 3][:6]:
        t = random_points(rng, samples, 3)
        doc = _chain_params_doc(p)
        for name in CHAIN_D_TERMS:
            ref = chain_term(name, p, 2, t)
            res = np.max(np.abs(descending_recursion(name, p, t) - ref) / (np.abs(ref) + 1.0))
            out.append(_record(f"descending recursion for {name}", doc, samples, res, tol))
        for name in CHAIN_K_TERMS:
            ref = chain_term(name, p, 0, t)
            res = np.max(np.abs(ascending_recursion(name, p, 0, t) - ref) / (np.abs(ref) + 1.0))
            out.append(_record(f"ascending recursion for {name}_1", doc, samples, res, tol))
    for m, r in [s for s in simplex_parameter_sets(rng) if len(s[0]) == 3][:6]:
        t = random_points(rng, samples, 3)
        for name in SIMPLEX_TERMS:
            ref = simplex_term(name, m, r, t)
            res = np.max(np.abs(simplex_recursion(name, m, r, t) - ref) / (np.abs(ref) + 1.0))
            out.append(_record(f"simplex recursion for {name}", {"m": list(m), "r": str(r)},
                               samples, res, tol))
    return out


def phase_split_residuals(rng, count: int = 1000) -> np.ndarray:
    """``exp(i g t') exp(i ceil(g a/b) t)`` against
    ``exp(i g (t' + t a/b)) exp(i (ceil(g a/b) - g a/b) t)`` on random tuples.

    Both sides are evaluated in extended precision: in double precision the
    rounding of phases of size ~50 alone is about 1e-14.
    """
    res = np.empty(count)
    for n in range(count):
        g, a, b = int(rng.integers(0, 6)), int(rng.integers(1, 9)), int(rng.integers(1, 9))
        t, tp = (np.longdouble(v) for v in rng.uniform(-np.pi, np.pi, size=2))
        x = Fraction(g * a, b)
        up = np.longdouble(frac_parts(x).up.numerator) / frac_parts(x).up.denominator
        lhs = np.exp(1j * (g * tp)) * np.exp(1j * (math.ceil(x) * t))
        rhs = np.exp(1j * (g * (tp + t * a / np.longdouble(b)))) * np.exp(1j * (up * t))
        res[n] = float(abs(lhs - rhs))
    return res


def h_identity_residuals(rng, count: int = 1000) -> np.ndarray:
    """``h_{nu,m}(g a / m)`` against ``frac(g a / m)^nu`` on random integer triples."""
    res = np.empty(count)
    for n in range(count):
        g, a, m = int(rng.integers(0, 50)), int(rng.integers(1, 20)), int(rng.integers(1, 20))
        nu = int(rng.integers(1, 4))
        exact = float(frac_parts(Fraction(g * a, m)).down) ** nu
        res[n] = abs(h_eval(nu, m, g * a / m) - exact)
    return res


def run_suite(name: str = "all", samples: int = 100, seed: int = 0, tol: float = 1e-9) -> list[dict]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    rng = np.random.default_rng(seed)
    out: list[dict] = []
    if name in ("all", "xi-d"):
        out += check_xi_d(rng, samples, tol)
    if name in ("all", "xi-k"):
        out += check_xi_k(rng, samples, tol)
    if name in ("all", "sigma"):
        out += check_sigma(rng, samples, tol)
    if name in ("all", "recursion"):
        out += check_recursions(rng, samples, tol)
    if name in ("all", "phase"):
        r = phase_split_residuals(rng)
        out.append(_record("phase split", {"tuples": len(r)}, len(r), r.max(), 1e-14))
    if name in ("all", "h"):
        r = h_identity_residuals(rng)
        out.append(_record("h at g m_k / m equals fractional part power", {"triples": len(r)},
                           len(r), r.max(), 1e-12))
    return out
