"""
Command-line front end.

    lissajous-lebesgue <verb> [options]

Verbs: gamma, nodes, interp, lebesgue, table, verify, convergence.  The
primary output goes to stdout, or to a file when ``--out`` is given or an
output directory is configured (``--out-dir`` or the environment variable
``LISSAJOUS_LEBESGUE_OUT``).  Every run also emits a manifest: next to the
output file, or as one JSON line on stderr when writing to stdout.

Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 validation error,
4 identity check above tolerance.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import __version__, _accel
from .chebinterp import interpolator
from .errors import SingularPointError, ValidationError
from .fourier_lebesgue import (QuadratureSpec, Which, discrete_lebesgue, fourier_lebesgue,
                               ratio_table)
from .lattice import (Config, IndexSet, as_rational, gamma_bar, gamma_parity_parts, gamma_set,
                      sigma_set, symmetrize, xi_set)
from .nodes import build_node_table
from . import verify as verify_mod

OUT_DIR_ENV = "LISSAJOUS_LEBESGUE_OUT"
EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_VALIDATION, EXIT_TOLERANCE = 0, 1, 2, 3, 4

VERBS = ("gamma", "nodes", "interp", "lebesgue", "table", "verify", "convergence")


# ---------------------------------------------------------------------------
# built-in test functions on rows of an (N, d) array

def _f_exp(x):
    return np.exp(x).prod(axis=1)


def _f_runge(x):
    return 1.0 / (1.0 + 16.0 * np.sum(x**2, axis=1))


def _f_abs32(x):
    return np.abs(x[:, 0]) ** 1.5


TEST_FUNCTIONS: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "exp": _f_exp,
    "runge": _f_runge,
    "abs32": _f_abs32,
}


# ---------------------------------------------------------------------------
# parsing

class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty integer list")
    return vals


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _pair_list(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(_int_list(part) for part in text.split(";") if part.strip())


@dataclass(frozen=True)
class Command:
    verb: str
    options: dict = field(default_factory=dict)


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output instead of CSV/text")
    common.add_argument("--out", help="output file name (relative to the output directory)")
    common.add_argument("--out-dir", help=f"output directory (default ${OUT_DIR_ENV})")
    common.add_argument("--threads", type=int, help="cap on worker threads")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")

    cfg = _Parser(add_help=False)
    cfg.add_argument("--eps", type=int, default=2, choices=(1, 2))
    cfg.add_argument("--n", type=_int_list, help="frequencies, e.g. 1,2")
    cfg.add_argument("--kappa", type=_int_list, help="parity vector, e.g. 0,1 (default zeros)")

    sets = _Parser(add_help=False)
    sets.add_argument("--set", dest="set_kind", default="gamma",
                      choices=("gamma", "gammabar", "sigma", "xi", "parity0", "parity1"))
    sets.add_argument("--m", type=_int_list, help="dilation vector for gammabar/sigma/xi")
    sets.add_argument("--r", type=_rational, default=Fraction(1), help="rational p/q")
    sets.add_argument("--s", type=_rational, default=Fraction(1), help="upper end of xi sets")
    sets.add_argument("--sym", action="store_true", help="symmetrize the set")

    top = _Parser(prog="lissajous-lebesgue",
                  description="Lissajous-Chebyshev interpolation and Lebesgue constants.")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="verb", metavar="verb", parser_class=_Parser)
    sub.required = True

    sub.add_parser("gamma", parents=[common, cfg, sets], help="emit an index set")
    sub.add_parser("nodes", parents=[common, cfg], help="emit the node table")

    p = sub.add_parser("interp", parents=[common, cfg], help="interpolate samples or a test function")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--samples", help="CSV with a column 'f' aligned to the node table")
    src.add_argument("--function", choices=sorted(TEST_FUNCTIONS))
    p.add_argument("--check-grid", type=int, help="points per axis of the error grid")

    p = sub.add_parser("lebesgue", parents=[common, cfg, sets], help="compute a Lebesgue constant")
    p.add_argument("--mode", choices=("discrete", "fourier"), default="discrete")
    p.add_argument("--grid", type=int, help="grid points per axis (discrete) or start resolution (fourier)")
    p.add_argument("--no-refine", action="store_true")
    p.add_argument("--rel-tol", type=float, default=1e-4)
    p.add_argument("--max-doublings", type=int, default=5)

    p = sub.add_parser("table", parents=[common, cfg], help="ratio table over a family")
    p.add_argument("--family", choices=("gammabar", "sigma", "gamma"), required=True)
    p.add_argument("--mode", choices=("discrete", "fourier"), default="fourier")
    p.add_argument("--m-list", type=_int_list, help="values m; the set uses (m, ..., m)")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--r", type=_rational, default=Fraction(1))
    p.add_argument("--n-list", type=_pair_list, help="frequency vectors, e.g. '1,2;2,3'")
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--rel-tol", type=float, default=1e-4)
    p.add_argument("--max-doublings", type=int, default=5)

    p = sub.add_parser("verify", parents=[common], help="check the kernel identities")
    p.add_argument("--suite", choices=verify_mod.SUITES, default="all")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("convergence", parents=[common], help="interpolation error along n = (k, k+1)")
    p.add_argument("--function", choices=sorted(TEST_FUNCTIONS), default="exp")
    # eps=2 reaches the rounding floor (~1e-14) for exp at k=8, after which
    # the error only jitters; eps=1 stays above it through k=12
    p.add_argument("--eps", type=int, default=1, choices=(1, 2))
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--check-grid", type=int, default=101)
    return top


def _check_config_options(opts: dict) -> None:
    n = opts.get("n")
    if n is None:
        return
    kappa = opts.get("kappa")
    if kappa is not None and len(kappa) != len(n):
        raise UsageError("--kappa must have the same length as --n")
    if kappa is not None and any(v not in (0, 1) for v in kappa):
        raise UsageError("--kappa entries must be 0 or 1")
    try:
        Config(opts["eps"], n, kappa)
    except ValidationError as exc:
        raise UsageError(str(exc))


def parse_args(argv: Sequence[str]) -> Command:
    """Parse argv into a Command; raises UsageError on bad input."""
    ns = build_parser().parse_args(list(argv))
    opts = vars(ns)
    verb = opts.pop("verb")
    if "n" in opts:
        _check_config_options(opts)
    needs_n = verb in ("nodes", "interp") or (verb == "lebesgue" and opts["mode"] == "discrete") \
        or (verb in ("gamma", "lebesgue") and opts.get("set_kind") in ("gamma", "parity0", "parity1"))
    if needs_n and opts.get("n") is None:
        raise UsageError(f"{verb}: --n is required")
    if verb in ("gamma", "lebesgue") and opts.get("set_kind") in ("gammabar", "sigma", "xi") \
            and not (verb == "lebesgue" and opts["mode"] == "discrete") and opts.get("m") is None:
        raise UsageError(f"{verb}: --m is required for --set {opts['set_kind']}")
    if verb == "table":
        if opts["family"] == "gamma" and not opts.get("n_list"):
            raise UsageError("table: --n-list is required for --family gamma")
        if opts["family"] != "gamma" and not opts.get("m_list"):
            raise UsageError("table: --m-list is required")
        if opts["family"] != "gamma" and opts["mode"] == "discrete":
            raise UsageError("table: discrete mode needs --family gamma")
    return Command(verb, opts)


# ---------------------------------------------------------------------------
# execution helpers

def _config(opts) -> Config:
    return Config(opts["eps"], opts["n"], opts.get("kappa"))


def _index_set(opts) -> IndexSet:
    kind = opts["set_kind"]
    if kind == "gamma":
        s = gamma_set(_config(opts))
    elif kind in ("parity0", "parity1"):
        s = gamma_parity_parts(_config(opts))[int(kind[-1])]
    elif kind == "gammabar":
        s = gamma_bar(opts["m"])
    elif kind == "sigma":
        s = sigma_set(opts["m"], opts["r"])
    else:
        s = xi_set(opts["m"], opts["r"], opts["s"])
    return symmetrize(s) if opts.get("sym") else s


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _check_grid_theta(dim: int, size: int) -> np.ndarray:
    axis = np.linspace(0.0, np.pi, size)
    return np.stack(np.meshgrid(*([axis] * dim), indexing="ij"), axis=-1).reshape(-1, dim)


def sup_error(cfg: Config, coeffs: np.ndarray, func, size: int) -> float:
    """Max |P f - f| over a tensor grid in t-space (x = cos t)."""
    it = interpolator(cfg)
    theta = _check_grid_theta(cfg.dim, size)
    worst = 0.0
    for a in range(0, len(theta), 8192):
        th = theta[a:a + 8192]
        approx = coeffs @ _accel.chebyshev_basis(it.gamma.points, th)
        worst = max(worst, float(np.max(np.abs(approx - func(np.cos(th))))))
    return worst


def _default_check_grid(dim: int) -> int:
    return 101 if dim <= 2 else 33


def _read_samples(path: str) -> np.ndarray:
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    header = [h.strip() for h in lines[0].split(",")]
    if "f" in header:
        col = header.index("f")
        rows = lines[1:]
    else:
        col, rows = 0, lines
    try:
        return np.array([float(r.split(",")[col]) for r in rows])
    except (ValueError, IndexError) as exc:
        raise ValidationError(f"cannot read samples from {path}: {exc}")


# ---------------------------------------------------------------------------
# verbs; each returns (primary output text, summary dict, exit code)

def _run_gamma(opts):
    s = _index_set(opts)
    return (s.to_json() + "\n" if opts["json"] else s.to_text()), {"points": len(s)}, EXIT_OK


def _run_nodes(opts):
    t = build_node_table(_config(opts))
    return (t.to_json() + "\n" if opts["json"] else t.to_csv()), {"nodes": len(t)}, EXIT_OK


def _run_interp(opts):
    cfg = _config(opts)
    it = interpolator(cfg)
    if opts.get("function"):
        func = TEST_FUNCTIONS[opts["function"]]
        values = it.sample(func)
    else:
        func = None
        values = _read_samples(opts["samples"])
    c = it.coefficients(values)
    size = opts.get("check_grid") or _default_check_grid(cfg.dim)
    err = sup_error(cfg, c, func, size) if func is not None else None
    node_residual = float(np.max(np.abs(it.node_basis @ c - values)))
    poly = it.interpolate(values)
    summary = {"terms": len(poly.coeffs), "sup_error": err, "node_residual": node_residual}
    if opts["json"]:
        doc = {"coefficients": json.loads(poly.to_json()), "sup_error": err,
               "node_residual": node_residual}
        return json.dumps(doc, indent=1) + "\n", summary, EXIT_OK
    buf = io.StringIO()
    buf.write("gamma,coefficient\n")
    for key, val in poly.coeffs.items():
        buf.write('"' + ",".join(str(v) for v in key) + '",' + _fmt(val) + "\n")
    buf.write(f"# sup_error={'nan' if err is None else _fmt(err)} node_residual={_fmt(node_residual)}\n")
    return buf.getvalue(), summary, EXIT_OK


def _run_lebesgue(opts):
    if opts["mode"] == "discrete":
        est = discrete_lebesgue(_config(opts), opts.get("grid") or 256, not opts["no_refine"])
        label = "discrete"
    else:
        q = QuadratureSpec(opts.get("grid"), opts["max_doublings"], opts["rel_tol"])
        est = fourier_lebesgue(_index_set(opts), q)
        label = "fourier"
    summary = {"mode": label, "value": est.value, "error_indicator": est.error_indicator,
               "resolution": est.resolution}
    if opts["json"]:
        return json.dumps(summary, indent=1) + "\n", summary, EXIT_OK
    text = f"{est.value:.12g} +/- {est.error_indicator:.3g} (resolution {est.resolution})\n"
    return text, summary, EXIT_OK


def _run_table(opts):
    fam = opts["family"]
    if fam == "gamma":
        kappa = opts.get("kappa")
        family = [Config(opts["eps"], n, kappa if kappa and len(kappa) == len(n) else None)
                  for n in opts["n_list"]]
    elif fam == "gammabar":
        family = [(f"m={m}", gamma_bar((m,) * opts["dim"]), (m,) * opts["dim"]) for m in opts["m_list"]]
    else:
        family = [(f"m={m}", symmetrize(sigma_set((m,) * opts["dim"], opts["r"])), (m,) * opts["dim"])
                  for m in opts["m_list"]]
    q = QuadratureSpec(None, opts["max_doublings"], opts["rel_tol"])
    table = ratio_table(family, Which(opts["mode"]), q, opts["grid"])
    text = table.to_json() + "\n" if opts["json"] else table.to_csv()
    return text, table.summary(), EXIT_OK


def _run_verify(opts):
    results = verify_mod.run_suite(opts["suite"], opts["samples"], opts["seed"], opts["tol"])
    ok = all(r["status"] == "pass" for r in results)
    worst = max((r["max_residual"] for r in results), default=0.0)
    summary = {"checks": len(results), "failed": sum(r["status"] != "pass" for r in results),
               "max_residual": worst}
    return json.dumps(results, indent=1) + "\n", summary, (EXIT_OK if ok else EXIT_TOLERANCE)


def convergence_rows(function: str, eps: int, k_min: int, k_max: int, check_grid: int):
    func = TEST_FUNCTIONS[function]
    rows = []
    for k in range(k_min, k_max + 1):
        cfg = Config(eps, (k, k + 1))
        it = interpolator(cfg)
        c = it.coefficients(it.sample(func))
        err = sup_error(cfg, c, func, check_grid)
        scale = math.log(k + 1) * math.log(k + 2)
        rows.append({"k": k, "n": [k, k + 1], "nodes": len(it), "sup_error": err,
                     "scaled_error": err * scale})
    return rows


def convergence_summary(rows, slack: float = 0.10) -> dict:
    errs = [r["sup_error"] for r in rows]
    monotone = all(b <= a * (1.0 + slack) for a, b in zip(errs, errs[1:]))
    x = np.log([r["k"] for r in rows])
    y = np.log([max(r["scaled_error"], 1e-300) for r in rows])
    slope = float(np.polyfit(x, y, 1)[0]) if len(rows) > 1 else float("nan")
    return {"monotone_within_slack": monotone, "loglog_slope": slope}


def _run_convergence(opts):
    rows = convergence_rows(opts["function"], opts["eps"], opts["k_min"], opts["k_max"],
                            opts["check_grid"])
    summary = convergence_summary(rows)
    if opts["json"]:
        return json.dumps({"rows": rows, "summary": summary}, indent=1) + "\n", summary, EXIT_OK
    buf = io.StringIO()
    buf.write("k,n1,n2,nodes,sup_error,scaled_error\n")
    for r in rows:
        buf.write(f"{r['k']},{r['n'][0]},{r['n'][1]},{r['nodes']},"
                  f"{_fmt(r['sup_error'])},{_fmt(r['scaled_error'])}\n")
    buf.write(f"# monotone_within_slack={summary['monotone_within_slack']} "
              f"loglog_slope={_fmt(summary['loglog_slope'])}\n")
    return buf.getvalue(), summary, EXIT_OK


_RUNNERS = {"gamma": _run_gamma, "nodes": _run_nodes, "interp": _run_interp,
            "lebesgue": _run_lebesgue, "table": _run_table, "verify": _run_verify,
            "convergence": _run_convergence}


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def _output_target(cmd: Command) -> Path | None:
    out_dir = cmd.options.get("out_dir") or os.environ.get(OUT_DIR_ENV)
    name = cmd.options.get("out")
    if name is None and out_dir is None:
        return None
    ext = "json" if cmd.options.get("json") or cmd.verb == "verify" else (
        "txt" if cmd.verb in ("gamma", "lebesgue") else "csv")
    path = Path(name) if name else Path(f"{cmd.verb}.{ext}")
    if not path.is_absolute() and out_dir:
        path = Path(out_dir) / path
    return path


def execute(cmd: Command, stdout=None, stderr=None) -> int:
    """Run a parsed command; returns the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    start = time.perf_counter()
    _accel.set_threads(cmd.options.get("threads"))
    try:
        text, summary, status = _RUNNERS[cmd.verb](cmd.options)
    except (ValidationError, SingularPointError) as exc:
        print(f"validation error: {exc}", file=stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"I/O error: {exc}", file=stderr)
        return EXIT_IO
    digest = hashlib.sha256(text.encode()).hexdigest()
    manifest = {
        "tool": "lissajous-lebesgue",
        "version": __version__,
        "verb": cmd.verb,
        "options": {k: _jsonable(v) for k, v in sorted(cmd.options.items())},
        "seed": cmd.options.get("seed", 0),
        "backend": _accel.get_backend(),
        "duration_s": round(time.perf_counter() - start, 6),
        "summary": summary,
        "exit_status": status,
    }
    target = _output_target(cmd)
    try:
        if target is None:
            stdout.write(text)
            manifest["outputs"] = {"<stdout>": digest}
            stderr.write(json.dumps(manifest, sort_keys=True) + "\n")
        else:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text)
            manifest["outputs"] = {str(target): digest}
            side = target.with_name(target.name + ".manifest.json")
            side.write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")
            print(f"wrote {target}", file=stderr)
    except OSError as exc:
        print(f"I/O error: {exc}", file=stderr)
        return EXIT_IO
    return status


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cmd = parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    return execute(cmd)


if __name__ == "__main__":
    sys.exit(main())
