"""
Polyhedral lattice index sets.

All membership tests are done in exact integer arithmetic.  Ratios such as
gamma_i / m_i are scaled by a common denominator so every inequality becomes
an integer comparison; when the scaled keys could overflow int64 the
comparison falls back to Python integers.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import ValidationError

_INT64_SAFE = 2**62


class Rel(enum.Enum):
    """Relation tag used in the chain of `xi_set`."""

    LE = "LE"
    LT = "LT"
    EQ = "EQ"


def as_rational(x) -> Fraction:
    """Convert an int, Fraction, ``"p/q"`` string or float to a Fraction.

    Floats go through their shortest decimal repr, so ``0.4`` becomes ``2/5``
    rather than the binary expansion.
    """
    if isinstance(x, bool):
        raise ValidationError(f"not a rational number: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, (float, np.floating)):
        if not math.isfinite(x):
            raise ValidationError(f"not a finite number: {x!r}")
        return Fraction(repr(float(x)))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"malformed rational {x!r}") from exc
    raise ValidationError(f"not a rational number: {x!r}")


@dataclass(frozen=True)
class Config:
    """Parameters (eps, n, kappa) of a node set and its spectral index set.

    `parity` is reduced mod 2 on construction; it defaults to all zeros.
    """

    eps: int
    freq: tuple[int, ...]
    parity: tuple[int, ...] | None = None

    def __post_init__(self):
        freq = tuple(int(v) for v in self.freq)
        if len(freq) == 0:
            raise ValidationError("dimension must be at least 1")
        if self.eps not in (1, 2):
            raise ValidationError(f"eps must be 1 or 2, got {self.eps}")
        if any(v < 1 for v in freq):
            raise ValidationError(f"frequencies must be positive, got {freq}")
        for a, b in itertools.combinations(freq, 2):
            if math.gcd(a, b) != 1:
                raise ValidationError(f"frequencies {freq} are not pairwise relatively prime")
        parity = (0,) * len(freq) if self.parity is None else tuple(int(v) % 2 for v in self.parity)
        if len(parity) != len(freq):
            raise ValidationError("parity vector and frequency vector differ in length")
        object.__setattr__(self, "eps", int(self.eps))
        object.__setattr__(self, "freq", freq)
        object.__setattr__(self, "parity", parity)

    @property
    def dim(self) -> int:
        return len(self.freq)

    @property
    def eps_freq(self) -> tuple[int, ...]:
        """The products eps * n_i."""
        return tuple(self.eps * v for v in self.freq)


class IndexSet:
    """Finite set of integer points, deduplicated and lexicographically sorted."""

    __slots__ = ("_pts",)

    def __init__(self, points, dim: int | None = None):
        arr = np.asarray(points, dtype=np.int64)
        if arr.size == 0:
            if dim is None:
                if arr.ndim == 2 and arr.shape[1] > 0:
                    dim = arr.shape[1]
                else:
                    raise ValidationError("dimension of an empty set must be given")
            arr = np.zeros((0, dim), dtype=np.int64)
        elif arr.ndim == 1:
            arr = arr.reshape(-1, 1) if dim in (None, 1) else arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ValidationError("points must form a 2-d array")
        if dim is not None and arr.shape[1] != dim:
            raise ValidationError(f"points have length {arr.shape[1]}, expected {dim}")
        if arr.shape[1] < 1:
            raise ValidationError("dimension must be at least 1")
        if len(arr):
            arr = np.unique(arr, axis=0)
        arr.setflags(write=False)
        self._pts = arr

    @property
    def dim(self) -> int:
        return self._pts.shape[1]

    @property
    def points(self) -> np.ndarray:
        """Read-only ``(len, dim)`` int64 array in lexicographic order."""
        return self._pts

    def __len__(self) -> int:
        return self._pts.shape[0]

    def __iter__(self):
        return (tuple(int(v) for v in row) for row in self._pts)

    def __contains__(self, point) -> bool:
        p = np.asarray(point, dtype=np.int64).reshape(-1)
        if p.shape[0] != self.dim:
            return False
        return bool(np.any(np.all(self._pts == p, axis=1)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexSet):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self._pts, other._pts)

    def __hash__(self):
        return hash((self.dim, self._pts.tobytes()))

    def __repr__(self):
        if len(self) <= 8:
            return f"IndexSet({self.tolist()})"
        return f"IndexSet(dim={self.dim}, len={len(self)})"

    def tolist(self) -> list[tuple[int, ...]]:
        return list(self)

    def union(self, *others: IndexSet) -> IndexSet:
        return IndexSet(np.vstack([self._pts] + [o.points for o in others]), dim=self.dim)

    def isdisjoint(self, other: IndexSet) -> bool:
        both = np.vstack([self._pts, other.points])
        return len(np.unique(both, axis=0)) == len(both) if len(both) else True

    def max_abs(self) -> int:
        return int(np.abs(self._pts).max()) if len(self) else 0

    # serialization
    def to_json(self) -> str:
        return json.dumps(self._pts.tolist(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str, dim: int | None = None) -> IndexSet:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(p, list) for p in data):
            raise ValidationError("expected a JSON array of integer arrays")
        if any(not isinstance(v, int) or isinstance(v, bool) for p in data for v in p):
            raise ValidationError("coordinates must be integers")
        return cls(data, dim=dim)

    def to_text(self) -> str:
        return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in self._pts)

    @classmethod
    def from_text(cls, text: str, dim: int | None = None) -> IndexSet:
        rows = [line.split() for line in text.splitlines() if line.strip()]
        try:
            data = [[int(v) for v in row] for row in rows]
        except ValueError as exc:
            raise ValidationError("coordinates must be integers") from exc
        if len({len(r) for r in data}) > 1:
            raise ValidationError("rows have different lengths")
        return cls(data, dim=dim)


# ---------------------------------------------------------------------------
# enumeration machinery

def _key_dtype(bound: int):
    return np.int64 if bound < _INT64_SAFE else object


def _enumerate(lo: Sequence[int], hi: Sequence[int],
               checks: dict[int, list[Callable[[np.ndarray], np.ndarray]]] | None = None,
               dim: int | None = None) -> IndexSet:
    """Scan the box lo..hi coordinate by coordinate.

    ``checks[j]`` holds predicates on prefixes with ``j + 1`` columns; they are
    applied as soon as coordinate j is filled in, pruning the scan early.
    Appending columns in order keeps the rows lexicographically sorted.
    """
    d = len(lo) if dim is None else dim
    checks = checks or {}
    pts = np.zeros((1, 0), dtype=np.int64)
    for j in range(d):
        col = np.arange(lo[j], hi[j] + 1, dtype=np.int64)
        if len(col) == 0 or len(pts) == 0:
            return IndexSet(np.zeros((0, d), dtype=np.int64), dim=d)
        pts = np.column_stack([np.repeat(pts, len(col), axis=0), np.tile(col, len(pts))])
        for check in checks.get(j, ()):
            pts = pts[np.asarray(check(pts), dtype=bool)]
    return IndexSet(pts, dim=d)


def _scaled(col: np.ndarray, scale: int, dtype) -> np.ndarray:
    if dtype is object:
        return col.astype(object) * scale
    return col * np.int64(scale)


def _positive_int_vector(m: Sequence[int], name: str = "m") -> tuple[int, ...]:
    try:
        out = tuple(int(v) for v in m)
    except TypeError as exc:
        raise ValidationError(f"{name} must be a sequence of integers") from exc
    if len(out) == 0:
        raise ValidationError(f"{name} must not be empty")
    if any(int(v) != v for v in m) or any(v < 1 for v in out):
        raise ValidationError(f"{name} must contain positive integers, got {tuple(m)}")
    return out


# ---------------------------------------------------------------------------
# spectral index sets

def gamma_set(cfg: Config) -> IndexSet:
    """Spectral index set of the Lissajous-Chebyshev interpolation problem.

    All gamma >= 0 with gamma_i/n_i < eps and gamma_i/n_i + gamma_j/n_j <= eps
    (strict when kappa_i and kappa_j differ in parity), plus the extra point
    (0, ..., 0, eps * n_d).
    """
    n, e, kap = cfg.freq, cfg.eps, cfg.parity
    d = cfg.dim
    # gamma_i / n_i scaled by N = prod(n) gives the integer key gamma_i * N / n_i
    big = math.prod(n)
    dtype = _key_dtype(2 * e * big)
    scale = [big // v for v in n]
    limit = e * big

    def pair_check(j):
        def check(pts):
            kj = _scaled(pts[:, j], scale[j], dtype)
            mask = np.ones(len(pts), dtype=bool)
            for i in range(j):
                s = _scaled(pts[:, i], scale[i], dtype) + kj
                mask &= np.asarray((s < limit) if kap[i] != kap[j] else (s <= limit), dtype=bool)
            return mask
        return check

    checks = {j: [pair_check(j)] for j in range(1, d)}
    main = _enumerate([0] * d, [e * v - 1 for v in n], checks)
    extra = [0] * (d - 1) + [e * n[-1]]
    return IndexSet(np.vstack([main.points, [extra]]), dim=d)


def gamma_parity_parts(cfg: Config) -> tuple[IndexSet, IndexSet]:
    """The two parity parts of `gamma_set`.

    Part r collects gamma with 2 gamma_i <= eps n_i where kappa_i = r (mod 2)
    and 2 gamma_i < eps n_i otherwise.
    """
    en = cfg.eps_freq
    parts = []
    for r in (0, 1):
        hi = [v // 2 if k == r else (v - 1) // 2 for v, k in zip(en, cfg.parity)]
        parts.append(_enumerate([0] * cfg.dim, hi))
    return parts[0], parts[1]


def gamma_bar(m: Sequence[int]) -> IndexSet:
    """All gamma >= 0 with gamma_i <= m_i and gamma_i/m_i + gamma_j/m_j <= 1 (i != j)."""
    m = _positive_int_vector(m)
    d = len(m)
    big = math.lcm(*m)
    dtype = _key_dtype(2 * big)
    scale = [big // v for v in m]

    def pair_check(j):
        def check(pts):
            kj = _scaled(pts[:, j], scale[j], dtype)
            mask = np.ones(len(pts), dtype=bool)
            for i in range(j):
                mask &= np.asarray(_scaled(pts[:, i], scale[i], dtype) + kj <= big, dtype=bool)
            return mask
        return check

    return _enumerate([0] * d, list(m), {j: [pair_check(j)] for j in range(1, d)})


def sigma_set(m: Sequence[int], r) -> IndexSet:
    """All gamma >= 0 with sum gamma_i/m_i <= r."""
    m = _positive_int_vector(m)
    r = as_rational(r)
    if r <= 0:
        raise ValidationError(f"r must be positive, got {r}")
    d = len(m)
    big = math.lcm(*m, r.denominator)
    limit = r.numerator * (big // r.denominator)
    dtype = _key_dtype((d + 1) * limit + big)
    scale = [big // v for v in m]

    def partial_sum(j):
        def check(pts):
            tot = _scaled(pts[:, 0], scale[0], dtype)
            for i in range(1, j + 1):
                tot = tot + _scaled(pts[:, i], scale[i], dtype)
            return tot <= limit
        return check

    hi = [math.floor(r * v) for v in m]
    return _enumerate([0] * d, hi, {j: [partial_sum(j)] for j in range(d)})


def _compare(a, b, rel: Rel) -> np.ndarray:
    if rel is Rel.LE:
        return a <= b
    if rel is Rel.LT:
        return a < b
    return a == b


def xi_set(m: Sequence, r, s, perm: Sequence[int] | None = None,
           rels: Sequence[Rel | str] | None = None) -> IndexSet:
    """Integer points on a chain of ratios.

    Returns all gamma in Z^d with

        r  rels[d]  q[perm[d-1]]  rels[d-1]  ...  q[perm[0]]  rels[0]  s,

    where ``q[i] = gamma_i / m_i``.  `perm` is a permutation of ``0..d-1``
    (default identity) and `rels` holds d + 1 tags (default all ``LE``).
    Entries of `m` may be positive rationals.
    """
    mq = [as_rational(v) for v in m]
    if not mq:
        raise ValidationError("m must not be empty")
    if any(v <= 0 for v in mq):
        raise ValidationError("entries of m must be positive")
    r, s = as_rational(r), as_rational(s)
    if r > s:
        raise ValidationError(f"r = {r} exceeds s = {s}")
    d = len(mq)
    perm = tuple(range(d)) if perm is None else tuple(int(p) for p in perm)
    if sorted(perm) != list(range(d)):
        raise ValidationError(f"{perm} is not a permutation of 0..{d - 1}")
    rels = (Rel.LE,) * (d + 1) if rels is None else tuple(Rel(x) if not isinstance(x, Rel) else x for x in rels)
    if len(rels) != d + 1:
        raise ValidationError(f"expected {d + 1} relation tags, got {len(rels)}")

    # gamma_i / m_i = gamma_i * m_i.den / m_i.num; scale everything by a common denominator
    big = math.lcm(*(v.numerator for v in mq), r.denominator, s.denominator)
    scale = [v.denominator * (big // v.numerator) for v in mq]
    r_key = r.numerator * (big // r.denominator)
    s_key = s.numerator * (big // s.denominator)
    lo = [math.ceil(r * v) for v in mq]
    hi = [math.floor(s * v) for v in mq]
    bound = max(abs(r_key), abs(s_key), max(abs(a) * c for a, c in zip(lo + hi, scale + scale))) + 1
    dtype = _key_dtype(bound)

    def key(pts, i):
        return _scaled(pts[:, i], scale[i], dtype)

    checks: dict[int, list] = {}

    def add(axis, fn):
        checks.setdefault(axis, []).append(fn)

    # the box already enforces r <= q <= s; only strict/equality endpoints need a check
    top, bottom = perm[0], perm[-1]
    if rels[0] is not Rel.LE:
        add(top, lambda pts, i=top: _compare(key(pts, i), s_key, rels[0]))
    if rels[d] is not Rel.LE:
        add(bottom, lambda pts, i=bottom: _compare(r_key, key(pts, i), rels[d]))
    for j in range(1, d):
        lower, upper = perm[j], perm[j - 1]
        add(max(lower, upper),
            lambda pts, a=lower, b=upper, rel=rels[j]: _compare(key(pts, a), key(pts, b), rel))
    return _enumerate(lo, hi, checks, dim=d)


# ---------------------------------------------------------------------------
# transformations

def symmetrize(s: IndexSet) -> IndexSet:
    """All points whose coordinate-wise absolute value lies in `s`."""
    base = s.points[np.all(s.points >= 0, axis=1)]
    flips = [base * np.asarray(signs, dtype=np.int64)
             for signs in itertools.product((1, -1), repeat=s.dim)]
    return IndexSet(np.vstack(flips), dim=s.dim)


def reflect(m: Sequence[int], k: int, s: IndexSet) -> IndexSet:
    """Replace coordinate `k` (0-based) of every point by ``m_k - gamma_k``."""
    m = tuple(int(v) for v in m)
    if len(m) != s.dim:
        raise ValidationError("m and the set differ in dimension")
    if not 0 <= k < s.dim:
        raise ValidationError(f"axis {k} out of range for dimension {s.dim}")
    pts = s.points.copy()
    pts[:, k] = m[k] - pts[:, k]
    return IndexSet(pts, dim=s.dim)


def argmax_axes(m: Sequence[int], gamma: Sequence[int]) -> frozenset[int]:
    """Axes attaining the maximum of gamma_i / m_i (exact comparison)."""
    ratios = [Fraction(int(g), int(v)) for g, v in zip(gamma, m)]
    top = max(ratios)
    return frozenset(i for i, q in enumerate(ratios) if q == top)


@dataclass(frozen=True)
class PartitionPiece:
    """Reflected piece ``reflect(m, axis, {gamma : 2 gamma < m, argmax_axes = K})``."""

    subset: frozenset[int]
    axis: int
    part: IndexSet


def gamma_bar_partition(m: Sequence[int]) -> tuple[IndexSet, list[PartitionPiece]]:
    """Split `gamma_bar(m)` into pairwise disjoint pieces.

    Returns the central block ``{gamma : 2 gamma_i <= m_i}`` and, for every
    nonempty K (binary-mask order) and every k in K (ascending), the
    reflection along k of ``{gamma : 2 gamma_i < m_i, argmax_axes(gamma) = K}``.
    """
    m = _positive_int_vector(m)
    d = len(m)
    center = _enumerate([0] * d, [v // 2 for v in m])
    inner = _enumerate([0] * d, [(v - 1) // 2 for v in m])
    by_subset: dict[frozenset[int], list[tuple[int, ...]]] = {}
    for g in inner:
        by_subset.setdefault(argmax_axes(m, g), []).append(g)
    pieces = []
    for mask in range(1, 2**d):
        subset = frozenset(i for i in range(d) if mask >> i & 1)
        members = IndexSet(by_subset.get(subset, np.zeros((0, d), dtype=np.int64)), dim=d)
        for k in sorted(subset):
            pieces.append(PartitionPiece(subset, k, reflect(m, k, members)))
    return center, pieces
