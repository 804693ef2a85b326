"""
Lissajous-Chebyshev node sets and their quadrature weights.

For a Config (eps, n, kappa) the node indices are the multi-indices i with
``0 <= i_j <= eps n_j`` whose coordinates all satisfy ``i_j = kappa_j + r
(mod 2)`` for one common r in {0, 1}.  Node i sits at ``z_j = cos(i_j pi /
(eps n_j))`` and carries the weight ``2^#{j : 0 < i_j < eps n_j} / (2 eps^d
prod n_j)``.
"""

from __future__ import annotations

import io
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .lattice import Config, ValidationError


@dataclass(frozen=True)
class NodeTable:
    """Immutable node table: indices, points, exact and floating weights.

    Rows hold parity class 0 first, then class 1, each in lexicographic order
    of the index.
    """

    cfg: Config
    indices: np.ndarray
    points: np.ndarray
    weights: np.ndarray
    exact_weights: tuple[Fraction, ...] = field(repr=False)
    n_class0: int

    def __len__(self) -> int:
        return self.indices.shape[0]

    @property
    def angles(self) -> np.ndarray:
        """``theta`` with ``points = cos(theta)``, computed from the integer indices."""
        return self.indices * (np.pi / np.asarray(self.cfg.eps_freq, dtype=np.float64))

    @property
    def weight_sum(self) -> Fraction:
        """Exact sum of the weights; recorded for reference, no closed form is assumed."""
        return sum(self.exact_weights, Fraction(0))

    def row_of(self, index) -> int:
        """Row number of a node index; raises KeyError when absent."""
        idx = np.asarray(index, dtype=np.int64).reshape(-1)
        if idx.shape[0] == self.cfg.dim:
            hit = np.flatnonzero(np.all(self.indices == idx, axis=1))
            if len(hit):
                return int(hit[0])
        raise KeyError(f"{tuple(idx.tolist())} is not a node index of this table")

    def to_csv(self) -> str:
        d = self.cfg.dim
        header = [f"i{j + 1}" for j in range(d)] + [f"z{j + 1}" for j in range(d)] + ["w"]
        buf = io.StringIO()
        buf.write(",".join(header) + "\n")
        for idx, z, w in zip(self.indices, self.points, self.weights):
            cells = [str(int(v)) for v in idx] + [format(float(v), ".17g") for v in z]
            buf.write(",".join(cells + [format(float(w), ".17g")]) + "\n")
        return buf.getvalue()

    def to_json(self) -> str:
        rows = [{"i": [int(v) for v in idx],
                 "z": [float(v) for v in z],
                 "w": float(w),
                 "w_exact": str(we)}
                for idx, z, w, we in zip(self.indices, self.points, self.weights, self.exact_weights)]
        doc = {"eps": self.cfg.eps, "n": list(self.cfg.freq), "kappa": list(self.cfg.parity),
               "weight_sum": str(self.weight_sum), "rows": rows}
        return json.dumps(doc, indent=1)


def node_weight(cfg: Config, index) -> Fraction:
    """Exact quadrature weight of a node index."""
    en = cfg.eps_freq
    interior = sum(1 for i, v in zip(index, en) if 0 < i < v)
    return Fraction(2**interior, 2 * cfg.eps**cfg.dim * math.prod(cfg.freq))


def node_indices(cfg: Config, r: int) -> np.ndarray:
    """Indices of parity class r, lexicographically sorted."""
    ranges = [range((k + r) % 2, v + 1, 2) for k, v in zip(cfg.parity, cfg.eps_freq)]
    idx = list(itertools.product(*ranges))
    return np.asarray(idx, dtype=np.int64).reshape(len(idx), cfg.dim)


def build_node_table(cfg: Config) -> NodeTable:
    class0 = node_indices(cfg, 0)
    class1 = node_indices(cfg, 1)
    indices = np.vstack([class0, class1])
    exact = tuple(node_weight(cfg, row) for row in indices.tolist())
    weights = np.array([float(w) for w in exact])
    angles = indices * (np.pi / np.asarray(cfg.eps_freq, dtype=np.float64))
    points = np.cos(angles)
    for arr in (indices, points, weights):
        arr.setflags(write=False)
    return NodeTable(cfg, indices, points, weights, exact, len(class0))


def validate_bijection(table: NodeTable) -> bool:
    """True iff all rows are distinct points, compared on exact angles i / (eps n)."""
    en = table.cfg.eps_freq
    keys = {tuple(Fraction(int(i), v) for i, v in zip(row, en)) for row in table.indices}
    in_range = bool(np.all((table.indices >= 0) & (table.indices <= np.asarray(en))))
    return in_range and len(keys) == len(table)


__all__ = ["NodeTable", "build_node_table", "node_indices", "node_weight",
           "validate_bijection", "ValidationError"]
