"""Dense matrix family attached to one connected graph.

RD holds reciprocal distances 1/d_ij off the diagonal; RT is the
diagonal of its row sums (the reciprocal transmissions); RL = RT - RD
and RQ = RT + RD are the Laplacian-style companions.  The convex blend
alpha*RT + (1-alpha)*RD walks from RD (alpha=0) through RQ/2
(alpha=1/2) to RT (alpha=1).

Reciprocal distances 1, 1/2, 1/4 are exact binary fractions; 1/3, 1/6,
... are not, so every comparison downstream goes through an explicit
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import all_pairs_distances

__all__ = [
    "check_alpha",
    "MatrixBundle",
    "build_bundle",
    "rd_alpha",
    "a_alpha",
    "format_matrix",
]


def check_alpha(alpha):
    """Validate and return the blend weight as a float in [0, 1]."""
    a = float(alpha)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return a


@dataclass(frozen=True)
class MatrixBundle:
    """Immutable matrices derived from one graph (arrays are write-locked)."""

    n: int
    distances: np.ndarray
    rd: np.ndarray
    transmissions: np.ndarray
    adjacency: np.ndarray
    degrees: np.ndarray

    @property
    def rt(self):
        return np.diag(self.transmissions)

    @property
    def rl(self):
        return np.diag(self.transmissions) - self.rd

    @property
    def rq(self):
        return np.diag(self.transmissions) + self.rd

    @property
    def harary(self):
        return float(self.transmissions.sum() / 2.0)


def _lock(a):
    a.setflags(write=False)
    return a


def build_bundle(g):
    """Distances, reciprocal distances, transmissions, adjacency and degrees of g."""
    d = all_pairs_distances(g)
    rd = np.zeros(d.shape)
    off = d > 0
    rd[off] = 1.0 / d[off]
    tr = rd.sum(axis=1)
    a = g.adjacency()
    deg = a.sum(axis=1)
    return MatrixBundle(
        n=g.n,
        distances=_lock(d),
        rd=_lock(rd),
        transmissions=_lock(tr),
        adjacency=_lock(a),
        degrees=_lock(deg),
    )


def rd_alpha(bundle, alpha):
    """The blend alpha*RT + (1-alpha)*RD as a fresh symmetric matrix."""
    a = check_alpha(alpha)
    m = (1.0 - a) * bundle.rd
    m[np.diag_indices(bundle.n)] = a * bundle.transmissions
    return m


def a_alpha(g, alpha):
    """Adjacency blend alpha*D + (1-alpha)*A with D the degree diagonal."""
    a = check_alpha(alpha)
    adj = g.adjacency()
    m = (1.0 - a) * adj
    m[np.diag_indices(g.n)] = a * adj.sum(axis=1)
    return m


def format_matrix(m):
    """Plain-text dump, one row per line, 17 significant digits, for cross-tool diffs."""
    m = np.asarray(m)
    return "\n".join(" ".join(f"{x:.17g}" for x in row) for row in m) + "\n"
