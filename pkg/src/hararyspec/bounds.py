"""Lower and upper bounds on the spectral radius of the distance blends.

Reports are schema-stable: every bound a routine knows about is always
emitted, and when a bound's hypotheses fail for the requested alpha the
record is flagged applicable=False with a reason rather than dropped,
so downstream diffs never change shape.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .enumeration import canonical_form
from .eigen import sym_eigen
from .graphs import complete_bipartite
from .invariants import bipartition
from .matrices import build_bundle, check_alpha, rd_alpha

__all__ = [
    "BoundRecord",
    "bound_report",
    "rq_relation_bounds",
    "bipartite_bound",
]


@dataclass(frozen=True)
class BoundRecord:
    """One evaluated bound: direction, value, and whether it applies at this alpha."""

    name: str
    kind: str  # "lower" | "upper"
    value: float
    applicable: bool = True
    reason: str = ""
    tight: bool | None = None


def bound_report(g, alpha):
    """All row-sum and transmission-based bounds on the blend's spectral radius.

    Emits, in order: the row-norm upper bound max_i {alpha*RTr_i +
    (1-alpha)*sqrt((n-1) * sum_k (1/d_ki)^2)} (inapplicable at
    alpha = 1, where the blend is diagonal and reducible); the
    transmission-weighted row-sum sandwich with weights RT_i / RTr_i
    where RT_i = sum_j RTr_j / d_ij; the root-mean-square transmission
    lower bound and its sqrt(RTr_j/RTr_i)-weighted upper partner; the
    mean-transmission (Harary) lower bound 2H/n; the scaled maximum
    transmission alpha*RTr_max; and the plain maximum transmission
    upper bound.
    """
    a = check_alpha(alpha)
    bundle = build_bundle(g)
    n = bundle.n
    tr = bundle.transmissions
    rd = bundle.rd
    if n == 1:
        zero = dict(value=0.0, applicable=False, reason="single-vertex graph is trivial")
        return [
            BoundRecord("row_norm_upper", "upper", **zero),
            BoundRecord("weighted_transmission_lower", "lower", **zero),
            BoundRecord("weighted_transmission_upper", "upper", **zero),
            BoundRecord("rms_transmission_lower", "lower", **zero),
            BoundRecord("ratio_row_sum_upper", "upper", **zero),
            BoundRecord("harary_lower", "lower", **zero),
            BoundRecord("scaled_transmission_lower", "lower", **zero),
            BoundRecord("max_transmission_upper", "upper", **zero),
        ]
    row_norm = float(np.max(a * tr + (1.0 - a) * np.sqrt((n - 1.0) * (rd * rd).sum(axis=0))))
    weighted = a * tr + (1.0 - a) * (rd @ tr) / tr
    sqrt_tr = np.sqrt(tr)
    ratio = a * tr + (1.0 - a) * (rd @ sqrt_tr) / sqrt_tr
    records = [
        BoundRecord(
            "row_norm_upper",
            "upper",
            row_norm,
            applicable=a < 1.0,
            reason="" if a < 1.0 else "blend is diagonal (reducible) at alpha = 1",
        ),
        BoundRecord("weighted_transmission_lower", "lower", float(weighted.min())),
        BoundRecord("weighted_transmission_upper", "upper", float(weighted.max())),
        BoundRecord("rms_transmission_lower", "lower", float(np.sqrt((tr * tr).mean()))),
        BoundRecord("ratio_row_sum_upper", "upper", float(ratio.max())),
        BoundRecord("harary_lower", "lower", float(tr.mean())),
        BoundRecord("scaled_transmission_lower", "lower", float(a * tr.max())),
        BoundRecord("max_transmission_upper", "upper", float(tr.max())),
    ]
    return records


def rq_relation_bounds(g, alpha):
    """Bounds that trade the blend's radius against rho(RD) and rho(RQ).

    The blend pair at alpha and 1-alpha sums to the signless companion
    RQ, which yields one regime of mixed bounds for alpha <= 1/2 and the
    mirrored regime for alpha >= 1/2, plus the sum relation
    rho(blend at alpha) >= rho(RQ) - rho(blend at 1-alpha).
    """
    a = check_alpha(alpha)
    bundle = build_bundle(g)
    tr_max = float(bundle.transmissions.max())
    rho_rd = float(sym_eigen(bundle.rd).values[0])
    rho_rq = float(sym_eigen(bundle.rq).values[0])
    rho_mirror = float(sym_eigen(rd_alpha(bundle, 1.0 - a)).values[0])
    small = a <= 0.5
    large = a >= 0.5
    blend_small_lower = (1.0 - a) * rho_rq + (2.0 * a - 1.0) * tr_max
    blend_small_upper = a * rho_rq + (1.0 - 2.0 * a) * rho_rd
    return [
        BoundRecord(
            "rq_blend_lower_small_alpha",
            "lower",
            blend_small_lower,
            applicable=small,
            reason="" if small else "regime needs alpha <= 1/2",
        ),
        BoundRecord(
            "rq_blend_upper_small_alpha",
            "upper",
            blend_small_upper,
            applicable=small,
            reason="" if small else "regime needs alpha <= 1/2",
        ),
        BoundRecord(
            "rq_blend_lower_large_alpha",
            "lower",
            blend_small_upper,
            applicable=large,
            reason="" if large else "regime needs alpha >= 1/2",
        ),
        BoundRecord(
            "rq_blend_upper_large_alpha",
            "upper",
            blend_small_lower,
            applicable=large,
            reason="" if large else "regime needs alpha >= 1/2",
        ),
        BoundRecord("rq_sum_lower", "lower", rho_rq - rho_mirror),
    ]


def bipartite_bound(g, alpha):
    """Upper bound for connected bipartite graphs, tight exactly on K_{a,n-a}."""
    a = check_alpha(alpha)
    is_bip, sizes = bipartition(g)
    if not is_bip:
        raise ValueError("graph is not bipartite")
    small, large = sizes
    n = g.n
    lin = (a + 0.5) * n - 1.0
    disc = ((a - 0.5) * (2.0 * small - n)) ** 2 + 4.0 * (1.0 - a) ** 2 * small * large
    value = 0.5 * (lin + np.sqrt(disc))
    tight = canonical_form(g) == canonical_form(complete_bipartite(small, large))
    return BoundRecord("bipartite_upper", "upper", float(value), tight=tight)
