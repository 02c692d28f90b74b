#!/usr/bin/env python3
"""Spectral-radius bounds evaluated on sample graphs.

Every record sandwiches the true radius; on transmission-regular graphs
the mean-transmission lower bound (and several others) collapse onto
the radius exactly.
"""

from hararyspec import (
    bipartite_bound,
    bipartition,
    bound_report,
    complete_bipartite,
    cycle,
    path,
    rq_relation_bounds,
    spectral_radius,
    star,
    wheel,
)

for g, name in [
    (path(4), "P_4"),
    (cycle(5), "C_5 (transmission regular)"),
    (star(5), "K_{1,4}"),
    (wheel(6), "W(6)"),
    (complete_bipartite(2, 4), "K_{2,4}"),
]:
    for alpha in (0.0, 0.5):
        rho = spectral_radius(g, alpha)
        print(f"=== {name}, alpha={alpha}:  rho = {rho:.9f}")
        records = bound_report(g, alpha) + rq_relation_bounds(g, alpha)
        if bipartition(g)[0]:
            records.append(bipartite_bound(g, alpha))
        for rec in records:
            if not rec.applicable:
                print(f"    {rec.name:<32} {rec.kind:<5} (not applicable: {rec.reason})")
                continue
            gap = rho - rec.value if rec.kind == "lower" else rec.value - rho
            tight = "  <- tight" if rec.tight else ""
            print(f"    {rec.name:<32} {rec.kind:<5} {rec.value:15.9f}  slack {gap:.2e}{tight}")
    print()
