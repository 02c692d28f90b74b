#!/usr/bin/env python3
"""Exhaustive verification of the predicted spectral-radius maximizers.

For each constraint the search enumerates every connected isomorphism
class of the given order, filters by the exact invariant, and checks
that the predicted extremal graph is the unique radius maximizer:

* fixed vertex or edge connectivity r: an r-clique joined to K_1 u K_{n-r-1}
* fixed chromatic number: the balanced complete multipartite graph
  (guaranteed for alpha <= 7/16; beyond that the scan is exploratory)
* fixed independence number k: the join of k isolated vertices with a
  clique attains the closed-form radius bound
"""

import json

from hararyspec import (
    independence_rho_bound,
    verify_chromatic_extremal,
    verify_edge_connectivity_extremal,
    verify_independence_extremal,
    verify_vertex_connectivity_extremal,
)

print("vertex connectivity, n=6, alpha=0.25:")
for r in range(1, 5):
    rep = verify_vertex_connectivity_extremal(6, r, 0.25)
    print(f"  r={r}: {rep.verdict}, rho_max={rep.rho_max:.9f}, maximizer={rep.maximizers[0]}")

print("\nedge connectivity, n=6, alpha=0.5:")
for r in range(1, 5):
    rep = verify_edge_connectivity_extremal(6, r, 0.5)
    print(f"  r={r}: {rep.verdict}, rho_max={rep.rho_max:.9f}, maximizer={rep.maximizers[0]}")

print("\nchromatic number, n=6, alpha=0.25 (guaranteed regime):")
for chi in range(2, 7):
    rep = verify_chromatic_extremal(6, chi, 0.25)
    print(f"  chi={chi}: {rep.verdict}, predicted={rep.predicted}")

print("\nchromatic number, n=6, chi=3, exploratory alpha scan past 7/16:")
for alpha in (0.4375, 0.5, 0.6, 0.75, 0.9):
    rep = verify_chromatic_extremal(6, 3, alpha)
    tag = "exploratory" if rep.exploratory else "guaranteed"
    print(f"  alpha={alpha:<7} {rep.verdict:<10} ({tag})")

print("\nindependence number, n=6, alpha=0:")
for k in range(1, 6):
    rep = verify_independence_extremal(6, k, 0.0)
    bound = independence_rho_bound(6, k, 0.0)
    print(f"  k={k}: {rep.verdict}, bound={bound:.9f}, rho_max={rep.rho_max:.9f}")

print("\nfull JSON report for one scan:")
print(json.dumps(verify_vertex_connectivity_extremal(5, 2, 0.0).to_json(), indent=2))
