#!/usr/bin/env python3
"""Tour of the reciprocal-distance matrices and their alpha blends.

Builds a few small graphs, prints the matrix family (RD, RT, RL, RQ),
and walks the blend alpha*RT + (1-alpha)*RD from alpha=0 to alpha=1,
showing eigenvalues, spectral radius, Perron vector and energy.
"""

import numpy as np

from hararyspec import (
    build_bundle,
    complete,
    cycle,
    format_matrix,
    harary_index,
    path,
    perron_vector,
    rd_alpha,
    rd_alpha_energy,
    rd_alpha_spectrum,
    reciprocal_transmissions,
    star,
    to_graph6,
)

np.set_printoptions(precision=6, suppress=True)

for g, name in [(path(3), "path P3"), (cycle(4), "cycle C4"), (star(5), "star K_{1,4}")]:
    print(f"=== {name}  (graph6: {to_graph6(g)}) ===")
    bundle = build_bundle(g)
    print("reciprocal distance matrix RD:")
    print(format_matrix(bundle.rd), end="")
    print("reciprocal transmissions:", reciprocal_transmissions(g))
    print("Harary index:", harary_index(g))
    print("RL = RT - RD row sums (should vanish):", bundle.rl.sum(axis=1))
    for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
        spec = rd_alpha_spectrum(g, alpha)
        energy = rd_alpha_energy(g, alpha)
        print(f"  alpha={alpha:4.2f}  eigenvalues={np.round(spec.values, 6)}  energy={energy:.6f}")
    vec = perron_vector(g, 0.0)
    print("Perron vector at alpha=0 (strictly positive):", np.round(vec, 6))
    print()

print("blend identities on C4:")
bundle = build_bundle(cycle(4))
print("  blend(0)   == RD:", np.array_equal(rd_alpha(bundle, 0.0), bundle.rd))
print("  blend(1)   == RT:", np.array_equal(rd_alpha(bundle, 1.0), bundle.rt))
print("  2*blend(½) == RQ:", np.array_equal(2.0 * rd_alpha(bundle, 0.5), bundle.rq))
print("eigenvalues of K5 blend at alpha=0.2 (expect {4, 0,0,0,0}):")
print(" ", np.round(rd_alpha_spectrum(complete(5), 0.2).values, 9))
