"""Shared fixtures and independent oracles for the test-suite.

The oracles here deliberately avoid the library's own algorithms:
connectivity-style invariants are recomputed by plain subset
enumeration over explicit edge sets, isomorphism classes are counted by
minimizing edge bitmasks over all n! permutations with numpy, and
reference spectra come from numpy's eigensolver.  Whatever the library
computes with refinement, branch-and-bound or Jacobi sweeps is checked
against these slower, simpler routes.
"""

from itertools import combinations, permutations, product

import numpy as np
import pytest

from hararyspec import Graph, build_bundle, rd_alpha, sym_eigen
from hararyspec.enumeration import enumerate_connected_graphs
from hararyspec.graphs import triangle_pairs

ALPHA_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)


# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------

def make_paw():
    """Triangle with one pendant vertex."""
    return Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])


def make_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def make_double_star(p, q):
    """Adjacent centres 0 and 1 with p and q leaves respectively."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + i) for i in range(q)]
    return Graph(2 + p + q, edges)


@pytest.fixture
def paw():
    return make_paw()


@pytest.fixture
def petersen():
    return make_petersen()


# ---------------------------------------------------------------------------
# Cached per-graph spectra over the enumerated catalogue
# ---------------------------------------------------------------------------

class CatalogEntry:
    def __init__(self, graph):
        self.graph = graph
        self.bundle = build_bundle(graph)
        self._spectra = {}

    def eigenvalues(self, alpha):
        if alpha not in self._spectra:
            self._spectra[alpha] = sym_eigen(rd_alpha(self.bundle, alpha)).values
        return self._spectra[alpha]

    def rho(self, alpha):
        return float(self.eigenvalues(alpha)[0])

    def lambda_min(self, alpha):
        return float(self.eigenvalues(alpha)[-1])


class Catalog:
    def __init__(self):
        self._orders = {}

    def entries(self, n):
        if n not in self._orders:
            self._orders[n] = [CatalogEntry(g) for g in enumerate_connected_graphs(n)]
        return self._orders[n]

    def up_to(self, n, start=1):
        out = []
        for k in range(start, n + 1):
            out.extend(self.entries(k))
        return out


@pytest.fixture(scope="session")
def catalog():
    return Catalog()


# ---------------------------------------------------------------------------
# Brute-force invariant oracles (edge-set based, no bitmask tricks)
# ---------------------------------------------------------------------------

def _components(n, edges, dropped_vertices=frozenset()):
    vertices = [v for v in range(n) if v not in dropped_vertices]
    adj = {v: set() for v in vertices}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].add(v)
            adj[v].add(u)
    seen = set()
    count = 0
    for start in vertices:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def brute_vertex_connectivity(g):
    n, edges = g.n, g.edges()
    if _components(n, edges) != 1:
        return 0
    if len(edges) == n * (n - 1) // 2:
        return n - 1
    for k in range(1, n - 1):
        for cut in combinations(range(n), k):
            if _components(n, edges, frozenset(cut)) > 1:
                return k
    return n - 1


def brute_edge_connectivity(g):
    n, edges = g.n, g.edges()
    if n == 1 or _components(n, edges) != 1:
        return 0
    for k in range(1, len(edges) + 1):
        for cut in combinations(edges, k):
            kept = [e for e in edges if e not in set(cut)]
            if _components(n, kept) > 1:
                return k
    return len(edges)


def brute_chromatic_number(g):
    n, edges = g.n, g.edges()
    if not edges:
        return 1
    for k in range(1, n + 1):
        for coloring in product(range(k), repeat=n):
            if all(coloring[u] != coloring[v] for u, v in edges):
                return k
    return n


def brute_independence_number(g):
    n, edges = g.n, g.edges()
    edge_set = set(edges)
    for size in range(n, 0, -1):
        for sub in combinations(range(n), size):
            if all((u, v) not in edge_set for u, v in combinations(sub, 2)):
                return size
    return 1


# ---------------------------------------------------------------------------
# Labeled-graph isomorphism-class oracle (independent of canonical_form)
# ---------------------------------------------------------------------------

def _mask_connected(n, mask, pairs):
    adj = {v: set() for v in range(n)}
    for k, (i, j) in enumerate(pairs):
        if mask >> k & 1:
            adj[i].add(j)
            adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def connected_class_count_bruteforce(n):
    """Count connected isomorphism classes by minimizing edge bitmasks
    over all n! vertex permutations (vectorized over all labeled graphs)."""
    pairs = triangle_pairs(n)
    m = len(pairs)
    index = {pair: k for k, pair in enumerate(pairs)}
    masks = np.array(
        [mask for mask in range(1 << m) if _mask_connected(n, mask, pairs)],
        dtype=np.int64,
    )
    best = masks.copy()
    for perm in permutations(range(n)):
        out = np.zeros_like(masks)
        for k, (i, j) in enumerate(pairs):
            target = index[tuple(sorted((perm[i], perm[j])))]
            out |= ((masks >> k) & 1) << target
        np.minimum(best, out, out=best)
    return len(set(best.tolist()))


# ---------------------------------------------------------------------------
# Assertions
# ---------------------------------------------------------------------------

def assert_spectra_close(got, expected, tol=1e-8):
    got = np.sort(np.asarray(got, dtype=float))
    expected = np.sort(np.asarray(expected, dtype=float))
    assert got.shape == expected.shape, f"sizes differ: {got.shape} vs {expected.shape}"
    worst = float(np.abs(got - expected).max())
    assert worst <= tol, f"spectra differ by {worst:.3e} (tol {tol:.1e})\n{got}\n{expected}"
