"""Exact classical invariants for small graphs.

Everything here is exhaustive search or branch-and-bound: values are
exact, never heuristic, and a BudgetError is raised instead of silently
approximating once the order exceeds the n <= 10 desk budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetError
from .graphs import Graph

__all__ = [
    "INVARIANT_BUDGET",
    "GraphInvariants",
    "graph_invariants",
    "vertex_connectivity",
    "edge_connectivity",
    "chromatic_number",
    "independence_number",
    "clique_number",
    "bipartition",
]

INVARIANT_BUDGET = 10


@dataclass(frozen=True)
class GraphInvariants:
    vertex_connectivity: int
    edge_connectivity: int
    chromatic_number: int
    independence_number: int
    min_degree: int
    is_bipartite: bool
    bipartition_sizes: tuple[int, int] | None


def _check_budget(g, what):
    if g.n > INVARIANT_BUDGET:
        raise BudgetError(
            f"budget exceeded: exact {what} limited to n <= {INVARIANT_BUDGET}, got n={g.n}"
        )


def _connected_within(adj, mask):
    """Connectivity of the subgraph induced by the vertex bitmask ``mask``."""
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= adj[low.bit_length() - 1]
            m ^= low
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def vertex_connectivity(g: Graph):
    """Minimum number of vertex deletions that disconnect g (n-1 for complete graphs)."""
    _check_budget(g, "vertex connectivity")
    n = g.n
    full = (1 << n) - 1
    if not g.is_connected():
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    for k in range(1, n - 1):
        for cut in combinations(range(n), k):
            removed = 0
            for v in cut:
                removed |= 1 << v
            if not _connected_within(g.adj_bits, full & ~removed):
                return k
    return n - 1


def edge_connectivity(g: Graph):
    """Minimum edge-cut size, by scanning all vertex bipartitions."""
    _check_budget(g, "edge connectivity")
    n = g.n
    if n == 1 or not g.is_connected():
        return 0
    best = n * n
    # Vertex 0 stays on the complement side, so each bipartition appears once.
    for side in range(1, 1 << (n - 1)):
        mask = side << 1
        other = ((1 << n) - 1) & ~mask
        cut = 0
        m = mask
        while m:
            low = m & -m
            cut += (g.adj_bits[low.bit_length() - 1] & other).bit_count()
            m ^= low
        if cut < best:
            best = cut
    return best


def _max_clique(adj, n):
    """Exact maximum-clique size by branch and bound over candidate bitmasks."""
    best = 0

    def expand(clique_size, candidates):
        nonlocal best
        if clique_size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, clique_size)
            return
        while candidates:
            if clique_size + candidates.bit_count() <= best:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            expand(clique_size + 1, candidates & adj[v])

    expand(0, (1 << n) - 1)
    return best


def clique_number(g: Graph):
    """Size of a maximum clique."""
    _check_budget(g, "clique number")
    return _max_clique(g.adj_bits, g.n)


def independence_number(g: Graph):
    """Size of a maximum independent set (clique search on the complement)."""
    _check_budget(g, "independence number")
    n = g.n
    full = (1 << n) - 1
    comp = tuple((full & ~g.adj_bits[v]) & ~(1 << v) for v in range(n))
    return _max_clique(comp, n)


def _k_colorable(g, k, order):
    n = g.n
    colors = [-1] * n
    adj = g.adj_bits

    def assign(i, used):
        if i == n:
            return True
        v = order[i]
        forbidden = set()
        m = adj[v]
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if colors[u] >= 0:
                forbidden.add(colors[u])
        # Symmetry break: a fresh colour may only be the next unused index.
        for c in range(min(k, used + 1)):
            if c in forbidden:
                continue
            colors[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(g: Graph):
    """Exact chromatic number: iterative-deepening k-colouring from the clique bound."""
    _check_budget(g, "chromatic number")
    if g.edge_count == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    for k in range(clique_number(g), g.n + 1):
        if _k_colorable(g, k, order):
            return k
    return g.n


def bipartition(g: Graph):
    """(True, (a, b)) with a <= b when g is bipartite, else (False, None).

    Part sizes are only canonical for connected graphs, where the
    2-colouring is unique up to swapping the sides.
    """
    colors = [-1] * g.n
    for s in range(g.n):
        if colors[s] >= 0:
            continue
        colors[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.neighbors(u):
                if colors[v] < 0:
                    colors[v] = 1 - colors[u]
                    stack.append(v)
                elif colors[v] == colors[u]:
                    return False, None
    a = colors.count(0)
    sizes = (min(a, g.n - a), max(a, g.n - a))
    return True, sizes


def graph_invariants(g: Graph):
    """All exact invariants in one record."""
    _check_budget(g, "invariants")
    bip, sizes = bipartition(g)
    return GraphInvariants(
        vertex_connectivity=vertex_connectivity(g),
        edge_connectivity=edge_connectivity(g),
        chromatic_number=chromatic_number(g),
        independence_number=independence_number(g),
        min_degree=min(g.degrees()),
        is_bipartite=bip,
        bipartition_sizes=sizes,
    )
