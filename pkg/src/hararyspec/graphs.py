"""Graph type, standard constructors, and distance-based quantities.

Vertices are always labelled 0..n-1.  Adjacency is stored as one Python
integer bitmask per vertex: at the orders this package targets (a few
dozen vertices) that representation makes breadth-first search, subset
tests and the isomorphism machinery both simple and fast.
"""

from __future__ import annotations

import numpy as np

from .errors import NotConnectedError

__all__ = [
    "Graph",
    "triangle_pairs",
    "complete",
    "edgeless",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "complete_split",
    "complete_multipartite",
    "turan",
    "wheel",
    "join",
    "disjoint_union",
    "all_pairs_distances",
    "reciprocal_matrix",
    "reciprocal_transmissions",
    "harary_index",
    "is_transmission_regular",
    "pendant_counts",
]


def _bit_indices(mask):
    """Yield positions of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def triangle_pairs(n):
    """Vertex pairs (i, j) with i < j in column-major order (0,1),(0,2),(1,2),(0,3),...

    This is the bit order used by the graph6 format and by every edge
    bitmask in the package.
    """
    return [(i, j) for j in range(1, n) for i in range(j)]


class Graph:
    """Immutable simple undirected graph on vertex set {0, ..., n-1}."""

    __slots__ = ("n", "adj_bits")

    def __init__(self, n, edges=()):
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj_bits = tuple(adj)

    @classmethod
    def _from_adj(cls, n, adj_bits):
        g = object.__new__(cls)
        g.n = n
        g.adj_bits = tuple(adj_bits)
        return g

    @property
    def edge_count(self):
        return sum(a.bit_count() for a in self.adj_bits) // 2

    def edges(self):
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in _bit_indices(self.adj_bits[u]) if u < v]

    def has_edge(self, u, v):
        return bool(self.adj_bits[u] >> v & 1)

    def neighbors(self, v):
        return tuple(_bit_indices(self.adj_bits[v]))

    def degree(self, v):
        return self.adj_bits[v].bit_count()

    def degrees(self):
        return tuple(a.bit_count() for a in self.adj_bits)

    def adjacency(self):
        """Dense 0/1 adjacency matrix as floats."""
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def with_edge(self, u, v):
        """New graph with the edge {u, v} added (no-op edges are rejected)."""
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        adj = list(self.adj_bits)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._from_adj(self.n, adj)

    def non_edges(self):
        """All vertex pairs (u, v), u < v, that are not edges."""
        return [(u, v) for (u, v) in triangle_pairs(self.n) if not self.has_edge(u, v)]

    def permuted(self, perm):
        """Relabel: vertex v becomes perm[v]."""
        adj = [0] * self.n
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        return Graph._from_adj(self.n, adj)

    def is_connected(self):
        full = (1 << self.n) - 1
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in _bit_indices(frontier):
                reach |= self.adj_bits[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == full

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj_bits == other.adj_bits

    def __hash__(self):
        return hash((self.n, self.adj_bits))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def complete(n):
    """Complete graph on n vertices."""
    return Graph(n, triangle_pairs(n))


def edgeless(n):
    """Graph on n vertices with no edges."""
    return Graph(n)


def path(n):
    """Path 0-1-...-(n-1)."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n):
    """Star of order n: centre 0 joined to n-1 leaves."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a, b):
    """Complete bipartite graph with parts of size a and b."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_split(a, b):
    """Complete split graph: an a-clique fully joined to b independent vertices."""
    if a < 1 or b < 1:
        raise ValueError("complete split graph needs a >= 1 and b >= 1")
    edges = triangle_pairs(a) + [(i, a + j) for i in range(a) for j in range(b)]
    return Graph(a + b, edges)


def complete_multipartite(parts):
    """Complete multipartite graph with the given part sizes."""
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    n = offsets[-1]
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            edges.extend(
                (u, v)
                for u in range(offsets[i], offsets[i + 1])
                for v in range(offsets[j], offsets[j + 1])
            )
    return Graph(n, edges)


def turan(n, r):
    """Turan graph: complete r-partite graph on n vertices with balanced parts."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    big, rest = divmod(n, r)
    parts = [big + 1] * rest + [big] * (r - rest)
    return complete_multipartite(parts)


def wheel(n):
    """Wheel of order n >= 4: a hub joined to every vertex of an (n-1)-cycle."""
    if n < 4:
        raise ValueError("wheel needs at least 4 vertices")
    return join(complete(1), cycle(n - 1))


def join(g1, g2):
    """Join: disjoint union of g1 and g2 plus all cross edges."""
    n1 = g1.n
    edges = g1.edges()
    edges += [(n1 + u, n1 + v) for u, v in g2.edges()]
    edges += [(u, n1 + v) for u in range(n1) for v in range(g2.n)]
    return Graph(n1 + g2.n, edges)


def disjoint_union(g1, g2):
    """Disjoint union with g2's vertices shifted past g1's."""
    n1 = g1.n
    edges = g1.edges() + [(n1 + u, n1 + v) for u, v in g2.edges()]
    return Graph(n1 + g2.n, edges)


# ---------------------------------------------------------------------------
# Distances and transmissions
# ---------------------------------------------------------------------------

def all_pairs_distances(g):
    """Hop-count distance matrix of a connected graph (BFS from every vertex).

    Raises NotConnectedError on disconnected input: reciprocal distances
    of unreachable pairs are undefined, and a silent 1/inf = 0 would
    corrupt every transmission downstream.
    """
    n = g.n
    adj = g.adj_bits
    full = (1 << n) - 1
    d = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        seen = 1 << s
        frontier = seen
        dist = 0
        while frontier:
            reach = 0
            for v in _bit_indices(frontier):
                reach |= adj[v]
            frontier = reach & ~seen
            dist += 1
            for v in _bit_indices(frontier):
                d[s, v] = dist
            seen |= frontier
        if seen != full:
            raise NotConnectedError("graph not connected")
    return d


def reciprocal_matrix(g):
    """Matrix of reciprocal distances 1/d_ij with zero diagonal."""
    d = all_pairs_distances(g)
    rd = np.zeros(d.shape)
    off = d > 0
    rd[off] = 1.0 / d[off]
    return rd


def reciprocal_transmissions(g):
    """Per-vertex sums of reciprocal distances to all other vertices."""
    return reciprocal_matrix(g).sum(axis=1)


def harary_index(g):
    """Sum of reciprocal distances over unordered vertex pairs."""
    return float(reciprocal_transmissions(g).sum() / 2.0)


def is_transmission_regular(g, tol=1e-8):
    """True when all reciprocal transmissions agree within ``tol``."""
    tr = reciprocal_transmissions(g)
    return bool(tr.max() - tr.min() <= tol)


def pendant_counts(g):
    """Number of degree-1 vertices and of their distinct neighbours (p, q)."""
    pendants = [v for v in range(g.n) if g.degree(v) == 1]
    quasi = {g.neighbors(v)[0] for v in pendants}
    return len(pendants), len(quasi)
