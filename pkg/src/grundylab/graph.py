"""Bitset graphs on at most 64 vertices.

A vertex set is a plain ``int`` bitmask: bit ``v`` is set when vertex ``v``
belongs to the set.  Graphs are immutable and hashable, so solver results
can be cached on them.
"""

from dataclasses import dataclass

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


def vertices(mask):
    """Vertices of a bitmask in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vs):
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def lowest(mask):
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match order")
        full = self.full
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {u} has a neighbor outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in vertices(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def full(self):
        return (1 << self.n) - 1

    @property
    def m(self):
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v):
        return self.adj[v].bit_count()

    def degrees(self):
        return [row.bit_count() for row in self.adj]

    def min_degree(self):
        return min(self.degrees(), default=0)

    def max_degree(self):
        return max(self.degrees(), default=0)

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return vertices(self.adj[v])

    def edges(self):
        """Edges ``(u, v)`` with ``u < v`` in ascending order."""
        return [(u, v) for u in range(self.n) for v in vertices(self.adj[u] >> (u + 1) << (u + 1))]

    def is_complete(self):
        return all(row == self.full ^ (1 << v) for v, row in enumerate(self.adj))

    def is_regular(self):
        return len(set(self.degrees())) <= 1

    def is_independent(self, mask):
        return all(not self.adj[v] & mask for v in vertices(mask))

    def is_clique(self, mask):
        return all((mask & ~(1 << v)) & ~self.adj[v] == 0 for v in vertices(mask))

    def component_of(self, v, within=None):
        within = self.full if within is None else within
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in vertices(frontier):
                nxt |= self.adj[u]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def is_connected(self):
        return self.n == 0 or self.component_of(0) == self.full


def from_edges(n, edges):
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"order {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g):
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g, s):
    """G[S] with the vertices of ``s`` relabeled 0..|s|-1 in ascending order."""
    keep = vertices(s & g.full)
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(mask_of(index[u] for u in vertices(g.adj[v] & s)))
    return Graph(len(keep), tuple(adj))


def relabel(g, perm):
    """Graph whose vertex ``i`` is vertex ``perm[i]`` of ``g``."""
    pos = [0] * g.n
    for i, v in enumerate(perm):
        pos[v] = i
    adj = [0] * g.n
    for i, v in enumerate(perm):
        adj[i] = mask_of(pos[u] for u in vertices(g.adj[v]))
    return Graph(g.n, tuple(adj))


def disjoint_union(g, h):
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"combined order {g.n + h.n} exceeds {MAX_VERTICES}")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g, h):
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"combined order {g.n + h.n} exceeds {MAX_VERTICES}")
    left = g.full
    right = h.full << g.n
    return Graph(
        g.n + h.n,
        tuple(row | right for row in g.adj) + tuple((row << g.n) | left for row in h.adj),
    )
