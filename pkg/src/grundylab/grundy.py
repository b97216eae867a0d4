"""Grundy (first-fit) colorings and exact Grundy / achromatic numbers."""

import math
import random
from functools import lru_cache

from . import kernels
from .coloring import Coloring, GrundyCertificate
from .graph import GraphError, vertices
from .invariants import EPS, _maximal_cliques, degeneracy
from .limits import require

GREEDY_RESTARTS = 32


def _check_order(g, order):
    if sorted(order) != list(range(g.n)):
        raise GraphError("order is not a permutation of the vertices")


def greedy_coloring(g, order):
    """First-fit: each vertex takes the least color missing among its
    already-colored neighbors."""
    _check_order(g, order)
    classes = []
    for v in order:
        row = g.adj[v]
        for i, cls_ in enumerate(classes):
            if not row & cls_:
                classes[i] = cls_ | 1 << v
                break
        else:
            classes.append(1 << v)
    return Coloring(tuple(classes))


def grundy_violation(g, coloring):
    """First ``(vertex, class index)`` breaking the Grundy property, else None.

    A vertex breaks it either by having a neighbor in its own class (the
    returned index is its own class) or by missing every neighbor in some
    lower class.  Raises GraphError when ``coloring`` is not a partition.
    """
    coloring.check_partition(g)
    classes = coloring.classes
    for v in range(g.n):
        i = next(c for c, cls_ in enumerate(classes) if cls_ >> v & 1)
        if g.adj[v] & classes[i]:
            return v, i
        for j in range(i):
            if not g.adj[v] & classes[j]:
                return v, j
    return None


def is_grundy_coloring(g, coloring):
    return grundy_violation(g, coloring) is None


class _GrundySearch:
    """Gamma(G[S]) = 1 + max over maximal independent sets I of Gamma(G[S - I]).

    The first class of any Grundy coloring is a maximal independent set, and
    prefixing such a set to a Grundy coloring of the rest gives a Grundy
    coloring again.  Values are memoized per surviving vertex set; pruning
    only ever skips branches that cannot beat a value already found, so
    every memo entry is exact.
    """

    def __init__(self, g):
        self.g = g
        full = g.full
        self.co = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))
        self.memo = {}
        self.bounds = {}

    def upper(self, s):
        """min(Delta2+1, floor((n+omega)/2), floor(2R)) on G[S]."""
        hit = self.bounds.get(s)
        if hit is not None:
            return hit
        adj = self.g.adj
        vs = vertices(s)
        deg = {v: (adj[v] & s).bit_count() for v in vs}
        if not any(deg.values()):
            bound = 1 if vs else 0
        else:
            d2 = 0
            randic = 0.0
            for u in vs:
                for v in vertices(adj[u] & s):
                    if deg[v] <= deg[u]:
                        d2 = max(d2, deg[v])
                    if u < v:
                        randic += 1.0 / math.sqrt(deg[u] * deg[v])
            omega = max(c.bit_count() for c in _maximal_cliques(adj, s))
            bound = min(d2 + 1, (len(vs) + omega) // 2, math.floor(2 * randic + EPS))
        self.bounds[s] = bound
        return bound

    def solve(self, s):
        if not s:
            return 0
        hit = self.memo.get(s)
        if hit is not None:
            return hit[0]
        cap = self.upper(s)
        best, arg = 0, 0
        for ind in _maximal_cliques(self.co, s):
            rest = s & ~ind
            if rest and 1 + self.upper(rest) <= best:
                continue
            value = 1 + self.solve(rest)
            if value > best:
                best, arg = value, ind
                if best >= cap:
                    break
        self.memo[s] = (best, arg)
        return best

    def chain(self, first, rest):
        classes = [first]
        while rest:
            ind = self.memo[rest][1]
            classes.append(ind)
            rest &= ~ind
        return Coloring(tuple(classes))


def _greedy_incumbent(g, restarts=GREEDY_RESTARTS, seed=0):
    rng = random.Random(seed)
    best = greedy_coloring(g, list(degeneracy(g).ordering))
    order = list(range(g.n))
    for _ in range(restarts):
        rng.shuffle(order)
        c = greedy_coloring(g, order)
        if c.k > best.k:
            best = c
    return best


@lru_cache(maxsize=65536)
def grundy_number(g):
    """Exact Grundy number with a validated certificate."""
    if g.n == 0:
        raise GraphError("Grundy number is undefined on the empty graph")
    require("grundy", g.n, "grundy_number")
    search = _GrundySearch(g)
    incumbent = _greedy_incumbent(g)
    cap = search.upper(g.full)
    best, coloring = incumbent.k, incumbent
    if best < cap:
        for ind in _maximal_cliques(search.co, g.full):
            rest = g.full & ~ind
            if rest and 1 + search.upper(rest) <= best:
                continue
            value = 1 + search.solve(rest)
            if value > best:
                best, coloring = value, search.chain(ind, rest)
                if best >= cap:
                    break
    if grundy_violation(g, coloring) is not None or coloring.k != best:
        raise AssertionError("Grundy solver produced an invalid certificate")
    cert = GrundyCertificate.build(g, coloring)
    if not cert.verify(g):
        raise AssertionError("Grundy certificate failed witness verification")
    return best, cert


def grundy_brute_force(g):
    """Max first-fit class count over all n! vertex orders."""
    if g.n == 0:
        raise GraphError("Grundy number is undefined on the empty graph")
    require("brute", g.n, "grundy_brute_force")
    a = kernels.adjacency_matrix(g.adj, g.n)
    return kernels.max_first_fit(a, g.max_degree() + 1)


def _complete_coloring_exists(g, k, order):
    n = g.n
    if k > n:
        return False
    classes = [0] * k
    edges_between = [[0] * k for _ in range(k)]
    need = k * (k - 1) // 2
    state = {"covered": 0, "used": 0, "open_edges": g.m, "colored": 0}

    def assign(v, c, sign):
        row = g.adj[v]
        for d in range(k):
            if d == c:
                continue
            t = (row & classes[d]).bit_count()
            if not t:
                continue
            a, b = (c, d) if c < d else (d, c)
            before = edges_between[a][b]
            edges_between[a][b] += sign * t
            if before == 0 and sign > 0:
                state["covered"] += 1
            elif edges_between[a][b] == 0 and sign < 0:
                state["covered"] -= 1

    def search(pos):
        if pos == n:
            return state["used"] == k and state["covered"] == need
        if need - state["covered"] > state["open_edges"]:
            return False
        if k - state["used"] > n - pos:
            return False
        v = order[pos]
        bit = 1 << v
        closed = (g.adj[v] & state["colored"]).bit_count()
        for c in range(min(k, state["used"] + 1)):
            if g.adj[v] & classes[c]:
                continue
            fresh = c == state["used"]
            assign(v, c, +1)
            classes[c] |= bit
            state["colored"] |= bit
            state["open_edges"] -= closed
            if fresh:
                state["used"] += 1
            if search(pos + 1):
                return True
            if fresh:
                state["used"] -= 1
            state["open_edges"] += closed
            state["colored"] &= ~bit
            classes[c] &= ~bit
            assign(v, c, -1)
        return False

    return search(0)


@lru_cache(maxsize=4096)
def achromatic_number(g):
    """Largest k admitting a complete k-coloring (every color pair on an edge).

    Candidates start at the largest k with k(k-1)/2 <= m and go down.
    """
    if g.n == 0:
        raise GraphError("achromatic number is undefined on the empty graph")
    require("psi", g.n, "achromatic_number")
    k = 1
    while (k + 1) * k // 2 <= g.m and k + 1 <= g.n:
        k += 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    while k > 1 and not _complete_coloring_exists(g, k, order):
        k -= 1
    return k
