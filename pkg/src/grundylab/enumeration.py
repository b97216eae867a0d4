"""Canonical forms, isomorphism testing and small-graph enumeration."""

from functools import lru_cache

import numpy as np

from . import kernels
from .graph import Graph, GraphError, relabel, vertices
from .limits import ENUMERATION_LIMIT, SolverLimitError, require


def _code(a, perm):
    n = len(perm)
    code = 0
    for j in range(1, n):
        pj = perm[j]
        for i in range(j):
            code = code << 1 | int(a[perm[i], pj])
    return code


def canonical_labeling(g):
    """Return ``(code, perm)`` for the least graph6 bit string over all relabelings.

    ``code`` reads the bit string as a binary integer, so two graphs of the
    same order are isomorphic exactly when their codes are equal.
    """
    a = kernels.adjacency_matrix(g.adj, g.n)
    perm = [int(v) for v in kernels.canonical_permutation(a)]
    return _code(a, perm), perm


def canonical_form(g):
    return relabel(g, canonical_labeling(g)[1])


def canonical_code(g):
    return canonical_labeling(g)[0]


def _signature(g, v):
    return g.degree(v), tuple(sorted(g.degree(u) for u in vertices(g.adj[v])))


def are_isomorphic(g, h, limit=None):
    """Exhaustive search for an adjacency-preserving bijection.

    Vertices are matched in order; a candidate image must share the degree
    and the sorted neighbor-degree list, and agree on adjacency with every
    vertex already mapped.
    """
    cap = limit if limit is not None else None
    if cap is None:
        require("iso", max(g.n, h.n), "are_isomorphic")
    elif max(g.n, h.n) > cap:
        raise SolverLimitError(f"are_isomorphic: n={max(g.n, h.n)} exceeds limit {cap}")
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    sig_g = [_signature(g, v) for v in range(g.n)]
    sig_h = [_signature(h, v) for v in range(h.n)]
    if sorted(sig_g) != sorted(sig_h):
        return False
    n = g.n
    image = [-1] * n
    taken = [False] * n

    def extend(v):
        if v == n:
            return True
        for w in range(n):
            if taken[w] or sig_h[w] != sig_g[v]:
                continue
            if any(g.has_edge(v, u) != h.has_edge(w, image[u]) for u in range(v)):
                continue
            image[v] = w
            taken[w] = True
            if extend(v + 1):
                return True
            taken[w] = False
        image[v] = -1
        return False

    return extend(0)


@lru_cache(maxsize=None)
def _classes(n):
    if n == 0:
        return (Graph(0, ()),)
    if n == 1:
        return (Graph(1, (0,)),)
    found = {}
    top = 1 << (n - 1)
    for base in _classes(n - 1):
        a = np.zeros((n, n), dtype=np.uint8)
        a[: n - 1, : n - 1] = kernels.adjacency_matrix(base.adj, n - 1)
        for nbrs in range(top):
            a[n - 1, :] = 0
            a[:, n - 1] = 0
            for v in vertices(nbrs):
                a[n - 1, v] = a[v, n - 1] = 1
            perm = kernels.canonical_permutation(a)
            code = _code(a, perm)
            if code not in found:
                adj = list(base.adj) + [nbrs]
                for v in vertices(nbrs):
                    adj[v] |= top
                found[code] = relabel(Graph(n, tuple(adj)), [int(p) for p in perm])
    return tuple(found[c] for c in sorted(found))


def enumerate_graphs(n, connected=False):
    """One canonical representative per isomorphism class on ``n`` vertices.

    Representatives come out in ascending canonical-code order.  Classes on
    ``n`` vertices are grown from the classes on ``n - 1`` vertices by adding
    a vertex with every possible neighborhood.
    """
    if n < 0:
        raise GraphError("negative order")
    if n > ENUMERATION_LIMIT:
        raise SolverLimitError(f"enumeration limited to n <= {ENUMERATION_LIMIT}, got {n}")
    for g in _classes(n):
        if not connected or g.is_connected():
            yield g


def enumerate_up_to(max_n, connected=False, min_n=1):
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n, connected=connected)
