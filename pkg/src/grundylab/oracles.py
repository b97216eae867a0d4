"""Brute-force invariants that share no code with the fast solvers.

Used to re-verify reported violations and as test oracles.  All of them
enumerate subsets, partitions or orders, so keep n small (<= 10).
"""

from functools import lru_cache

from .graph import GraphError
from .grundy import grundy_brute_force

ORACLE_LIMIT = 10


def _guard(g):
    if g.n == 0:
        raise GraphError("oracle invariants need a nonempty graph")
    if g.n > ORACLE_LIMIT:
        raise GraphError(f"brute-force oracle limited to n <= {ORACLE_LIMIT}")


def _is_clique(g, s):
    return all(g.adj[v] | 1 << v | ~s == -1 for v in range(g.n) if s >> v & 1)


def _is_independent(g, s):
    return all(not g.adj[v] & s for v in range(g.n) if s >> v & 1)


def omega(g):
    _guard(g)
    return max(s.bit_count() for s in range(1 << g.n) if _is_clique(g, s))


def alpha(g):
    _guard(g)
    return max(s.bit_count() for s in range(1 << g.n) if _is_independent(g, s))


def maximal_cliques(g):
    _guard(g)
    cliques = [s for s in range(1, 1 << g.n) if _is_clique(g, s)]
    cset = set(cliques)
    return sorted(s for s in cliques if not any(s | 1 << v in cset for v in range(g.n) if not s >> v & 1))


def chi(g):
    """Fewest independent sets covering V, by dynamic programming over subsets."""
    _guard(g)
    full = (1 << g.n) - 1
    independent = [_is_independent(g, s) for s in range(1 << g.n)]
    best = [0] + [g.n + 1] * full
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        sub = rest
        while True:
            part = sub | low
            if independent[part] and best[s ^ part] + 1 < best[s]:
                best[s] = best[s ^ part] + 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return best[full]


def col(g):
    """1 + max over induced subgraphs of the minimum degree."""
    _guard(g)
    best = 0
    for s in range(1, 1 << g.n):
        low = min((g.adj[v] & s).bit_count() for v in range(g.n) if s >> v & 1)
        best = max(best, low)
    return best + 1


def _set_partitions(n):
    # restricted growth strings
    a = [0] * n

    def rec(i, top):
        if i == n:
            yield list(a)
            return
        for c in range(top + 2):
            a[i] = c
            yield from rec(i + 1, max(top, c))

    if n:
        yield from rec(1, 0)


def psi(g):
    _guard(g)
    best = 1
    edges = g.edges()
    for colors in _set_partitions(g.n):
        k = max(colors) + 1
        if k <= best:
            continue
        pairs = set()
        ok = True
        for u, v in edges:
            if colors[u] == colors[v]:
                ok = False
                break
            pairs.add((min(colors[u], colors[v]), max(colors[u], colors[v])))
        if ok and len(pairs) == k * (k - 1) // 2:
            best = k
    return best


@lru_cache(maxsize=65536)
def gamma(g):
    _guard(g)
    return grundy_brute_force(g)
