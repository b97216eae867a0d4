"""Hot numeric kernels: canonical labeling and max-first-fit over all orders.

Every kernel takes a dense ``uint8`` adjacency matrix.  Each one has a
numba-compiled version and a numpy version; the module-level names
``canonical_permutation`` and ``max_first_fit`` dispatch to one of them
according to :data:`grundylab._jit.USE_JIT`.  Both versions are always
importable so tests and the benchmark can compare them.
"""

from functools import lru_cache
from itertools import permutations

import numpy as np

from ._jit import USE_JIT, njit

# all-permutation numpy paths materialise n! rows
NUMPY_PERMUTATION_LIMIT = 9


def adjacency_matrix(adj, n):
    """Dense uint8 matrix from a sequence of bitmask rows."""
    a = np.zeros((n, n), dtype=np.uint8)
    for u in range(n):
        row = adj[u]
        while row:
            low = row & -row
            a[u, low.bit_length() - 1] = 1
            row ^= low
    return a


@lru_cache(maxsize=None)
def all_permutations(n):
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(permutations(range(n))), dtype=np.int64)


# ---------------------------------------------------------------------------
# first-fit over every vertex order


@njit(cache=True)
def _first_fit(adj, order, color, seen):
    n = adj.shape[0]
    for v in range(n):
        color[v] = -1
        seen[v] = 0
    seen[n] = 0
    k = 0
    for step in range(n):
        v = order[step]
        stamp = step + 1
        for u in range(n):
            if adj[v, u] != 0 and color[u] >= 0:
                seen[color[u]] = stamp
        c = 0
        while seen[c] == stamp:
            c += 1
        color[v] = c
        if c + 1 > k:
            k = c + 1
    return k


@njit(cache=True)
def max_first_fit_jit(adj, stop_at):
    """Largest first-fit class count over all orders (Heap's algorithm).

    Returns early once ``stop_at`` colors are reached.
    """
    n = adj.shape[0]
    if n == 0:
        return 0
    perm = np.arange(n)
    counters = np.zeros(n, dtype=np.int64)
    color = np.empty(n, dtype=np.int64)
    seen = np.zeros(n + 1, dtype=np.int64)
    best = _first_fit(adj, perm, color, seen)
    if best >= stop_at:
        return best
    i = 1
    while i < n:
        if counters[i] < i:
            if i % 2 == 0:
                j = 0
            else:
                j = counters[i]
            tmp = perm[j]
            perm[j] = perm[i]
            perm[i] = tmp
            k = _first_fit(adj, perm, color, seen)
            if k > best:
                best = k
                if best >= stop_at:
                    return best
            counters[i] += 1
            i = 1
        else:
            counters[i] = 0
            i += 1
    return best


def max_first_fit_numpy(adj, stop_at=None):
    """Vectorised twin of :func:`max_first_fit_jit`; runs every order at once.

    Color sets are tracked as bitmasks, so the lowest free color of a vertex
    is the lowest zero bit of the mask of its colored neighbors' colors.
    """
    n = adj.shape[0]
    if n == 0:
        return 0
    if n > NUMPY_PERMUTATION_LIMIT:
        raise ValueError(f"numpy first-fit path limited to n <= {NUMPY_PERMUTATION_LIMIT}")
    perms = all_permutations(n)
    a = adj.astype(np.int64)
    rows = np.arange(len(perms))
    used = np.zeros((len(perms), n), dtype=np.int64)
    palette = np.zeros(len(perms), dtype=np.int64)
    for step in range(n):
        v = perms[:, step]
        mask = used[rows, v]
        bit = ~mask & (mask + 1)
        palette |= bit
        used |= a[v] * bit[:, None]
    # first-fit colors are always 0..k-1, so each palette is 2^k - 1
    return int(palette.max()).bit_length()


# ---------------------------------------------------------------------------
# canonical labeling: lexicographically least graph6 bit string


@njit(cache=True)
def canonical_permutation_jit(adj):
    """Branch-and-bound search for the relabeling with the least bit string.

    ``perm[i]`` is the original vertex placed at position ``i``.  The string
    is the graph6 upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...; column
    ``j`` only depends on positions ``0..j``, so prefixes can be compared as
    soon as a position is filled.
    """
    n = adj.shape[0]
    best_perm = np.arange(n)
    if n == 0:
        return best_perm
    perm = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    nxt = np.zeros(n + 1, dtype=np.int64)
    cols = np.zeros(n, dtype=np.int64)
    best = np.zeros(n, dtype=np.int64)
    # eq[d]: positions 0..d-1 reproduce the incumbent's columns exactly
    eq = np.zeros(n + 1, dtype=np.bool_)
    have_best = False
    depth = 0
    while depth >= 0:
        if depth == n:
            if not (have_best and eq[n]):
                best[:] = cols
                best_perm[:] = perm
                have_best = True
                eq[:] = True
            depth -= 1
            used[perm[depth]] = False
            continue
        v = nxt[depth]
        while v < n and used[v]:
            v += 1
        if v == n:
            depth -= 1
            if depth >= 0:
                used[perm[depth]] = False
            continue
        nxt[depth] = v + 1
        c = 0
        for i in range(depth):
            c = (c << 1) | adj[perm[i], v]
        if have_best and eq[depth]:
            if c > best[depth]:
                continue
            eq[depth + 1] = c == best[depth]
        else:
            eq[depth + 1] = False
        cols[depth] = c
        perm[depth] = v
        used[v] = True
        depth += 1
        nxt[depth] = 0
    return best_perm


def canonical_permutation_numpy(adj):
    """Exhaustive twin of :func:`canonical_permutation_jit`.

    Scores all n! relabelings at once and keeps the first minimum.  Falls
    back to the uncompiled branch-and-bound above the permutation limit.
    """
    n = adj.shape[0]
    if n > NUMPY_PERMUTATION_LIMIT:
        return getattr(canonical_permutation_jit, "py_func", canonical_permutation_jit)(adj)
    perms = all_permutations(n)
    codes = np.zeros(len(perms), dtype=np.int64)
    for j in range(1, n):
        pj = perms[:, j]
        for i in range(j):
            codes = (codes << 1) | adj[perms[:, i], pj]
    return perms[int(np.argmin(codes))].copy()


if USE_JIT:
    canonical_permutation = canonical_permutation_jit

    def max_first_fit(adj, stop_at=None):
        return int(max_first_fit_jit(adj, adj.shape[0] + 1 if stop_at is None else stop_at))

else:
    canonical_permutation = canonical_permutation_numpy
    max_first_fit = max_first_fit_numpy
