from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings

from grundylab import kernels
from grundylab.enumeration import (
    are_isomorphic,
    canonical_code,
    canonical_form,
    enumerate_graphs,
)
from grundylab.families import b_graph, complete, complete_bipartite, cycle, path
from grundylab.graph import complement, from_edges, relabel
from grundylab.limits import SolverLimitError

from conftest import graphs


def brute_force_classes(n):
    """Count classes over all labeled graphs: min code over every relabeling."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    codes = np.arange(1 << len(pairs), dtype=np.int64)
    bits = (codes[:, None] >> np.arange(len(pairs))) & 1
    best = codes.copy()
    for perm in permutations(range(n)):
        moved = np.zeros_like(codes)
        for i, (u, v) in enumerate(pairs):
            a, b = sorted((perm[u], perm[v]))
            moved |= bits[:, i] << index[(a, b)]
        np.minimum(best, moved, out=best)
    reps = np.unique(best)
    connected = 0
    for code in reps:
        g = from_edges(n, [p for i, p in enumerate(pairs) if code >> i & 1])
        connected += g.is_connected()
    return len(reps), connected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_counts_match_brute_force(n):
    total, connected = brute_force_classes(n)
    assert len(list(enumerate_graphs(n))) == total
    assert len(list(enumerate_graphs(n, connected=True))) == connected


def test_frozen_counts():
    # values produced by brute_force_classes above
    assert len(list(enumerate_graphs(4))) == 11
    assert len(list(enumerate_graphs(6))) == 156
    assert len(list(enumerate_graphs(6, connected=True))) == 112
    assert len(list(enumerate_graphs(1))) == 1


def test_enumeration_limit():
    with pytest.raises(SolverLimitError):
        list(enumerate_graphs(9))


def test_representatives_are_canonical():
    for g in enumerate_graphs(6):
        assert canonical_form(g) == g


def test_isomorphism_examples():
    c5 = cycle(5)
    assert are_isomorphic(c5, complement(c5))
    assert not are_isomorphic(path(4), complete_bipartite(1, 3))
    assert are_isomorphic(b_graph(2), complete(2))
    assert are_isomorphic(b_graph(3), path(4))


def test_isomorphism_limit():
    with pytest.raises(SolverLimitError):
        are_isomorphic(path(11), path(11))


def test_isomorphism_agrees_with_canonical_codes():
    by_n = {n: list(enumerate_graphs(n)) for n in range(1, 7)}
    for n, gs in by_n.items():
        codes = [canonical_code(g) for g in gs]
        for i, g in enumerate(gs):
            for j, h in enumerate(gs):
                assert are_isomorphic(g, h) == (codes[i] == codes[j])


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=8))
def test_relabeling_preserves_class(g):
    perm = list(range(g.n))[::-1]
    h = relabel(g, perm)
    assert are_isomorphic(g, h)
    assert canonical_form(g) == canonical_form(h)


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_canonical_kernels_agree(g):
    a = kernels.adjacency_matrix(g.adj, g.n)
    p = kernels.canonical_permutation_jit(a)
    q = kernels.canonical_permutation_numpy(a)
    assert relabel(g, [int(x) for x in p]) == relabel(g, [int(x) for x in q])
