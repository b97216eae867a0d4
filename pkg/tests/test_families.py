import pytest

from grundylab import oracles
from grundylab.enumeration import are_isomorphic
from grundylab.families import (
    FAMILIES,
    b_graph,
    build,
    complete,
    complete_bipartite,
    crown,
    cycle,
    empty,
    ng_sharp,
    path,
    zaker_soltani,
)
from grundylab.graph import GraphError, complement, from_edges
from grundylab.grundy import grundy_number
from grundylab.invariants import chromatic_number, clique_number, invariant_report
from grundylab.recognition import find_induced


def computed(g, keys):
    report = invariant_report(g, psi="psi" in keys).to_dict()
    if "chi_complement" in keys:
        report["chi_complement"] = chromatic_number(complement(g))[0]
    return {k: report[k] for k in keys}


def test_crown_examples():
    assert crown(1) == empty(2)
    assert grundy_number(crown(1))[0] == 1
    assert are_isomorphic(crown(2), from_edges(4, [(0, 1), (2, 3)]))
    assert oracles.gamma(crown(2)) == 2
    assert are_isomorphic(crown(3), cycle(6))
    assert oracles.gamma(crown(3)) == 3


def test_crown_labels():
    g = crown(4)
    for i in range(4):
        for j in range(4):
            assert g.has_edge(i, 4 + j) == (i != j)


def test_b_graph_examples():
    assert b_graph(2) == complete(2)
    assert are_isomorphic(b_graph(3), path(4))
    g = b_graph(5)
    assert g.n == 8 and grundy_number(g)[0] == 5
    # a_{k-1}, b_{k-1} keep full degree
    assert g.degree(3) == g.degree(7) == 4
    assert sorted(g.degrees()) == [3] * 6 + [4] * 2


@pytest.mark.parametrize("k", range(2, 9))
def test_b_graph_structure(k):
    g = b_graph(k)
    assert g.n == 2 * k - 2
    assert g.is_connected()
    assert find_induced(g, "K3") is None


def test_zaker_soltani_examples():
    for k in range(2, 7):
        assert zaker_soltani(k, k) == complete(k)
    g = zaker_soltani(2, 6)
    assert clique_number(g) == 2 and grundy_number(g)[0] == 4
    g = zaker_soltani(3, 7)
    assert (clique_number(g), grundy_number(g)[0], g.max_degree()) == (3, 5, 4)


@pytest.mark.parametrize("args", [(1, 5), (3, 6), (5, 3)])
def test_zaker_soltani_rejects(args):
    with pytest.raises(GraphError):
        zaker_soltani(*args)


def test_zaker_soltani_k1_would_break_clique_number():
    # the construction with k = 1 joins the lone clique vertex to each a_i
    # and creates an edge, so omega would be 2, not 1
    t, n = 2, 5
    edges = [(1 + i, 1 + t + j) for i in range(t) for j in range(t) if i != j]
    edges += [(0, 1 + i) for i in range(t)]
    assert clique_number(from_edges(n, edges)) == 2


def test_ng_sharp_examples():
    g = ng_sharp(4, 1)
    assert g == complete_bipartite(1, 3)
    assert grundy_number(g)[0] + chromatic_number(complement(g))[0] == 5
    assert ng_sharp(5, 4) == complete(5)
    g = ng_sharp(6, 3)
    assert grundy_number(g)[0] == 4 and chromatic_number(complement(g))[0] == 3
    with pytest.raises(GraphError):
        ng_sharp(4, 4)


def test_basic_examples():
    assert grundy_number(cycle(4))[0] == 2
    assert grundy_number(complete_bipartite(3, 4))[0] == 2
    assert grundy_number(path(4))[0] == 3
    with pytest.raises(GraphError):
        cycle(2)


def _desk_scale():
    yield from (("b_graph", {"k": k}) for k in range(2, 9))
    yield from (("crown", {"t": t}) for t in range(1, 8))
    for n in range(2, 15):
        for k in range(2, n + 1):
            if (n - k) % 2 == 0:
                yield "zaker_soltani", {"k": k, "n": n}
    for n in range(2, 13):
        for k in range(1, n):
            yield "ng_sharp", {"n": n, "k": k}
    yield from (("complete", {"n": n}) for n in range(1, 8))
    yield from (("empty", {"n": n}) for n in range(1, 8))
    yield "path", {"n": 4}
    yield "cycle", {"n": 4}
    yield from (("complete_bipartite", {"a": a, "b": b}) for a in range(1, 5) for b in range(1, 5))


def test_expected_metadata_pins():
    for family, params in _desk_scale():
        g, fam = build(family, **params)
        assert computed(g, fam.expected) == fam.expected, (family, params)


def test_zaker_soltani_attains_clique_bound():
    for n in range(2, 13):
        for k in range(2, n + 1, 1):
            if (n - k) % 2:
                continue
            g = zaker_soltani(k, n)
            assert 2 * grundy_number(g)[0] == n + clique_number(g)


def test_build_errors():
    with pytest.raises(GraphError, match="unknown family"):
        build("petersen")
    with pytest.raises(GraphError, match="needs parameter"):
        build("b_graph")
    assert set(FAMILIES) >= {"crown", "b_graph", "zaker_soltani", "ng_sharp"}
