import pytest

from grundylab.enumeration import are_isomorphic, enumerate_graphs
from grundylab.families import b_graph, complete, complete_bipartite, cycle, path
from grundylab.graph import GraphError, induced_subgraph, vertices
from grundylab.limits import SolverLimitError
from grundylab.recognition import (
    find_induced,
    is_chordal,
    is_perfect_elimination_ordering,
    is_trivially_perfect,
    perfectness_sweep,
    simplicial_vertices,
)


def test_find_induced_examples():
    hit = find_induced(cycle(5), "P4")
    assert hit is not None
    assert are_isomorphic(induced_subgraph(cycle(5), hit), path(4))
    assert find_induced(b_graph(5), "K3") is None
    assert find_induced(complete(4), "C4") is None
    with pytest.raises(GraphError):
        find_induced(cycle(5), "P5")


def test_find_induced_certificates():
    patterns = {"K3": complete(3), "P4": path(4), "C4": cycle(4)}
    for n in range(3, 7):
        for g in enumerate_graphs(n):
            for name, shape in patterns.items():
                hit = find_induced(g, name)
                if hit is not None:
                    assert are_isomorphic(induced_subgraph(g, hit), shape)


def test_chordal_examples(c4, p4):
    assert is_chordal(complete(5)).holds
    r = is_chordal(c4)
    assert not r.holds and r.certificate_kind == "induced_cycle"
    assert sorted(r.vertices) == [0, 1, 2, 3]
    assert is_chordal(p4).holds and is_chordal(complete_bipartite(1, 3)).holds


def test_chordal_certificates():
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            r = is_chordal(g)
            if r.holds:
                assert is_perfect_elimination_ordering(g, list(r.vertices))
                assert simplicial_vertices(g)
            else:
                cyc = list(r.vertices)
                assert len(cyc) >= 4
                h = induced_subgraph(g, sum(1 << v for v in cyc))
                assert are_isomorphic(h, cycle(len(cyc)))
                for i, v in enumerate(cyc):
                    assert g.has_edge(v, cyc[i - 1])


def test_shortest_cycle_certificate():
    r = is_chordal(cycle(7))
    assert len(r.vertices) == 7


def test_simplicial_examples(c4, p4, k4):
    assert simplicial_vertices(c4) == []
    assert simplicial_vertices(p4) == [0, 3]
    assert simplicial_vertices(k4) == [0, 1, 2, 3]


def test_trivially_perfect_examples(c4, p4):
    for mode in ("fast", "definitional"):
        assert is_trivially_perfect(complete_bipartite(1, 3), mode).holds
        assert not is_trivially_perfect(p4, mode).holds
    r = is_trivially_perfect(c4, "definitional")
    assert not r.holds and r.vertices == (0, 1, 2, 3)
    assert r.details == {"alpha": 2, "maximal_cliques": 4}
    with pytest.raises(SolverLimitError):
        is_trivially_perfect(path(8), "definitional")


def test_sweep_examples(c4, p4):
    r = perfectness_sweep(c4, "gamma_col")
    assert not r.holds and r.vertices == (0, 1, 2, 3) and r.details == {"gamma": 2, "col": 3}
    r = perfectness_sweep(p4, "gamma_col")
    assert not r.holds and r.vertices == (0, 1, 2, 3) and r.details == {"gamma": 3, "col": 2}
    for tree in (path(6), complete_bipartite(1, 5)):
        assert perfectness_sweep(tree, "col_omega").holds
    with pytest.raises(SolverLimitError):
        perfectness_sweep(path(8), "gamma_col")
    with pytest.raises(GraphError):
        perfectness_sweep(p4, "gamma_gamma")


def test_psi_pairs_exposed(p4):
    assert perfectness_sweep(p4, "gamma_psi").holds


def test_characterizations_n6():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            chordal = is_chordal(g).holds
            assert chordal == perfectness_sweep(g, "col_omega").holds
            p4_free = find_induced(g, "P4") is None
            assert p4_free == perfectness_sweep(g, "gamma_omega").holds
            assert p4_free == perfectness_sweep(g, "gamma_chi").holds
            free = p4_free and find_induced(g, "C4") is None
            assert free == is_trivially_perfect(g, "definitional").holds
            assert free == is_trivially_perfect(g, "fast").holds
            assert free == perfectness_sweep(g, "gamma_col").holds


def test_regular_trivially_perfect_connected_is_complete():
    for n in range(1, 8):
        for g in enumerate_graphs(n, connected=True):
            if g.is_regular() and is_trivially_perfect(g).holds:
                assert g.is_complete()


def test_result_json(c4):
    data = is_chordal(c4).to_json()
    assert data["property"] == "chordal" and data["holds"] is False
    assert set(data) == {"property", "holds", "certificate_kind", "vertices"}
    assert sorted(data["vertices"]) == vertices(c4.full)
