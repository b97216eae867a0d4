"""Exact Grundy numbers, companion graph invariants and bound verification
on small graphs."""

from .coloring import Coloring, GrundyCertificate
from .enumeration import are_isomorphic, canonical_form, enumerate_graphs
from .formats import parse_graph6, to_graph6
from .graph import Graph, GraphError, complement, from_edges, induced_subgraph, join
from .grundy import (
    achromatic_number,
    greedy_coloring,
    grundy_brute_force,
    grundy_number,
    is_grundy_coloring,
)
from .invariants import (
    chromatic_number,
    clique_number,
    degeneracy,
    independence_number,
    invariant_report,
    randic_index,
)
from .limits import SolverLimitError

__version__ = "0.1.0"
