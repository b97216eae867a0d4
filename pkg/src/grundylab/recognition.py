"""Forbidden induced subgraphs, chordality and perfectness sweeps."""

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import GraphError, induced_subgraph, mask_of, vertices
from .grundy import achromatic_number, grundy_number
from .invariants import (
    chromatic_number,
    clique_number,
    coloring_number,
    independence_number,
    maximal_clique_count,
)
from .limits import require

PATTERNS = {"K3": 3, "P4": 4, "C4": 4}


@dataclass(frozen=True)
class RecognitionResult:
    property: str
    holds: bool
    certificate_kind: str
    vertices: tuple = ()
    details: dict = field(default_factory=dict, compare=False, hash=False)

    def to_json(self):
        return {
            "property": self.property,
            "holds": self.holds,
            "certificate_kind": self.certificate_kind,
            "vertices": list(self.vertices),
        }


def _matches(g, vs, pattern):
    degs = sorted((g.adj[v] & mask_of(vs)).bit_count() for v in vs)
    if pattern == "K3":
        return degs == [2, 2, 2]
    if pattern == "P4":
        return degs == [1, 1, 2, 2]
    return degs == [2, 2, 2, 2]


def find_induced(g, pattern):
    """First vertex subset (lexicographic) inducing ``pattern``, or None."""
    if pattern not in PATTERNS:
        raise GraphError(f"unknown pattern {pattern!r}; expected one of {sorted(PATTERNS)}")
    for vs in combinations(range(g.n), PATTERNS[pattern]):
        if _matches(g, vs, pattern):
            return mask_of(vs)
    return None


def is_triangle_free(g):
    return find_induced(g, "K3") is None


def is_p4_free(g):
    return find_induced(g, "P4") is None


def is_c4_free(g):
    return find_induced(g, "C4") is None


def simplicial_vertices(g):
    return [v for v in range(g.n) if g.is_clique(g.adj[v])]


def mcs_ordering(g):
    """Maximum cardinality search visit order (ties to the smallest index)."""
    numbered = 0
    order = []
    for _ in range(g.n):
        v = max(
            vertices(g.full & ~numbered),
            key=lambda u: ((g.adj[u] & numbered).bit_count(), -u),
        )
        order.append(v)
        numbered |= 1 << v
    return order


def is_perfect_elimination_ordering(g, order):
    later = g.full
    for v in order:
        later &= ~(1 << v)
        if not g.is_clique(g.adj[v] & later):
            return False
    return True


def shortest_induced_long_cycle(g):
    """Shortest chordless cycle of length >= 4 in cycle order, or None.

    For each vertex v and non-adjacent neighbors a < b, a shortest a-b path
    avoiding v and the rest of N(v) closes a chordless cycle through v.
    """
    best = None
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for a, b in combinations(nbrs, 2):
            if g.has_edge(a, b):
                continue
            allowed = g.full & ~(g.adj[v] | 1 << v) | 1 << a | 1 << b
            parent = {a: None}
            queue = deque([a])
            while queue and b not in parent:
                u = queue.popleft()
                for w in vertices(g.adj[u] & allowed):
                    if w not in parent:
                        parent[w] = u
                        queue.append(w)
            if b not in parent:
                continue
            walk = [b]
            while walk[-1] != a:
                walk.append(parent[walk[-1]])
            cyc = [v] + walk[::-1]
            if best is None or len(cyc) < len(best):
                best = cyc
    return best


def is_chordal(g):
    order = mcs_ordering(g)[::-1]
    if is_perfect_elimination_ordering(g, order):
        return RecognitionResult("chordal", True, "perfect_elimination_ordering", tuple(order))
    cyc = shortest_induced_long_cycle(g)
    if cyc is None:
        raise AssertionError("no perfect elimination ordering but no long induced cycle")
    return RecognitionResult("chordal", False, "induced_cycle", tuple(cyc))


def _subsets_by_size(n):
    return sorted(range(1, 1 << n), key=lambda s: (s.bit_count(), s))


def is_trivially_perfect(g, mode="fast"):
    """{P4, C4}-freeness (``fast``) or alpha(H) = m(H) on every induced H
    (``definitional``)."""
    if mode == "fast":
        for pattern in ("P4", "C4"):
            hit = find_induced(g, pattern)
            if hit is not None:
                return RecognitionResult(
                    "trivially_perfect", False, f"induced_{pattern}", tuple(vertices(hit))
                )
        return RecognitionResult("trivially_perfect", True, "none")
    if mode != "definitional":
        raise GraphError(f"unknown mode {mode!r}")
    require("definitional", g.n, "is_trivially_perfect(definitional)")
    for s in _subsets_by_size(g.n):
        h = induced_subgraph(g, s)
        alpha, cliques = independence_number(h), maximal_clique_count(h)
        if alpha != cliques:
            return RecognitionResult(
                "trivially_perfect",
                False,
                "induced_subgraph",
                tuple(vertices(s)),
                {"alpha": alpha, "maximal_cliques": cliques},
            )
    return RecognitionResult("trivially_perfect", True, "none")


INVARIANTS = {
    "omega": clique_number,
    "chi": lambda h: chromatic_number(h)[0],
    "gamma": lambda h: grundy_number(h)[0],
    "psi": achromatic_number,
    "col": coloring_number,
}

PAIRS = ("gamma_omega", "gamma_chi", "col_omega", "gamma_col")


def perfectness_sweep(g, pair, invariants=None):
    """Check a(H) == b(H) on every nonempty induced subgraph H.

    ``pair`` names two invariants as ``"a_b"`` from omega, chi, gamma, psi
    and col.  The witness is the smallest violating vertex set, ordered by
    size and then by bitmask.
    """
    table = INVARIANTS if invariants is None else invariants
    first, _, second = pair.partition("_")
    if first not in table or second not in table or first == second:
        raise GraphError(f"unknown invariant pair {pair!r}")
    require("sweep", g.n, "perfectness_sweep")
    for s in _subsets_by_size(g.n):
        h = induced_subgraph(g, s)
        a, b = table[first](h), table[second](h)
        if a != b:
            return RecognitionResult(pair, False, "induced_subgraph", tuple(vertices(s)), {first: a, second: b})
    return RecognitionResult(pair, True, "none")
