"""Deterministic constructors for the named graph families.

Each constructor has a ``*_spec`` twin in :data:`FAMILIES` that records the
parameter values and the invariant values the construction is known to
have, so tests and the CLI can compare them against computed values.
"""

from dataclasses import dataclass, field

from .graph import GraphError, from_edges, join


def complete(n):
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edges(n, [(u, v) for v in range(n) for u in range(v)])


def empty(n):
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return from_edges(n, [])


def path(n):
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both parts nonempty")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def crown(t):
    """K_{t,t} minus a perfect matching.

    a_i is vertex i-1 and b_i is vertex t+i-1; a_i ~ b_j exactly when i != j.
    """
    if t < 1:
        raise GraphError("crown needs t >= 1")
    return from_edges(2 * t, [(i, t + j) for i in range(t) for j in range(t) if i != j])


def b_graph(k):
    """K_{k-1,k-1} minus the matching a_i b_i for i = 1..k-2.

    a_i is vertex i-1, b_i is vertex k+i-2; a_{k-1} and b_{k-1} keep full
    degree k-1.
    """
    if k < 2:
        raise GraphError("b_graph needs k >= 2")
    s = k - 1
    return from_edges(
        2 * s, [(i, s + j) for i in range(s) for j in range(s) if i != j or i == s - 1]
    )


def zaker_soltani(k, n):
    """Graph on n vertices with clique number k and Grundy number (n+k)/2.

    Vertices 0..k-1 form K_k, split into A = 0..ceil(k/2)-1 and B = the
    rest.  A crown on t = (n-k)/2 pairs follows (a_i = k+i-1,
    b_i = k+t+i-1); every vertex of A is joined to every a_i and every
    vertex of B to every b_i.
    """
    if k < 2:
        raise GraphError("zaker_soltani needs k >= 2")
    if k > n:
        raise GraphError("zaker_soltani needs k <= n")
    if (n - k) % 2:
        raise GraphError("zaker_soltani needs n - k even")
    t = (n - k) // 2
    half = (k + 1) // 2
    edges = [(u, v) for v in range(k) for u in range(v)]
    edges += [(k + i, k + t + j) for i in range(t) for j in range(t) if i != j]
    for i in range(t):
        edges += [(x, k + i) for x in range(half)]
        edges += [(y, k + t + i) for y in range(half, k)]
    return from_edges(n, edges)


def ng_sharp(n, k):
    """K_k joined to an edgeless graph on n-k vertices."""
    if not 1 <= k <= n - 1:
        raise GraphError("ng_sharp needs 1 <= k <= n-1")
    return join(complete(k), empty(n - k))


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict
    expected: dict = field(default_factory=dict)

    def to_json(self):
        return {"family": self.family, "params": dict(self.params), "expected": dict(self.expected)}


def _expect_complete(n):
    return {"n": n, "gamma": n, "omega": n, "chi": n, "col": n}


def _expect_zs(k, n):
    t = (n - k) // 2
    return {"n": n, "omega": k, "gamma": (n + k) // 2, "max_degree": t + k - 1}


FAMILIES = {
    "complete": (complete, ("n",), _expect_complete),
    "empty": (empty, ("n",), lambda n: {"n": n, "gamma": 1, "omega": 1, "chi": 1}),
    "path": (path, ("n",), lambda n: {"n": n, **({"gamma": 3} if n == 4 else {})}),
    "cycle": (cycle, ("n",), lambda n: {"n": n, **({"gamma": 2, "col": 3, "psi": 2} if n == 4 else {})}),
    "complete_bipartite": (complete_bipartite, ("a", "b"), lambda a, b: {"n": a + b, "gamma": 2, "omega": 2}),
    "crown": (crown, ("t",), lambda t: {"n": 2 * t, "gamma": t}),
    "b_graph": (b_graph, ("k",), lambda k: {"n": 2 * k - 2, "gamma": k, "omega": 2}),
    "zaker_soltani": (zaker_soltani, ("k", "n"), _expect_zs),
    "ng_sharp": (ng_sharp, ("n", "k"), lambda n, k: {"n": n, "gamma": k + 1, "chi_complement": n - k}),
}


def build(family, **params):
    """Construct a family member and its FamilySpec."""
    try:
        make, names, expect = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}") from None
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise GraphError(f"family {family} needs parameter(s): {', '.join(missing)}")
    args = [params[p] for p in names]
    g = make(*args)
    return g, FamilySpec(family, dict(zip(names, args)), expect(*args))
