"""Exact non-Grundy invariants: degeneracy, cliques, coloring, Randić index."""

import math
from dataclasses import asdict, dataclass
from functools import lru_cache

from .coloring import Coloring
from .graph import GraphError, complement, vertices
from .limits import require

EPS = 1e-9


def _nonempty(g, what):
    if g.n == 0:
        raise GraphError(f"{what} is undefined on the empty graph")


def sig12(x):
    """Round a float to 12 significant digits for stable serialization."""
    return float(f"{x:.12g}")


@dataclass(frozen=True)
class DegeneracyResult:
    ordering: tuple
    degeneracy: int
    coloring_number: int


@lru_cache(maxsize=65536)
def degeneracy(g):
    """Smallest-last elimination; ties go to the smallest vertex index.

    ``ordering`` is the reverse removal order, so every vertex has at most
    ``degeneracy`` neighbors before it.
    """
    _nonempty(g, "degeneracy")
    alive = g.full
    removed = []
    best = 0
    while alive:
        v = min(vertices(alive), key=lambda u: ((g.adj[u] & alive).bit_count(), u))
        best = max(best, (g.adj[v] & alive).bit_count())
        removed.append(v)
        alive &= ~(1 << v)
    return DegeneracyResult(tuple(reversed(removed)), best, best + 1)


def coloring_number(g):
    return degeneracy(g).coloring_number


def _bron_kerbosch(adj, r, p, x, out):
    if not p and not x:
        out.append(r)
        return
    pivot = max(vertices(p | x), key=lambda u: ((p & adj[u]).bit_count(), -u))
    for v in vertices(p & ~adj[pivot]):
        bit = 1 << v
        _bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out)
        p &= ~bit
        x |= bit


def _maximal_cliques(adj, within):
    out = []
    if within:
        _bron_kerbosch(adj, 0, within, 0, out)
    return sorted(out, key=vertices)


def maximal_cliques(g, within=None):
    """Inclusion-maximal cliques of ``g`` (or of ``g[within]``) as bitmasks."""
    return _maximal_cliques(g.adj, g.full if within is None else within)


def maximal_independent_sets(g, within=None):
    """Inclusion-maximal independent sets of ``g[within]``."""
    full = g.full
    co = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    return _maximal_cliques(co, full if within is None else within)


@lru_cache(maxsize=65536)
def maximum_clique(g):
    _nonempty(g, "clique number")
    return max(maximal_cliques(g), key=lambda c: (c.bit_count(), -c))


def clique_number(g):
    return maximum_clique(g).bit_count()


def independence_number(g):
    return clique_number(complement(g))


def maximal_clique_count(g):
    _nonempty(g, "maximal clique count")
    return len(maximal_cliques(g))


def _first_fit_colors(g, order):
    colors = [-1] * g.n
    for v in order:
        taken = {colors[u] for u in vertices(g.adj[v])}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def _k_coloring(g, k, clique):
    """Proper k-coloring extending the clique's preassignment, or None."""
    classes = [0] * k
    for c, v in enumerate(vertices(clique)):
        classes[c] |= 1 << v
    used = clique.bit_count()
    uncolored = g.full & ~clique

    def pick(unc):
        best, key = -1, None
        for v in vertices(unc):
            sat = sum(1 for c in range(used_now[0]) if g.adj[v] & classes[c])
            cand = (sat, (g.adj[v] & unc).bit_count(), -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    used_now = [used]

    def search(unc):
        if not unc:
            return True
        v = pick(unc)
        bit = 1 << v
        top = min(k, used_now[0] + 1)
        for c in range(top):
            if g.adj[v] & classes[c]:
                continue
            fresh = c == used_now[0]
            classes[c] |= bit
            if fresh:
                used_now[0] += 1
            if search(unc & ~bit):
                return True
            classes[c] &= ~bit
            if fresh:
                used_now[0] -= 1
        return False

    if search(uncolored):
        return Coloring(tuple(c for c in classes if c))
    return None


@lru_cache(maxsize=65536)
def chromatic_number(g):
    """Exact chi(G) with a witness coloring.

    Tries k = omega, omega+1, ... below col(G) with a saturation-ordered
    backtracking search seeded by a maximum clique; the first-fit coloring
    along the degeneracy order certifies k = col(G).
    """
    _nonempty(g, "chromatic number")
    require("chi", g.n, "chromatic_number")
    clique = maximum_clique(g)
    lo = clique.bit_count()
    dg = degeneracy(g)
    for k in range(lo, dg.coloring_number):
        found = _k_coloring(g, k, clique)
        if found is not None:
            return k, found
    witness = Coloring.from_colors(_first_fit_colors(g, dg.ordering))
    return witness.k, witness


def randic_index(g):
    """Sum over edges uv of 1/sqrt(d(u) d(v)), in ascending edge order."""
    _nonempty(g, "Randić index")
    deg = g.degrees()
    total = 0.0
    for u, v in g.edges():
        total += 1.0 / math.sqrt(deg[u] * deg[v])
    return total


def delta2(g):
    """max over u of the largest degree among neighbors v with d(v) <= d(u).

    Edgeless graphs give 0.
    """
    deg = g.degrees()
    best = 0
    for u in range(g.n):
        for v in vertices(g.adj[u]):
            if deg[v] <= deg[u] and deg[v] > best:
                best = deg[v]
    return best


def chang_hsu_bound(g):
    """log base col/(col-1) of n, plus 2."""
    if g.m == 0:
        raise GraphError("bound undefined: requires nonempty graph")
    col = coloring_number(g)
    return math.log(g.n) / math.log(col / (col - 1)) + 2


def bollobas_erdos_bound(m):
    """Lower bound on the Randić index of any graph with m edges."""
    return (math.sqrt(8 * m + 1) + 1) / 4


@dataclass
class InvariantReport:
    n: int
    m: int
    min_degree: int
    max_degree: int
    delta2: int
    omega: int
    alpha: int
    chi: int
    col: int
    degeneracy: int
    randic: float
    maximal_clique_count: int
    gamma: int = None
    psi: int = None

    def to_dict(self):
        d = asdict(self)
        d["randic"] = sig12(d["randic"])
        return d

    def violated_relations(self):
        """Names of the standard chain inequalities this report breaks."""
        bad = []
        if not self.omega <= self.chi <= self.col <= self.max_degree + 1:
            bad.append("omega<=chi<=col<=Delta+1")
        if self.gamma is not None:
            if not self.chi <= self.gamma <= self.delta2 + 1 <= self.max_degree + 1:
                bad.append("chi<=Gamma<=Delta2+1<=Delta+1")
            if self.psi is not None and self.gamma > self.psi:
                bad.append("Gamma<=psi")
        return bad


def invariant_report(g, grundy=True, psi=True):
    """Every invariant of ``g``; Grundy and achromatic numbers on request.

    psi is left as None above the achromatic solver's vertex cap.
    """
    _nonempty(g, "invariant report")
    dg = degeneracy(g)
    report = InvariantReport(
        n=g.n,
        m=g.m,
        min_degree=g.min_degree(),
        max_degree=g.max_degree(),
        delta2=delta2(g),
        omega=clique_number(g),
        alpha=independence_number(g),
        chi=chromatic_number(g)[0],
        col=dg.coloring_number,
        degeneracy=dg.degeneracy,
        randic=randic_index(g),
        maximal_clique_count=maximal_clique_count(g),
    )
    if grundy:
        from .grundy import achromatic_number, grundy_number
        from .limits import SolverLimitError

        report.gamma = grundy_number(g)[0]
        if psi:
            try:
                report.psi = achromatic_number(g)
            except SolverLimitError:
                report.psi = None
    return report
