"""Per-graph checks of the Grundy-number bounds, corpus suites and
counterexample search.

Each check returns ``(holds, equality, details)`` computed through a solver
table.  A violation found with the fast solvers is recomputed with the
brute-force table in :mod:`grundylab.oracles`; if the second path does not
reproduce it the run aborts with :class:`InternalFault`.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import oracles
from .enumeration import are_isomorphic, canonical_form, enumerate_graphs
from .families import b_graph
from .formats import parse_graph6, to_graph6
from .graph import GraphError, complement, induced_subgraph, vertices
from .grundy import achromatic_number, grundy_number
from .invariants import (
    EPS,
    chang_hsu_bound,
    chromatic_number,
    clique_number,
    coloring_number,
    independence_number,
    maximal_cliques,
    delta2,
    randic_index,
    sig12,
)
from .limits import ENUMERATION_LIMIT, SolverLimitError, limit
from .recognition import (
    find_induced,
    is_chordal,
    is_trivially_perfect,
    perfectness_sweep,
    simplicial_vertices,
)


class InternalFault(RuntimeError):
    """A reported violation could not be reproduced by the oracle path."""


class Skip(Exception):
    pass


@dataclass(frozen=True)
class Solvers:
    name: str
    gamma: object
    psi: object
    chi: object
    omega: object
    alpha: object
    col: object

    def chi_complement(self, g):
        return self.chi(complement(g))

    def sweep(self, g, pair):
        table = {"omega": self.omega, "chi": self.chi, "gamma": self.gamma, "col": self.col, "psi": self.psi}
        return perfectness_sweep(g, pair, table)


FAST = Solvers(
    "fast",
    gamma=lambda g: grundy_number(g)[0],
    psi=achromatic_number,
    chi=lambda g: chromatic_number(g)[0],
    omega=clique_number,
    alpha=independence_number,
    col=coloring_number,
)

ORACLE = Solvers(
    "oracle",
    gamma=oracles.gamma,
    psi=oracles.psi,
    chi=oracles.chi,
    omega=oracles.omega,
    alpha=oracles.alpha,
    col=oracles.col,
)


def _need_connected(g):
    if g.n < 2 or not g.is_connected():
        raise Skip("hypothesis: connected graph of order >= 2")


def _need_psi(g):
    if g.n > limit("psi"):
        raise SolverLimitError(f"achromatic number needs n <= {limit('psi')}")


def _eq2(g, s):
    w, x, c, d = s.omega(g), s.chi(g), s.col(g), g.max_degree()
    vals = {"omega": w, "chi": x, "col": c, "max_degree_plus_1": d + 1}
    return w <= x <= c <= d + 1, w == d + 1, vals


def _eq34(g, s):
    x, gam, d2, d = s.chi(g), s.gamma(g), delta2(g), g.max_degree()
    vals = {"chi": x, "gamma": gam, "delta2_plus_1": d2 + 1, "max_degree_plus_1": d + 1}
    return x <= gam <= d2 + 1 <= d + 1, gam == d2 + 1, vals


def _eq5(g, s):
    _need_psi(g)
    gam, p = s.gamma(g), s.psi(g)
    return gam <= p, gam == p, {"gamma": gam, "psi": p}


def _randic_vs(g, value, name):
    _need_connected(g)
    r2 = 2 * randic_index(g)
    complete = g.is_complete()
    gap = r2 - value
    equal = abs(gap) <= EPS
    vals = {name: value, "two_randic": sig12(r2), "gap": sig12(gap), "complete": complete}
    return value <= r2 + EPS and equal == complete, equal, vals


def _thm22(g, s):
    _need_psi(g)
    return _randic_vs(g, s.psi(g), "psi")


def _cor23(g, s):
    return _randic_vs(g, s.gamma(g), "gamma")


def _thm24(g, s):
    return _randic_vs(g, s.col(g), "col")


def _thm26i(g, s):
    gam, w = s.gamma(g), s.omega(g)
    return 2 * gam <= g.n + w, 2 * gam == g.n + w, {"gamma": gam, "omega": w, "n": g.n}


def _thm26iii(g, s):
    _need_connected(g)
    if find_induced(g, "K3") is not None:
        raise Skip("hypothesis: triangle-free")
    gam = s.gamma(g)
    extremal = g.n % 2 == 0 and 2 * gam == g.n + 2
    is_b = g.n % 2 == 0 and are_isomorphic(g, b_graph((g.n + 2) // 2))
    vals = {"gamma": gam, "n": g.n, "isomorphic_to_b_graph": is_b}
    return 2 * gam <= g.n + 2 and extremal == is_b, extremal, vals


def _cor27(g, s):
    gam, w, xc = s.gamma(g), s.omega(g), s.chi_complement(g)
    vals = {"gamma": gam, "omega": w, "chi_complement": xc}
    return 2 * gam <= (xc + 1) * w, 2 * gam == (xc + 1) * w, vals


def _cor28(g, s):
    xc = s.chi_complement(g)
    if xc > 2:
        raise Skip("hypothesis: complement is bipartite")
    gam, w = s.gamma(g), s.omega(g)
    return 2 * gam <= 3 * w, 2 * gam == 3 * w, {"gamma": gam, "omega": w}


def _cor29(g, s):
    gam, x, c = s.gamma(g), s.chi(g), s.col(g)
    vals = {"gamma": gam, "chi": x, "col": c, "n": g.n}
    return 2 * gam <= g.n + x <= g.n + c, 2 * gam == g.n + x, vals


def _changhsu(g, s):
    if g.m == 0:
        raise Skip("hypothesis: at least one edge")
    gam, bound = s.gamma(g), chang_hsu_bound(g)
    vals = {"gamma": gam, "bound": sig12(bound)}
    return gam <= bound + EPS, abs(gam - bound) <= EPS, vals


def _lem31(g, s):
    if g.n < 2 or g.is_complete():
        raise Skip("hypothesis: non-complete graph of order >= 2")
    x = s.chi(g)
    tight = False
    for clique in maximal_cliques(g):
        rest = s.chi(induced_subgraph(g, g.full & ~clique))
        need = x - clique.bit_count() + 1
        if rest < need:
            return False, False, {"chi": x, "clique": vertices(clique), "chi_rest": rest}
        tight = tight or rest == need
    return True, tight, {"chi": x}


def _thm32(g, s):
    gam, xc = s.gamma(g), s.chi_complement(g)
    vals = {"gamma": gam, "chi_complement": xc, "n": g.n}
    return gam + xc <= g.n + 1, gam + xc == g.n + 1, vals


def _cor33(g, s):
    gam, a = s.gamma(g), s.alpha(g)
    return gam + a <= g.n + 1, gam + a == g.n + 1, {"gamma": gam, "alpha": a, "n": g.n}


def _thm43(g, s):
    chordal = is_chordal(g).holds
    sweep = s.sweep(g, "col_omega").holds
    return chordal == sweep, False, {"chordal": chordal, "col_omega_perfect": sweep}


def _thm44(g, s):
    p4_free = find_induced(g, "P4") is None
    a = s.sweep(g, "gamma_omega").holds
    b = s.sweep(g, "gamma_chi").holds
    return p4_free == a == b, False, {"p4_free": p4_free, "gamma_omega_perfect": a, "gamma_chi_perfect": b}


def _thm45(g, s):
    fast = is_trivially_perfect(g, "fast").holds
    slow = is_trivially_perfect(g, "definitional").holds
    return fast == slow, False, {"p4_c4_free": fast, "alpha_equals_maximal_cliques": slow}


def _thm46(g, s):
    free = find_induced(g, "P4") is None and find_induced(g, "C4") is None
    sweep = s.sweep(g, "gamma_col").holds
    return free == sweep, False, {"p4_c4_free": free, "gamma_col_perfect": sweep}


def _cor42(g, s):
    if not is_chordal(g).holds:
        raise Skip("hypothesis: chordal")
    d, w = g.min_degree(), s.omega(g)
    simplicial = simplicial_vertices(g)
    return d <= w - 1 and bool(simplicial), d == w - 1, {"min_degree": d, "omega": w, "simplicial": simplicial}


def _conj2(g, s):
    if find_induced(g, "C4") is not None:
        raise Skip("hypothesis: contains C4")
    gam, d = s.gamma(g), g.min_degree()
    return gam >= d + 1, gam == d + 1, {"gamma": gam, "min_degree": d}


def _conj1(g, s):
    if find_induced(g, "C4") is not None:
        raise Skip("hypothesis: contains C4")
    if not g.is_regular():
        raise Skip("hypothesis: regular")
    gam, r = s.gamma(g), g.max_degree()
    return gam == r + 1, True, {"gamma": gam, "degree": r}


def _zs_min(g, s):
    if find_induced(g, "K3") is not None:
        raise Skip("hypothesis: triangle-free")
    gam = s.gamma(g)
    return 2 * gam <= g.n + 2, 2 * gam == g.n + 2, {"gamma": gam, "n": g.n}


CHECKS = {
    "eq2": _eq2,
    "eq34": _eq34,
    "eq5": _eq5,
    "thm22": _thm22,
    "cor23": _cor23,
    "thm24": _thm24,
    "thm26i": _thm26i,
    "thm26iii": _thm26iii,
    "cor27": _cor27,
    "cor28": _cor28,
    "cor29": _cor29,
    "changhsu": _changhsu,
    "lem31": _lem31,
    "thm32": _thm32,
    "cor33": _cor33,
    "thm43": _thm43,
    "thm44": _thm44,
    "thm45": _thm45,
    "thm46": _thm46,
    "cor42": _cor42,
    "conj2": _conj2,
    "conj1": _conj1,
    "zs_min": _zs_min,
}

ALL_CHECKS = tuple(CHECKS)


@dataclass
class CheckResult:
    check: str
    graph: str
    verdict: str
    reason: str = None
    equality: bool = False
    details: dict = field(default_factory=dict)

    def to_json(self):
        out = {"check": self.check, "graph": self.graph, "verdict": self.verdict}
        if self.reason is not None:
            out["reason"] = self.reason
        out["equality"] = self.equality
        out["details"] = self.details
        return out


def graph_id(g):
    """graph6 of the canonical form (as given above the isomorphism cap)."""
    if 0 < g.n <= limit("iso"):
        g = canonical_form(g)
    return to_graph6(g)


def _resolve(check_id):
    try:
        return CHECKS[check_id]
    except KeyError:
        raise ValueError(f"unknown check id {check_id!r}") from None


def check(g, check_id, gid=None):
    fn = _resolve(check_id)
    gid = graph_id(g) if gid is None else gid
    if g.n == 0:
        return CheckResult(check_id, gid, "skipped", "size: empty graph")
    try:
        holds, equality, details = fn(g, FAST)
    except Skip as exc:
        return CheckResult(check_id, gid, "skipped", str(exc))
    except SolverLimitError as exc:
        return CheckResult(check_id, gid, "skipped", f"size: {exc}")
    if holds:
        return CheckResult(check_id, gid, "holds", None, bool(equality), details)
    try:
        again, _, oracle_details = fn(g, ORACLE)
    except (Skip, SolverLimitError, GraphError) as exc:
        raise InternalFault(f"{check_id} on {gid}: violation cannot be re-verified ({exc})") from None
    if again:
        raise InternalFault(f"{check_id} on {gid}: oracle path does not reproduce the violation")
    details = dict(details, reverified=True, oracle=oracle_details)
    return CheckResult(check_id, gid, "violated", None, False, details)


@dataclass
class SuiteReport:
    corpus: str
    checks: list
    graphs: int
    counts: dict
    violations: list
    equality: dict
    elapsed: float = 0.0
    results: list = field(default_factory=list, repr=False)

    @property
    def violation_count(self):
        return len(self.violations)

    def to_json(self, timing=False):
        out = {
            "corpus": self.corpus,
            "graphs": self.graphs,
            "checks": list(self.checks),
            "counts": self.counts,
            "violations": self.violations,
            "equality": self.equality,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _evaluate(item):
    line, checks = item
    g = parse_graph6(line)
    gid = graph_id(g)
    return [check(g, c, gid) for c in checks]


def evaluate_all(graphs, checks, jobs=1):
    """Results for every (graph, check) pair, in corpus order."""
    checks = list(checks)
    for c in checks:
        _resolve(c)
    items = [(to_graph6(g), checks) for g in graphs]
    if jobs <= 1 or len(items) < 2:
        return [_evaluate(it) for it in items]
    chunk = max(1, len(items) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate, items, chunksize=chunk))


def run_suite(graphs, checks=ALL_CHECKS, corpus="custom", jobs=1):
    start = time.perf_counter()
    graphs = list(graphs)
    rows = evaluate_all(graphs, checks, jobs)
    counts = {c: {"holds": 0, "violated": 0, "skipped": 0} for c in checks}
    equality = {c: [] for c in checks}
    violations = []
    for results in rows:
        for r in results:
            counts[r.check][r.verdict] += 1
            if r.verdict == "holds" and r.equality:
                equality[r.check].append(r.graph)
            elif r.verdict == "violated":
                violations.append(r.to_json())
    return SuiteReport(
        corpus=corpus,
        checks=list(checks),
        graphs=len(graphs),
        counts=counts,
        violations=violations,
        equality=equality,
        elapsed=time.perf_counter() - start,
        results=rows,
    )


def rows_as_csv(rows):
    import csv
    import io
    import json

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["graph6", "check", "verdict", "detail"])
    for results in rows:
        for r in results:
            detail = r.reason if r.verdict == "skipped" else json.dumps(r.details, sort_keys=True)
            writer.writerow([r.graph, r.check, r.verdict, detail])
    return buf.getvalue()


def enumerated_corpus(max_n, min_n=1, connected=False):
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(enumerate_graphs(n, connected=connected))
    return out


@dataclass(frozen=True)
class Counterexample:
    conjecture: str
    graph: str
    gamma: int
    min_degree: int


def search_counterexample(conjecture, max_n):
    """First C4-free graph (regular too for conj1) with Gamma <= delta.

    A candidate is re-checked with the brute-force Grundy oracle before it
    is returned.
    """
    if conjecture not in ("conj1", "conj2"):
        raise ValueError(f"unknown conjecture {conjecture!r}")
    if max_n > ENUMERATION_LIMIT:
        raise SolverLimitError(f"enumeration limit is n <= {ENUMERATION_LIMIT}, got max_n={max_n}")
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n):
            if find_induced(g, "C4") is not None:
                continue
            if conjecture == "conj1" and not g.is_regular():
                continue
            gam, d = grundy_number(g)[0], g.min_degree()
            if gam >= d + 1:
                continue
            gam2, d2 = oracles.gamma(g), min(g.degree(v) for v in range(g.n))
            if gam2 >= d2 + 1:
                raise InternalFault(f"{conjecture} witness {to_graph6(g)} failed re-verification")
            return Counterexample(conjecture, to_graph6(g), gam2, d2)
    return None


def zs_minimum_order(k):
    """Triangle-free graphs below 2k-2 vertices have Gamma < k, and b_graph(k)
    reaches Gamma = k on 2k-2 vertices."""
    if not 2 <= k <= 5:
        raise ValueError("zs_minimum_order needs 2 <= k <= 5")
    checked = 0
    largest = 0
    for n in range(1, 2 * k - 2):
        for g in enumerate_graphs(n):
            if find_induced(g, "K3") is not None:
                continue
            checked += 1
            gam = grundy_number(g)[0]
            largest = max(largest, gam)
            if gam >= k:
                return CheckResult(
                    "zs_min", graph_id(g), "violated", None, False,
                    {"k": k, "gamma": gam, "n": n, "reverified": oracles.gamma(g) >= k},
                )
    b = b_graph(k)
    gam_b = grundy_number(b)[0]
    ok = find_induced(b, "K3") is None and b.n == 2 * k - 2 and gam_b == k
    details = {
        "k": k,
        "triangle_free_graphs_below": checked,
        "max_gamma_below": largest,
        "b_graph_order": b.n,
        "b_graph_gamma": gam_b,
    }
    return CheckResult("zs_min", graph_id(b), "holds" if ok else "violated", None, ok, details)

