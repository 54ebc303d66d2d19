"""Maximum cycle geometric mean and the critical digraph.

The cycle geometric mean of a cycle of length k and weight w is w**(1/k),
so the maximum over all cycles, lambda(A), is generally a k-th root of a
rational.  Exact mode therefore works with the *root form* (w, k) and
compares candidates cross-multiplied, w1**k2 <=> w2**k1, never taking a
root.  ``max_cycle_geometric_mean`` returns a Fraction when the optimum
happens to be rational and raises ``IrrationalLambda`` otherwise; the
root form itself is available via ``max_cycle_root``.

lambda is computed by Karp's method run per strongly connected component
(Karp's recurrence assumes every node reaches a cycle, which fails on
reducible matrices), taking the maximum over components.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from ._closure import star_closure
from ._graph import simple_cycles, tarjan_scc
from .errors import IrrationalLambda, ModeError, OracleLimitExceeded, ZeroLambda
from .semiring import DEFAULT_TOL, EXACT, FLOAT, NEG_INF, MaxMatrix, scalar_mul

ORACLE_LIMIT = 8


@dataclass(frozen=True)
class CycleMeanRoot:
    """Exact value weight**(1/length) of a best cycle's geometric mean."""

    weight: Fraction
    length: int

    def __lt__(self, other):
        return self.weight ** other.length < other.weight ** self.length

    def value_equals(self, other):
        return self.weight ** other.length == other.weight ** self.length

    def is_zero(self):
        return self.weight == 0

    def as_fraction(self):
        """The root as a Fraction, or None when it is irrational."""
        if self.weight == 0:
            return Fraction(0)
        p = _int_kth_root(self.weight.numerator, self.length)
        q = _int_kth_root(self.weight.denominator, self.length)
        if p is None or q is None:
            return None
        return Fraction(p, q)

    def approx(self):
        """Float approximation (linear domain)."""
        if self.weight == 0:
            return 0.0
        lg = math.log(self.weight.numerator) - math.log(self.weight.denominator)
        return math.exp(lg / self.length)


def _int_kth_root(x, k):
    """Exact integer k-th root of x >= 1, or None if x is not a perfect
    k-th power."""
    if x == 1 or k == 1:
        return x
    r = 1 << -(-x.bit_length() // k)  # upper-ish seed, then Newton
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    return r if r ** k == x else None


@dataclass(frozen=True)
class SpectralData:
    """lambda together with the structure of the critical digraph.

    components: the strongly connected components of the closure digraph
    (critical components plus one singleton per non-critical node),
    ordered by smallest node.
    representatives: the smallest node of each critical component.
    """

    lam: object  # Fraction in exact mode, linear-domain float otherwise
    critical_nodes: frozenset
    critical_edges: frozenset
    components: tuple
    representatives: tuple
    non_critical: frozenset
    n_components_critical: int
    mode: str
    lam_log: float = None

    @property
    def n_components(self):
        return len(self.components)


def _karp_root_scc(rows, nodes):
    """Exact Karp on one strongly connected component with >= 1 cycle."""
    m = len(nodes)
    if m == 1:
        v = rows[nodes[0]][nodes[0]]
        return CycleMeanRoot(v, 1) if v > 0 else None
    prev = [None] * m
    prev[0] = Fraction(1)
    table = [prev]
    for _ in range(m):
        cur = [None] * m
        for t in range(m):
            w = prev[t]
            if w is None:
                continue
            arow = rows[nodes[t]]
            for u in range(m):
                a = arow[nodes[u]]
                if a == 0:
                    continue
                v = w * a
                if cur[u] is None or v > cur[u]:
                    cur[u] = v
        table.append(cur)
        prev = cur
    last = table[m]
    best = None
    for v in range(m):
        if last[v] is None:
            continue
        vbest = None
        for k in range(m):
            dk = table[k][v]
            if dk is None:
                continue
            cand = CycleMeanRoot(last[v] / dk, m - k)
            if vbest is None or cand < vbest:
                vbest = cand
        if vbest is not None and (best is None or best < vbest):
            best = vbest
    return best


def _cyclic_sccs(a):
    """SCCs of the digraph of A that contain at least one cycle."""
    if a.mode == FLOAT and bool(np.all(a.log_array() > NEG_INF)):
        return [list(range(a.n))]  # complete digraph: a single cyclic SCC
    adjacency = a.positive_adjacency()
    out = []
    for comp in tarjan_scc(a.n, adjacency):
        if len(comp) > 1:
            out.append(comp)
        else:
            v = comp[0]
            if a.mode == EXACT:
                has_loop = a.exact_rows()[v][v] > 0
            else:
                has_loop = a.log_array()[v, v] > NEG_INF
            if has_loop:
                out.append(comp)
    return out


def max_cycle_root(a):
    """lambda(A) in exact root form (weight, length); exact mode only."""
    if a.mode != EXACT:
        raise ModeError("max_cycle_root needs an exact-rational matrix")
    rows = a.exact_rows()
    best = None
    for comp in _cyclic_sccs(a):
        cand = _karp_root_scc(rows, comp)
        if cand is not None and (best is None or best < cand):
            best = cand
    return best if best is not None else CycleMeanRoot(Fraction(0), 1)


def lambda_log(a, tol=DEFAULT_TOL):
    """log lambda(A) for a float-mode matrix (-inf when no positive cycle)."""
    if a.mode != FLOAT:
        raise ModeError("lambda_log needs a float-mode matrix")
    log = a.log_array()
    best = NEG_INF
    for comp in _cyclic_sccs(a):
        sub = np.ascontiguousarray(log[np.ix_(comp, comp)])
        cand = _kernels.karp_lambda(sub)
        if cand > best:
            best = cand
    return best


def max_cycle_geometric_mean(a, tol=DEFAULT_TOL):
    """lambda(A) = max over cycles of w(sigma, A)**(1/k); 0 iff the
    digraph of A has no positive cycle.

    In exact mode the value is returned as a Fraction; when the best
    cycle mean is an irrational root, ``IrrationalLambda`` is raised
    (use ``max_cycle_root`` for the exact root form).
    """
    if a.mode == FLOAT:
        lg = lambda_log(a, tol)
        return math.exp(lg) if lg != NEG_INF else 0.0
    root = max_cycle_root(a)
    lam = root.as_fraction()
    if lam is None:
        raise IrrationalLambda(
            "lambda(A) = (%s)**(1/%d) is irrational; exact mode cannot "
            "represent it as a rational" % (root.weight, root.length)
        )
    return lam


def brute_force_lambda_root(a, limit=ORACLE_LIMIT):
    """Oracle: lambda by enumeration of every simple cycle, in root form."""
    if a.mode != EXACT:
        raise ModeError("the cycle-enumeration oracle runs in exact mode")
    if a.n > limit:
        raise OracleLimitExceeded("oracle limit is n <= %d, got n = %d" % (limit, a.n))
    rows = a.exact_rows()
    adjacency = a.positive_adjacency()
    best = None
    for cyc in simple_cycles(adjacency, a.n):
        w = Fraction(1)
        for idx, v in enumerate(cyc):
            w *= rows[v][cyc[(idx + 1) % len(cyc)]]
        cand = CycleMeanRoot(w, len(cyc))
        if best is None or best < cand:
            best = cand
    return best if best is not None else CycleMeanRoot(Fraction(0), 1)


def brute_force_lambda(a, limit=ORACLE_LIMIT):
    """Oracle twin of ``max_cycle_geometric_mean`` (same contract)."""
    if a.mode == FLOAT:
        if a.n > limit:
            raise OracleLimitExceeded("oracle limit is n <= %d, got n = %d" % (limit, a.n))
        log = a.log_array()
        adjacency = a.positive_adjacency()
        best = NEG_INF
        for cyc in simple_cycles(adjacency, a.n):
            s = 0.0
            for idx, v in enumerate(cyc):
                s += log[v, cyc[(idx + 1) % len(cyc)]]
            best = max(best, s / len(cyc))
        return math.exp(best) if best != NEG_INF else 0.0
    root = brute_force_lambda_root(a, limit)
    lam = root.as_fraction()
    if lam is None:
        raise IrrationalLambda(
            "lambda(A) = (%s)**(1/%d) is irrational; exact mode cannot "
            "represent it as a rational" % (root.weight, root.length)
        )
    return lam


def critical_edges_oracle(a, limit=ORACLE_LIMIT):
    """Oracle: the set of edges lying on simple cycles attaining lambda."""
    if a.mode != EXACT:
        raise ModeError("the critical-cycle oracle runs in exact mode")
    if a.n > limit:
        raise OracleLimitExceeded("oracle limit is n <= %d, got n = %d" % (limit, a.n))
    rows = a.exact_rows()
    adjacency = a.positive_adjacency()
    lam = brute_force_lambda_root(a, limit)
    edges = set()
    if lam.is_zero():
        return frozenset()
    for cyc in simple_cycles(adjacency, a.n):
        w = Fraction(1)
        for idx, v in enumerate(cyc):
            w *= rows[v][cyc[(idx + 1) % len(cyc)]]
        if CycleMeanRoot(w, len(cyc)).value_equals(lam):
            for idx, v in enumerate(cyc):
                edges.add((v, cyc[(idx + 1) % len(cyc)]))
    return frozenset(edges)


def definite_form(a, tol=DEFAULT_TOL):
    """A / lambda(A), which has lambda == 1 (the eigenproblems of A and
    of its definite form coincide)."""
    if a.mode == FLOAT:
        lg = lambda_log(a, tol)
        if lg == NEG_INF:
            raise ZeroLambda("lambda(A) = 0: no positive cycle, nothing to normalize by")
        return MaxMatrix(a.n, FLOAT, log=a.log_array() - lg)
    lam = max_cycle_geometric_mean(a)
    if lam == 0:
        raise ZeroLambda("lambda(A) = 0: no positive cycle, nothing to normalize by")
    return scalar_mul(Fraction(1) / lam, a)


def _critical_scc_partition(n, critical_edges):
    """SCCs of the critical digraph plus non-critical singletons."""
    critical_nodes = sorted({v for e in critical_edges for v in e})
    node_set = set(critical_nodes)
    adjacency = {v: [] for v in critical_nodes}
    for i, j in critical_edges:
        adjacency[i].append(j)
    # Tarjan over the critical subgraph via local relabeling.
    local = {v: k for k, v in enumerate(critical_nodes)}
    local_adj = [[local[w] for w in adjacency[v]] for v in critical_nodes]
    critical_comps = [
        sorted(critical_nodes[k] for k in comp)
        for comp in tarjan_scc(len(critical_nodes), local_adj)
    ]
    critical_comps.sort(key=lambda c: c[0])
    singletons = [[v] for v in range(n) if v not in node_set]
    components = sorted(critical_comps + singletons, key=lambda c: c[0])
    return critical_comps, components


def critical_structure(a, tol=DEFAULT_TOL):
    """lambda, the critical digraph C(A), its components and the
    representative node set.

    An edge (i, j) is critical iff it lies on a cycle whose geometric
    mean attains lambda; with B = A/lambda(A) and S = B* this is exactly
    b_ij * s_ji == 1, the test used here (the best cycle through the
    edge closes it with the best j -> i path).
    """
    n = a.n
    if a.mode == FLOAT:
        lg = lambda_log(a, tol)
        if lg == NEG_INF:
            raise ZeroLambda("lambda(A) = 0: the critical digraph is empty")
        b = a.log_array() - lg
        star = star_closure(MaxMatrix(n, FLOAT, log=b.copy())).log_array()
        crit = np.abs(b + star.T) <= tol  # b_ij + s_ji close to log 1 = 0
        crit &= b > NEG_INF
        critical_edges = frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(crit)))
        lam = math.exp(lg)
        lam_log = lg
    else:
        lam = max_cycle_geometric_mean(a)  # raises IrrationalLambda if needed
        if lam == 0:
            raise ZeroLambda("lambda(A) = 0: the critical digraph is empty")
        b = scalar_mul(Fraction(1) / lam, a)
        star = star_closure(b).exact_rows()
        brows = b.exact_rows()
        critical_edges = frozenset(
            (i, j)
            for i in range(n)
            for j in range(n)
            if brows[i][j] != 0 and brows[i][j] * star[j][i] == 1
        )
        lam_log = None
    critical_nodes = frozenset(v for e in critical_edges for v in e)
    critical_comps, components = _critical_scc_partition(n, critical_edges)
    return SpectralData(
        lam=lam,
        critical_nodes=critical_nodes,
        critical_edges=critical_edges,
        components=tuple(tuple(c) for c in components),
        representatives=tuple(c[0] for c in critical_comps),
        non_critical=frozenset(range(n)) - critical_nodes,
        n_components_critical=len(critical_comps),
        mode=a.mode,
        lam_log=lam_log,
    )


def is_irreducible(a):
    """True iff every ordered pair of nodes is joined by a positive path
    (for n == 1 this requires a positive loop)."""
    if a.n == 1:
        return a.entry(0, 0) > 0
    return len(tarjan_scc(a.n, a.positive_adjacency())) == 1
