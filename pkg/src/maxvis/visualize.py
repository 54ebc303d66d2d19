"""Visualization checks and the scalings that produce or preserve them.

A matrix is *visualized* when a_ij == lambda(A) on every critical edge
and a_ij <= lambda(A) elsewhere, *strictly visualized* when the
off-critical inequalities are strict.  Scaling by any positive linear
combination of the columns of (A/lambda)* strictly visualizes A, and a
positive x strictly visualizes A exactly when x lies in the relative
interior of the subeigencone.

For an already visualized definite matrix, every scaling that keeps it
visualized is constant on each component of the closure digraph and is
governed by the m x m component-maxima matrix built here
(``quotient_matrix``): the projected vector must satisfy
alpha_uv * x_v <= x_u off the diagonal, strictly for strictness.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._closure import star_closure
from .errors import (NotDefinite, NotVisualized, PowerIterationDivergence,
                     ReducibleMatrix)
from .semiring import (DEFAULT_TOL, EXACT, FLOAT, NEG_INF, MaxMatrix,
                       MaxVector, ScalingVector, diag_similarity, to_fraction)
from .spectral import critical_structure, definite_form, is_irreducible

NOT_VISUALIZED = "not_visualized"
VISUALIZED = "visualized"
STRICTLY_VISUALIZED = "strictly_visualized"

BREAKS = "breaks"
PRESERVES_VISUALIZED = "preserves_visualized"
MAKES_STRICT = "makes_strict"


@dataclass(frozen=True)
class VisualizationReport:
    """Classification plus the offending entries and the strictness margin.

    ``witnesses`` lists (i, j, value) for every critical entry differing
    from lambda and every non-critical entry >= lambda (the entries that
    spoil strictness or visualization).  ``margin`` is the smallest
    lambda / a_ij over positive non-critical entries -- a diagnostic of
    how far from the strictness boundary the matrix sits (None when
    every non-critical entry is 0).
    """

    status: str
    witnesses: tuple
    margin: object
    lam: object

    @property
    def visualized(self):
        return self.status in (VISUALIZED, STRICTLY_VISUALIZED)


def check_visualization(a, tol=DEFAULT_TOL):
    """Classify A as not_visualized / visualized / strictly_visualized."""
    data = critical_structure(a, tol)
    n = a.n
    witnesses = []
    margin = None
    visualized = True
    strict = True
    if a.mode == EXACT:
        lam = data.lam
        rows = a.exact_rows()
        for i in range(n):
            for j in range(n):
                v = rows[i][j]
                if (i, j) in data.critical_edges:
                    if v != lam:
                        witnesses.append((i, j, v))
                        visualized = False
                elif v >= lam:
                    witnesses.append((i, j, v))
                    strict = False
                    if v > lam:
                        visualized = False
                elif v > 0:
                    m = lam / v
                    if margin is None or m < margin:
                        margin = m
    else:
        lam = data.lam
        log = a.log_array()
        lam_log = data.lam_log
        crit = np.zeros((n, n), dtype=bool)
        for i, j in data.critical_edges:
            crit[i, j] = True
        crit_bad = crit & (np.abs(log - lam_log) > tol)
        noncrit = ~crit
        # conservative: a boundary entry within tol is not strict
        noncrit_ge = noncrit & (log >= lam_log - tol)
        noncrit_gt = noncrit & (log > lam_log + tol)
        visualized = not (crit_bad.any() or noncrit_gt.any())
        strict = not noncrit_ge.any()
        for i, j in np.argwhere(crit_bad | noncrit_ge):
            v = log[i, j]
            witnesses.append((int(i), int(j), math.exp(v) if v != NEG_INF else 0.0))
        below = noncrit & (log < lam_log - tol) & (log != NEG_INF)
        if below.any():
            margin = math.exp(lam_log - float(np.max(log[below])))
    if not visualized:
        status = NOT_VISUALIZED
    elif strict:
        status = STRICTLY_VISUALIZED
    else:
        status = VISUALIZED
    return VisualizationReport(status=status, witnesses=tuple(witnesses),
                               margin=margin, lam=lam)


def _perron_vector(star, tol, max_iter):
    """Conventional (plus-times) Perron vector of the star by power
    iteration; the star of an irreducible definite matrix is positive,
    hence primitive, so the iteration converges."""
    s = np.array([[float(v) for v in row] for row in star.to_rows()])
    n = s.shape[0]
    v = np.ones(n)
    for _ in range(max_iter):
        w = s @ v
        top = w.max()
        if top <= 0:
            raise PowerIterationDivergence("power iteration collapsed to zero")
        w /= top
        if np.max(np.abs(w / v - 1.0)) < tol:
            return w
        v = w
    raise PowerIterationDivergence(
        "power iteration did not reach a %g relative fixed point within %d "
        "iterations" % (tol, max_iter)
    )


def strict_visualizer(a, method="column_sum", weights=None, tol=DEFAULT_TOL,
                      perron_tol=1e-12):
    """A positive x such that diag(x)^-1 A diag(x) is strictly visualized.

    method='column_sum': x = sum of all columns of (A/lambda)*, i.e. the
    all-ones-coefficient positive linear combination.  Stays exact in
    exact mode.

    method='log_convex': componentwise product of the columns raised to
    positive weights summing to 1 (default uniform).  Requires A
    irreducible so the star is positive; the result is generally
    irrational, so the returned vector is float-mode even for exact
    input.

    method='perron': the conventional Perron eigenvector of the star
    (power iteration from the all-ones vector); also requires
    irreducibility and returns a float-mode vector.
    """
    b = definite_form(a, tol)  # raises ZeroLambda when lambda == 0
    star = star_closure(b)
    n = a.n
    if method == "column_sum":
        if a.mode == EXACT:
            rows = star.exact_rows()
            vals = tuple(sum(row, Fraction(0)) for row in rows)
            return ScalingVector(MaxVector(n, EXACT, vals=vals), "column-sum")
        log = star.log_array()
        sums = np.logaddexp.reduce(log, axis=1)
        return ScalingVector(MaxVector(n, FLOAT, log=sums), "column-sum")
    if method == "log_convex":
        if not is_irreducible(a):
            raise ReducibleMatrix(
                "log-convex combinations need an irreducible matrix so the "
                "star is entrywise positive"
            )
        if weights is None:
            w = np.full(n, 1.0 / n)
        else:
            w = np.array([float(to_fraction(v)) if isinstance(v, str) else float(v)
                          for v in weights], dtype=float)
            if len(w) != n:
                raise ValueError("need one weight per column")
            if np.any(w <= 0) or abs(w.sum() - 1.0) > 1e-12:
                raise ValueError("weights must be positive and sum to 1")
        log = star.log_array()
        out = log @ w  # sum_j w_j * log s_ij, finite since star positive
        return ScalingVector(MaxVector(n, FLOAT, log=out), "log-convex")
    if method == "perron":
        if not is_irreducible(a):
            raise ReducibleMatrix(
                "the Perron vector construction needs an irreducible matrix"
            )
        cap = 10 * n * max(1, math.ceil(-math.log10(perron_tol)))
        v = _perron_vector(star, perron_tol, cap)
        with np.errstate(divide="ignore"):
            return ScalingVector(MaxVector(n, FLOAT, log=np.log(v)), "perron")
    raise ValueError("unknown method %r; expected column_sum, log_convex or perron"
                     % (method,))


def in_relative_interior(a, x, tol=DEFAULT_TOL):
    """True iff diag(x)^-1 A diag(x) is strictly visualized, which is
    exactly membership of x in the relative interior of V*(A)."""
    if isinstance(x, ScalingVector):
        x = x.vec
    if x.mode == FLOAT and a.mode == EXACT:
        a = a.to_float()
    elif x.mode == EXACT and a.mode == FLOAT:
        x = x.to_float()
    return check_visualization(diag_similarity(a, x), tol).status == STRICTLY_VISUALIZED


def linear_hull_membership(a, v, tol=DEFAULT_TOL):
    """True iff a_ij * v_j == lambda * v_i for every critical edge.

    ``v`` is a plain real vector (any sign pattern: the hull is a linear
    subspace of R^n, not a cone).
    """
    data = critical_structure(a, tol)
    if a.mode == EXACT:
        vals = [to_fraction(c) if not isinstance(c, (int, Fraction)) else Fraction(c)
                for c in v]
        rows = a.exact_rows()
        return all(rows[i][j] * vals[j] == data.lam * vals[i]
                   for i, j in data.critical_edges)
    arr = np.array([float(c) for c in v])
    lam = math.exp(data.lam_log)
    rows = a.to_rows()
    for i, j in data.critical_edges:
        lhs = rows[i][j] * arr[j]
        rhs = lam * arr[i]
        scale = max(abs(lhs), abs(rhs), 1.0)
        if abs(lhs - rhs) > tol * scale:
            return False
    return True


@dataclass(frozen=True)
class QuotientMatrix:
    """Component-maxima matrix of a visualized definite matrix.

    ``alpha[u][v] = max { a_ij : i in component u, j in component v }``
    over the m components of the closure digraph.  Its digraph carries no
    critical cycle besides loops, so the subeigencone of ``alpha`` has
    full-dimensional interior: exactly the freedom Theorem-4.2-style
    preserving scalings enjoy.
    """

    m: int
    alpha: MaxMatrix
    node_to_component: tuple
    component_nodes: tuple


def _require_definite_visualized(a, tol):
    data = critical_structure(a, tol)
    if a.mode == EXACT:
        if data.lam != 1:
            raise NotDefinite("lambda(A) = %s != 1: operation needs a definite "
                              "matrix" % (data.lam,))
    else:
        if abs(data.lam_log) > tol:
            raise NotDefinite("lambda(A) = exp(%.6g) != 1: operation needs a "
                              "definite matrix" % data.lam_log)
    report = check_visualization(a, tol)
    if not report.visualized:
        raise NotVisualized(
            "matrix is not visualized: %d entries violate the lambda bounds "
            "(first witness: %s)" % (len(report.witnesses), report.witnesses[:1])
        )
    return data, report


def quotient_matrix(a, tol=DEFAULT_TOL):
    """Project a visualized definite matrix onto its closure components."""
    data, _ = _require_definite_visualized(a, tol)
    comps = data.components
    m = len(comps)
    node_to_comp = [0] * a.n
    for idx, comp in enumerate(comps):
        for v in comp:
            node_to_comp[v] = idx
    if a.mode == EXACT:
        rows = a.exact_rows()
        alpha_rows = tuple(
            tuple(max(rows[i][j] for i in cu for j in cv) for cv in comps)
            for cu in comps
        )
        alpha = MaxMatrix(m, EXACT, rows=alpha_rows)
    else:
        log = a.log_array()
        arr = np.array([
            [np.max(log[np.ix_(cu, cv)]) for cv in comps] for cu in comps
        ])
        alpha = MaxMatrix(m, FLOAT, log=arr)
    return QuotientMatrix(
        m=m,
        alpha=alpha,
        node_to_component=tuple(node_to_comp),
        component_nodes=tuple(tuple(c) for c in comps),
    )


def star_block_structure(a, tol=DEFAULT_TOL):
    """Verify the block shape of the star of a visualized definite matrix:
    each (u, v) block of A* is constant, equal to entry (u, v) of the
    star of the component-maxima matrix.  Diagnostic; returns a bool."""
    q = quotient_matrix(a, tol)
    star = star_closure(a)
    alpha_star = star_closure(q.alpha)
    if a.mode == EXACT:
        s = star.exact_rows()
        t = alpha_star.exact_rows()
        for u, cu in enumerate(q.component_nodes):
            for v, cv in enumerate(q.component_nodes):
                expect = t[u][v]
                for i in cu:
                    for j in cv:
                        if s[i][j] != expect:
                            return False
        return True
    s = star.log_array()
    t = alpha_star.log_array()
    for u, cu in enumerate(q.component_nodes):
        for v, cv in enumerate(q.component_nodes):
            expect = t[u, v]
            block = s[np.ix_(cu, cv)]
            if expect == NEG_INF:
                if not np.all(block == NEG_INF):
                    return False
            elif not np.all(np.abs(block - expect) <= tol):
                return False
    return True


def preserving_scaling_check(a, x, tol=DEFAULT_TOL):
    """Classify a positive scaling of a visualized definite matrix.

    'breaks' when x is not constant on some closure component or some
    off-diagonal inequality alpha_uv * x_v <= x_u fails; otherwise
    'makes_strict' when every off-diagonal inequality is strict, else
    'preserves_visualized'.  Equivalent to classifying
    diag(x)^-1 A diag(x) directly.
    """
    if isinstance(x, ScalingVector):
        x = x.vec
    if not x.is_positive():
        raise ValueError("scaling vector must be strictly positive")
    q = quotient_matrix(a, tol)
    if a.mode == EXACT:
        vals = x._vals
        proj = []
        for comp in q.component_nodes:
            first = vals[comp[0]]
            if any(vals[i] != first for i in comp[1:]):
                return BREAKS
            proj.append(first)
        alpha = q.alpha.exact_rows()
        strict = True
        for u in range(q.m):
            for v in range(q.m):
                if u == v:
                    continue
                lhs = alpha[u][v] * proj[v]
                if lhs > proj[u]:
                    return BREAKS
                if lhs == proj[u]:
                    strict = False
        return MAKES_STRICT if strict else PRESERVES_VISUALIZED
    lx = x.log_array()
    proj = []
    for comp in q.component_nodes:
        first = lx[comp[0]]
        if any(abs(lx[i] - first) > tol for i in comp[1:]):
            return BREAKS
        proj.append(first)
    alpha = q.alpha.log_array()
    strict = True
    for u in range(q.m):
        for v in range(q.m):
            if u == v or alpha[u, v] == NEG_INF:
                continue
            lhs = alpha[u, v] + proj[v]
            if lhs > proj[u] + tol:
                return BREAKS
            if lhs >= proj[u] - tol:
                strict = False
    return MAKES_STRICT if strict else PRESERVES_VISUALIZED


def lift_scaling(q, xt):
    """Expand a positive vector over components to a node scaling:
    x_i = xt[component of i] (the direct-sum construction)."""
    if isinstance(xt, ScalingVector):
        xt = xt.vec
    if not isinstance(xt, MaxVector):
        xt = MaxVector.from_values(xt, q.alpha.mode)
    if xt.n != q.m:
        raise ValueError("expected one entry per component: %d != %d" % (xt.n, q.m))
    if not xt.is_positive():
        raise ValueError("component scaling must be strictly positive")
    n = len(q.node_to_component)
    if xt.mode == EXACT:
        vals = tuple(xt._vals[q.node_to_component[i]] for i in range(n))
        return ScalingVector(MaxVector(n, EXACT, vals=vals), "user")
    lx = xt.log_array()
    return ScalingVector(
        MaxVector(n, FLOAT, log=np.array([lx[q.node_to_component[i]] for i in range(n)])),
        "user",
    )
