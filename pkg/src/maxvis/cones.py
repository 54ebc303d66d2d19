"""Eigencone and subeigencone of a matrix with lambda(A) > 0.

V(A)  = { x != 0 : A (x) x  =  lambda x }      (eigenvectors)
V*(A) = { x      : A (x) x  <= lambda x }      (subeigenvectors)

For B = A/lambda(A), V*(A) is the max-algebraic column span of B*, and
its scaled max extremals are the columns of B* whose indices are one
representative per critical component plus every non-critical node.
The eigencone keeps the representative columns only.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._closure import star_closure
from .errors import ModeError, ZeroLambda
from .semiring import (DEFAULT_TOL, EXACT, FLOAT, NEG_INF, MaxVector,
                       log_close, mat_vec, to_fraction)
from .spectral import (critical_structure, definite_form, lambda_log,
                       max_cycle_geometric_mean)

OUTSIDE = "outside"
SUBEIGEN_ONLY = "subeigen_only"
EIGEN = "eigen"


@dataclass(frozen=True)
class ConeBasis:
    """Scaled max-extremal generators with their source columns in B*."""

    generators: tuple
    source_columns: tuple
    kind: str  # "eigencone" | "subeigencone"


@dataclass(frozen=True)
class DimensionReport:
    maxdim_eigencone: int
    maxdim_subeigencone: int
    linear_hull_dim: int
    linear_rank_star: object  # int, or None in float mode


def _proportional(u, v, tol):
    """u ~ v (positive multiple).  Columns with different supports are
    never proportional."""
    if u.mode == EXACT:
        ratio = None
        for a, b in zip(u._vals, v._vals):
            if (a == 0) != (b == 0):
                return False
            if a == 0:
                continue
            r = a / b
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
        return True
    lu, lv = u.log_array(), v.log_array()
    if not np.array_equal(lu == NEG_INF, lv == NEG_INF):
        return False
    sel = lu != NEG_INF
    if not sel.any():
        return True
    diff = lu[sel] - lv[sel]
    return bool(np.all(np.abs(diff - diff[0]) <= tol))


def _basis(a, kind, tol):
    data = critical_structure(a, tol)
    b = definite_form(a, tol)
    star = star_closure(b)
    indices = list(data.representatives)
    if kind == "subeigencone":
        indices += sorted(data.non_critical)
        indices.sort()
    generators = []
    columns = []
    for j in indices:
        g = star.column(j).max_norm_scaled()
        if any(_proportional(g, h, tol) for h in generators):
            continue  # distinct components are never proportional; guard anyway
        generators.append(g)
        columns.append(j)
    return ConeBasis(generators=tuple(generators), source_columns=tuple(columns), kind=kind)


def subeigencone_basis(a, tol=DEFAULT_TOL):
    """Scaled basis of V*(A): columns of (A/lambda)* indexed by the
    critical representatives and the non-critical nodes."""
    return _basis(a, "subeigencone", tol)


def eigencone_basis(a, tol=DEFAULT_TOL):
    """Scaled basis of V(A): the representative columns only."""
    return _basis(a, "eigencone", tol)


def membership(a, x, tol=DEFAULT_TOL):
    """Classify x against the eigenproblem at lambda(A).

    'eigen' iff A (x) x == lambda x and x != 0; 'subeigen_only' iff
    A (x) x <= lambda x with at least one strict row; 'outside'
    otherwise (the zero vector lands here: it satisfies every equality
    but is excluded from the eigencone by definition).
    """
    y = mat_vec(a, x)
    if a.mode == EXACT:
        lam = max_cycle_geometric_mean(a)
        if lam == 0:
            raise ZeroLambda("lambda(A) = 0: membership is degenerate")
        equal = all(yi == lam * xi for yi, xi in zip(y._vals, x._vals))
        if equal:
            return EIGEN if not x.is_zero() else OUTSIDE
        if all(yi <= lam * xi for yi, xi in zip(y._vals, x._vals)):
            return SUBEIGEN_ONLY
        return OUTSIDE
    lam_log = lambda_log(a, tol)
    if lam_log == NEG_INF:
        raise ZeroLambda("lambda(A) = 0: membership is degenerate")
    ly = y.log_array()
    lx = x.log_array() + lam_log
    eq = all(log_close(u, v, tol) for u, v in zip(ly, lx))
    if eq:
        return EIGEN if not x.is_zero() else OUTSIDE
    if all(u <= v + tol for u, v in zip(ly, lx)):
        return SUBEIGEN_ONLY
    return OUTSIDE


def exact_rank(rows):
    """Conventional linear-algebra rank of a rational matrix (any shape),
    by fraction-free (Bareiss) elimination on the denominator-cleared
    integer matrix."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    # Row scaling preserves rank; clear denominators to stay integral.
    im = []
    for row in m:
        scale = 1
        for v in row:
            scale = scale * v.denominator // math.gcd(scale, v.denominator)
        im.append([int(v * scale) for v in row])
    n_rows, n_cols = len(im), len(im[0])
    rank = 0
    prev_pivot = 1
    row = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(row, n_rows):
            if im[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        im[row], im[pivot_row] = im[pivot_row], im[row]
        pivot = im[row][col]
        for r in range(row + 1, n_rows):
            for c in range(col + 1, n_cols):
                im[r][c] = (im[r][c] * pivot - im[r][col] * im[row][c]) // prev_pivot
            im[r][col] = 0
        prev_pivot = pivot
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def linear_rank(a):
    """Conventional rank of an exact-rational matrix over Q."""
    if a.mode != EXACT:
        raise ModeError("linear_rank needs exact-rational entries; float "
                        "round-off cannot certify a rank")
    return exact_rank(a.exact_rows())


def dimensions(a, tol=DEFAULT_TOL):
    """Max-algebraic dimensions of V(A) and V*(A), the linear-hull
    dimension, and (exact mode) the conventional rank of the star.

    The max dimension of V*(A) and the dimension of its linear hull
    coincide (both count the components of the closure digraph); the
    conventional rank of the star may be strictly smaller.
    """
    data = critical_structure(a, tol)
    if data.lam == 0:
        raise ZeroLambda("lambda(A) = 0: the cones degenerate")
    maxdim_v = data.n_components_critical
    maxdim_vstar = data.n_components_critical + len(data.non_critical)
    hull_dim = data.n_components
    rank = None
    if a.mode == EXACT:
        star = star_closure(definite_form(a))
        rank = linear_rank(star)
    return DimensionReport(
        maxdim_eigencone=maxdim_v,
        maxdim_subeigencone=maxdim_vstar,
        linear_hull_dim=hull_dim,
        linear_rank_star=rank,
    )


def max_combination(generators, coefficients):
    """Max combination sum(+) c_i * g_i of vectors (test/report helper)."""
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].n
    mode = generators[0].mode
    if mode == EXACT:
        out = [Fraction(0)] * n
        for c, g in zip(coefficients, generators):
            c = to_fraction(c)
            for i, v in enumerate(g._vals):
                w = c * v
                if w > out[i]:
                    out[i] = w
        return MaxVector(n, EXACT, vals=tuple(out))
    out = np.full(n, NEG_INF)
    for c, g in zip(coefficients, generators):
        c = float(c)
        shift = math.log(c) if c > 0 else NEG_INF
        np.maximum(out, g.log_array() + shift, out=out)
    return MaxVector(n, FLOAT, log=out)
