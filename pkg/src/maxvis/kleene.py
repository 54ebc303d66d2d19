"""Kleene star computation and recognition.

The series I (+) A (+) A^2 (+) ... converges iff lambda(A) <= 1, in which
case it equals I (+) A (+) ... (+) A^(n-1) and entry (i, j), i != j, is
the best weight over all i -> j paths.  Computed by a Floyd-Warshall
sweep followed by (+) I; divergence is rejected up front by checking
lambda(A) instead of watching the diagonal blow up.
"""

from dataclasses import dataclass

from ._closure import star_closure
from .errors import LambdaExceedsOne, OracleLimitExceeded
from .semiring import (DEFAULT_TOL, EXACT, FLOAT, MaxMatrix, log_close,
                       mat_mul, mat_oplus)
from .spectral import ORACLE_LIMIT, lambda_log, max_cycle_root


def _check_convergent(a, tol):
    if a.mode == FLOAT:
        lg = lambda_log(a, tol)
        if lg > tol:
            raise LambdaExceedsOne(
                "lambda(A) = exp(%.6g) > 1: the series I (+) A (+) A^2 (+) ... "
                "diverges; the star exists only for lambda(A) <= 1" % lg
            )
        return
    root = max_cycle_root(a)
    if root.weight > 1:  # w**(1/k) > 1  <=>  w > 1
        raise LambdaExceedsOne(
            "lambda(A) = (%s)**(1/%d) > 1: the series I (+) A (+) A^2 (+) ... "
            "diverges; the star exists only for lambda(A) <= 1"
            % (root.weight, root.length)
        )


@dataclass(frozen=True)
class KleeneStar:
    """The star together with the matrix it closed."""

    star: MaxMatrix
    source: MaxMatrix


def kleene_star(a, tol=DEFAULT_TOL):
    """Star of a convergent matrix; raises LambdaExceedsOne otherwise."""
    _check_convergent(a, tol)
    return KleeneStar(star=star_closure(a), source=a)


def kleene_series_oracle(a, limit=ORACLE_LIMIT, tol=DEFAULT_TOL):
    """Oracle: the truncated series I (+) A (+) ... (+) A^(n-1) computed
    by repeated products."""
    if a.n > limit:
        raise OracleLimitExceeded("oracle limit is n <= %d, got n = %d" % (limit, a.n))
    _check_convergent(a, tol)
    acc = MaxMatrix.identity(a.n, a.mode)
    power = MaxMatrix.identity(a.n, a.mode)
    for _ in range(max(a.n - 1, 0)):
        power = mat_mul(power, a)
        acc = mat_oplus(acc, power)
    return acc


def is_kleene_star(a, tol=DEFAULT_TOL):
    """True iff A (x) A == A and every diagonal entry is 1 (within tol
    on log values in float mode)."""
    sq = mat_mul(a, a)
    if a.mode == EXACT:
        rows = a.exact_rows()
        if sq != a:
            return False
        return all(rows[i][i] == 1 for i in range(a.n))
    la, ls = a.log_array(), sq.log_array()
    for i in range(a.n):
        if not log_close(la[i, i], 0.0, tol):
            return False
        for j in range(a.n):
            if not log_close(la[i, j], ls[i, j], tol):
                return False
    return True
