"""Raw Floyd-Warshall closure over (max, x), shared by the Kleene star
and the critical-digraph machinery.

No convergence check happens here; callers guarantee lambda(A) <= 1
(the public entry point with the precondition lives in ``kleene``).
"""

from fractions import Fraction

import numpy as np

from . import _kernels
from .semiring import EXACT, FLOAT, MaxMatrix


def fw_closure(a):
    """Best path weights with at least one edge: max_pi w(pi, A) over
    i -> j paths.  O(n^3)."""
    n = a.n
    if a.mode == FLOAT:
        d = a.log_array()  # fresh buffer; kernel updates in place
        return MaxMatrix(n, FLOAT, log=_kernels.fw_closure(d))
    d = [list(row) for row in a.exact_rows()]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == 0:
                continue
            di = d[i]
            for j in range(n):
                v = dik * dk[j]
                if v > di[j]:
                    di[j] = v
    return MaxMatrix(n, EXACT, rows=tuple(tuple(r) for r in d))


def star_closure(a):
    """I (+) best-path weights: the Kleene star matrix of a convergent A."""
    closed = fw_closure(a)
    n = a.n
    if a.mode == FLOAT:
        log = closed.log_array()
        idx = np.arange(n)
        log[idx, idx] = np.maximum(log[idx, idx], 0.0)
        return MaxMatrix(n, FLOAT, log=log)
    one = Fraction(1)
    rows = tuple(
        tuple(max(v, one) if i == j else v for j, v in enumerate(row))
        for i, row in enumerate(closed.exact_rows())
    )
    return MaxMatrix(n, EXACT, rows=rows)
