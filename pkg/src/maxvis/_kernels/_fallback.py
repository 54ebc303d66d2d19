"""Vectorized numpy implementations of the float-mode hot kernels.

All kernels work on log-domain float64 arrays where -inf encodes the
max-times zero.  Semantics must match ``_core.pyx`` exactly; the test
suite cross-checks the two backends on random inputs.
"""

import numpy as np

NEG_INF = float("-inf")


def maxplus_matmul(a, b):
    """(max, +) product of two (n, n) log-domain arrays."""
    n = a.shape[0]
    out = np.full((n, n), NEG_INF)
    for k in range(n):
        col = a[:, k]
        # -inf + -inf stays -inf; no +inf entries exist, so no nan risk.
        np.maximum(out, col[:, None] + b[k, None, :], out=out)
    return out


def fw_closure(d):
    """In-place Floyd-Warshall over (max, +); returns its argument.

    After the sweep d[i, j] is the best weight over i -> j paths with at
    least one edge.  Assumes no positive-mean cycle (caller checks
    lambda <= 1), so the simultaneous per-k update equals the sequential
    one.
    """
    n = d.shape[0]
    for k in range(n):
        np.maximum(d, d[:, k, None] + d[None, k, :], out=d)
    return d


def karp_lambda(a):
    """Maximum cycle mean (log domain) of a strongly connected digraph.

    ``a`` is the (m, m) log-weight array of one strongly connected
    component; returns -inf when m == 1 and there is no loop.
    """
    m = a.shape[0]
    if m == 1:
        return float(a[0, 0])
    table = np.full((m + 1, m), NEG_INF)
    table[0, 0] = 0.0
    for k in range(1, m + 1):
        table[k] = np.max(table[k - 1][:, None] + a, axis=0)
    last = table[m]
    best = NEG_INF
    for v in range(m):
        if last[v] == NEG_INF:
            continue
        worst = np.inf
        for k in range(m):
            if table[k, v] == NEG_INF:
                continue
            val = (last[v] - table[k, v]) / (m - k)
            if val < worst:
                worst = val
        if worst < np.inf and worst > best:
            best = worst
    return float(best)
