"""Max-product assignment and the scaling that visualizes every maximal
permutation.

The max-product assignment problem is solved by the Hungarian method on
the log-domain cost matrix (maximize the sum of logs); zero entries are
forbidden cells and feasibility is pre-checked by bipartite matching on
the positivity pattern.

Given a maximal permutation pi, dividing each row i by a_{i, pi(i)}
yields a strongly definite matrix whose critical edges are exactly the
edges lying on maximal permutations, so any strict visualizer of it
turns those entries into 1 and everything else into values < 1; a final
row permutation puts the ones back onto the original permutation
positions.  The composed transform is two-sided diagonal:
result = diag(left) . A . diag(right).
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._graph import max_bipartite_matching
from .errors import ModeError, NoPositivePermutation, OracleLimitExceeded
from .semiring import EXACT, FLOAT, NEG_INF, MaxMatrix, MaxVector, ScalingVector, diag_similarity
from .visualize import strict_visualizer

ASSIGN_ORACLE_LIMIT = 7


@dataclass(frozen=True)
class Permutation:
    """Assignment i -> mapping[i] with its max-product weight."""

    mapping: tuple
    weight: object  # Fraction (exact mode) or float

    def inverse(self):
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return tuple(inv)


def _positive_pattern(a):
    return a.positive_adjacency()


def _check_feasible(a):
    allowed = _positive_pattern(a)
    if max_bipartite_matching(a.n, allowed) != a.n:
        raise NoPositivePermutation(
            "every permutation has weight 0: the positive entries admit no "
            "perfect matching of rows to columns"
        )


def _weight(a, mapping):
    if a.mode == EXACT:
        rows = a.exact_rows()
        w = Fraction(1)
        for i, j in enumerate(mapping):
            w *= rows[i][j]
            if w == 0:
                return w
        return w
    log = a.log_array()
    s = 0.0
    for i, j in enumerate(mapping):
        s += log[i, j]
    return math.exp(s) if s != NEG_INF else 0.0


def _hungarian_min(cost):
    """Minimum-cost perfect assignment (potentials formulation, O(n^3)).

    ``cost`` is a list of rows of floats; +inf marks a forbidden cell.
    The caller guarantees a finite perfect assignment exists.  Rows are
    processed in order and ties fall to the lowest column index, so the
    selected assignment is deterministic.
    """
    n = len(cost)
    INF = float("inf")
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    match = [0] * (n + 1)  # match[j] = row occupying column j (1-based)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = INF
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    mapping = [0] * n
    for j in range(1, n + 1):
        if match[j] > 0:
            mapping[match[j] - 1] = j - 1
    return mapping


def maximal_permutation(a):
    """A permutation of maximal product weight (the max-product
    assignment problem), chosen deterministically among ties."""
    _check_feasible(a)
    log = a.log_array()
    cost = [[-log[i, j] if log[i, j] != NEG_INF else float("inf")
             for j in range(a.n)] for i in range(a.n)]
    mapping = tuple(_hungarian_min(cost))
    return Permutation(mapping=mapping, weight=_weight(a, mapping))


def brute_force_assignment(a, limit=ASSIGN_ORACLE_LIMIT):
    """Oracle twin of ``maximal_permutation``: enumerate all n!
    permutations (exact weights in exact mode)."""
    if a.n > limit:
        raise OracleLimitExceeded("oracle limit is n <= %d, got n = %d" % (limit, a.n))
    best = None
    best_w = None
    for perm in itertools.permutations(range(a.n)):
        w = _weight(a, perm)
        if best_w is None or w > best_w:
            best, best_w = perm, w
    if best_w == 0:
        raise NoPositivePermutation("every permutation has weight 0")
    return Permutation(mapping=tuple(best), weight=best_w)


def all_maximal_permutations(a, limit=ASSIGN_ORACLE_LIMIT):
    """Oracle: every permutation attaining the maximal weight (exact mode,
    since tie detection needs exact weight equality)."""
    if a.mode != EXACT:
        raise ModeError("enumerating weight ties needs exact arithmetic")
    if a.n > limit:
        raise OracleLimitExceeded("oracle limit is n <= %d, got n = %d" % (limit, a.n))
    best_w = brute_force_assignment(a, limit).weight
    out = []
    for perm in itertools.permutations(range(a.n)):
        if _weight(a, perm) == best_w:
            out.append(tuple(perm))
    return out


@dataclass(frozen=True)
class AssignmentVisualization:
    """Fully scaled matrix with 1 exactly on maximal-permutation entries.

    result = diag(left_diagonal) . A . diag(right_diagonal), with
    left_diagonal_i = 1 / (x_{pi(i)} * a_{i, pi(i)}) and right_diagonal
    = x, the column-sum strict visualizer of the strongly definite form.
    """

    result: MaxMatrix
    pi: Permutation
    x: ScalingVector
    strongly_definite_form: MaxMatrix
    left_diagonal: MaxVector

    @property
    def right_diagonal(self):
        return self.x.vec


def visualize_assignment(a):
    """Scale A so entries on maximal permutations become exactly 1 and
    all other entries drop strictly below 1."""
    pi = maximal_permutation(a)
    inv = pi.inverse()
    n = a.n
    if a.mode == EXACT:
        rows = a.exact_rows()
        b_rows = tuple(
            tuple(rows[inv[j]][k] / rows[inv[j]][j] for k in range(n))
            for j in range(n)
        )
        b = MaxMatrix(n, EXACT, rows=b_rows)
        x = strict_visualizer(b, "column_sum")
        scaled = diag_similarity(b, x)
        srows = scaled.exact_rows()
        result = MaxMatrix(n, EXACT, rows=tuple(srows[pi.mapping[i]] for i in range(n)))
        xv = x.vec
        left = MaxVector(n, EXACT, vals=tuple(
            1 / (xv._vals[pi.mapping[i]] * rows[i][pi.mapping[i]]) for i in range(n)
        ))
    else:
        log = a.log_array()
        b_log = np.array([
            [log[inv[j], k] - log[inv[j], j] for k in range(n)] for j in range(n)
        ])
        b = MaxMatrix(n, FLOAT, log=b_log)
        x = strict_visualizer(b, "column_sum")
        scaled = diag_similarity(b, x)
        slog = scaled.log_array()
        result = MaxMatrix(n, FLOAT, log=np.array(
            [slog[pi.mapping[i]] for i in range(n)]
        ))
        xl = x.vec.log_array()
        left = MaxVector(n, FLOAT, log=np.array([
            -(xl[pi.mapping[i]] + log[i, pi.mapping[i]]) for i in range(n)
        ]))
    return AssignmentVisualization(
        result=result,
        pi=pi,
        x=x,
        strongly_definite_form=b,
        left_diagonal=left,
    )
