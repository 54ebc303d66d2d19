"""Seeded random generators shared across the test suite.

Exact-mode suites need matrices whose cycle geometric mean is rational
(otherwise A/lambda is not representable in rational arithmetic), so the
main generator *plants* lambda: entries are capped at a chosen rational
lam, one cycle is pinned to weight lam**k exactly, and a random diagonal
similarity then hides the construction without moving lambda or the
critical digraph.
"""

from fractions import Fraction

from maxvis import MaxMatrix, MaxVector, ScalingVector, diag_similarity
from maxvis._closure import star_closure
from maxvis.semiring import FLOAT
from maxvis.spectral import critical_structure, definite_form
from maxvis.visualize import strict_visualizer


def rand_fraction(rng, max_num=6, max_den=6):
    """Strictly positive rational with small numerator/denominator."""
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def rand_entry(rng, zero_p=0.3, max_num=6, max_den=6):
    if rng.random() < zero_p:
        return Fraction(0)
    return rand_fraction(rng, max_num, max_den)


def rand_matrix(rng, n, zero_p=0.3):
    """Unconstrained random rational matrix; lambda may be irrational."""
    return MaxMatrix.from_rows(
        [[rand_entry(rng, zero_p) for _ in range(n)] for _ in range(n)]
    )


def rand_unit_entry(rng, zero_p):
    """Rational in [0, 1] (0 with probability ~zero_p)."""
    if rng.random() < zero_p:
        return Fraction(0)
    den = rng.randint(1, 6)
    return Fraction(rng.randint(1, den), den)


def planted_matrix(rng, n, zero_p=0.35, lam=None, cycle_len=None, scale=True):
    """Random matrix with lambda(A) exactly equal to a chosen rational.

    Entries are lam * (rational in [0,1]) so no cycle mean exceeds lam,
    and a planted cycle of all-lam edges attains it.  A random diagonal
    similarity afterwards makes the entries generic while preserving
    lambda and the critical digraph.
    """
    if lam is None:
        lam = rand_fraction(rng)
    rows = [[lam * rand_unit_entry(rng, zero_p) for _ in range(n)] for _ in range(n)]
    if cycle_len is None:
        cycle_len = rng.randint(1, min(3, n))
    cycle_len = min(cycle_len, n)
    nodes = rng.sample(range(n), cycle_len)
    for idx, v in enumerate(nodes):
        rows[v][nodes[(idx + 1) % cycle_len]] = lam
    a = MaxMatrix.from_rows(rows)
    if scale:
        x = MaxVector.from_values([rand_fraction(rng) for _ in range(n)])
        a = diag_similarity(a, x)
    return a


def planted_definite(rng, n, **kw):
    return definite_form(planted_matrix(rng, n, **kw))


def strongly_definite_matrix(rng, n, zero_p=0.3):
    """Unit diagonal, entries <= 1, lambda == 1.  The weight-1 loops make
    every node critical."""
    rows = [[rand_unit_entry(rng, zero_p) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(1)
    return MaxMatrix.from_rows(rows)


def strictly_visualized_matrix(rng, n, **kw):
    """Random definite strictly visualized matrix (via the column-sum
    strict visualizer)."""
    b = planted_definite(rng, n, **kw)
    x = strict_visualizer(b, "column_sum")
    return diag_similarity(b, x)


def make_merely_visualized(rng, v):
    """Raise one cross-component entry of a strictly visualized definite
    matrix to exactly 1, producing a visualized-but-not-strict matrix
    with the same lambda, critical digraph and components.  Returns None
    when the closure digraph has a single component (no cross pair
    exists)."""
    data = critical_structure(v)
    comps = data.components
    if len(comps) < 2:
        return None
    comp_of = {}
    for idx, comp in enumerate(comps):
        for node in comp:
            comp_of[node] = idx
    pairs = [(i, j) for i in range(v.n) for j in range(v.n)
             if comp_of[i] != comp_of[j]]
    i, j = pairs[rng.randrange(len(pairs))]
    rows = [list(r) for r in v.exact_rows()]
    rows[i][j] = Fraction(1)
    return MaxMatrix.from_rows(rows)


def rand_positive_vector(rng, n, max_num=6, max_den=6):
    return MaxVector.from_values([rand_fraction(rng, max_num, max_den) for _ in range(n)])


def rand_scaling(rng, n):
    return ScalingVector(rand_positive_vector(rng, n))


def rand_float_matrix(np_rng, n, zero_p=0.3, low=0.05, high=10.0):
    lin = np_rng.uniform(low, high, size=(n, n))
    mask = np_rng.random((n, n)) < zero_p
    lin[mask] = 0.0
    return MaxMatrix.from_rows(lin.tolist(), mode=FLOAT)


def subeigencone_sample(rng, basis):
    """Random max combination of basis generators (a point of V*)."""
    from maxvis.cones import max_combination

    coeffs = [rand_fraction(rng) for _ in basis.generators]
    return max_combination(basis.generators, coeffs)


def interior_quotient_vector(rng, alpha):
    """Random point of int(V*(alpha)) for a component-maxima matrix:
    a positive conventional combination of the columns of alpha*."""
    star = star_closure(alpha).exact_rows()
    m = alpha.n
    coeffs = [rand_fraction(rng) for _ in range(m)]
    vals = [sum((coeffs[j] * star[i][j] for j in range(m)), Fraction(0))
            for i in range(m)]
    return vals
