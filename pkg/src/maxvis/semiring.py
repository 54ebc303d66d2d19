"""Max-times matrix and vector arithmetic.

Scalars live in the nonnegative reals with a (+) b = max(a, b) and
a (x) b = a * b.  Two storage backends:

* ``exact`` -- entries are ``fractions.Fraction``; every comparison and
  product is exact.  This is the mode all correctness oracles run in.
* ``float`` -- entries are stored as natural logs in a float64 numpy
  array, with -inf playing the role of 0.  Products become sums, so long
  path products neither overflow nor underflow.  Equality is decided up
  to a relative tolerance ``tol`` applied to the log values.

Values are immutable by convention: no operation mutates its operands,
and instances may be shared freely across threads.
"""

import math
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, ModeMismatch, NegativeEntry

EXACT = "exact"
FLOAT = "float"

DEFAULT_TOL = 1e-9

NEG_INF = float("-inf")


def _fraction_log(f):
    """log of a nonnegative Fraction, robust to huge numerators."""
    if f < 0:
        raise NegativeEntry("negative value %s in max-times domain" % f)
    if f == 0:
        return NEG_INF
    return math.log(f.numerator) - math.log(f.denominator)


def to_fraction(value):
    """Coerce an exact-mode entry.  Floats are rejected on purpose: a
    binary float rarely means the decimal the author typed, so exact
    matrices accept int, Fraction and strings like '5/11' or '0.25'."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(
        "exact mode takes int, Fraction or numeric string entries, not %r; "
        "use mode='float' for float data" % (value,)
    )


def log_close(u, v, tol):
    """Equality of two log-domain values up to tol (both -inf counts)."""
    if u == NEG_INF or v == NEG_INF:
        return u == v
    return abs(u - v) <= tol


class MaxVector:
    """Dense nonnegative vector over the max-times semiring."""

    __slots__ = ("n", "mode", "_vals", "_log")

    def __init__(self, n, mode, vals=None, log=None):
        self.n = n
        self.mode = mode
        self._vals = vals
        self._log = log

    @classmethod
    def from_values(cls, values, mode=EXACT):
        values = list(values)
        n = len(values)
        if mode == EXACT:
            vals = tuple(to_fraction(v) for v in values)
            for v in vals:
                if v < 0:
                    raise NegativeEntry("negative entry %s" % v)
            return cls(n, EXACT, vals=vals)
        arr = np.asarray([float(v) for v in values], dtype=float)
        if np.any(arr < 0):
            raise NegativeEntry("negative entry in float vector")
        with np.errstate(divide="ignore"):
            return cls(n, FLOAT, log=np.log(arr))

    @classmethod
    def from_log(cls, log_values):
        arr = np.array(log_values, dtype=float)
        return cls(arr.shape[0], FLOAT, log=arr)

    def entry(self, i):
        """Linear-domain value of entry i (Fraction or float)."""
        if self.mode == EXACT:
            return self._vals[i]
        return math.exp(self._log[i]) if self._log[i] != NEG_INF else 0.0

    def to_values(self):
        return [self.entry(i) for i in range(self.n)]

    def log_array(self):
        if self.mode == FLOAT:
            return self._log.copy()
        return np.array([_fraction_log(v) for v in self._vals])

    def to_float(self):
        if self.mode == FLOAT:
            return self
        return MaxVector(self.n, FLOAT, log=self.log_array())

    def is_positive(self):
        if self.mode == EXACT:
            return all(v > 0 for v in self._vals)
        return bool(np.all(self._log > NEG_INF))

    def is_zero(self):
        if self.mode == EXACT:
            return all(v == 0 for v in self._vals)
        return bool(np.all(self._log == NEG_INF))

    def reciprocal(self):
        if self.mode == EXACT:
            if not self.is_positive():
                raise ZeroDivisionError("reciprocal of a vector with zero entries")
            return MaxVector(self.n, EXACT, vals=tuple(1 / v for v in self._vals))
        return MaxVector(self.n, FLOAT, log=-self._log)

    def max_norm_scaled(self):
        """Scale so the largest entry equals 1 (the max-norm of the paper's
        scaled extremals)."""
        if self.mode == EXACT:
            top = max(self._vals)
            if top == 0:
                raise ZeroDivisionError("cannot scale the zero vector")
            return MaxVector(self.n, EXACT, vals=tuple(v / top for v in self._vals))
        top = float(np.max(self._log))
        if top == NEG_INF:
            raise ZeroDivisionError("cannot scale the zero vector")
        return MaxVector(self.n, FLOAT, log=self._log - top)

    def __eq__(self, other):
        if not isinstance(other, MaxVector):
            return NotImplemented
        if self.n != other.n or self.mode != other.mode:
            return False
        if self.mode == EXACT:
            return self._vals == other._vals
        return bool(np.array_equal(self._log, other._log))

    def __hash__(self):
        if self.mode == EXACT:
            return hash((self.n, self._vals))
        return hash((self.n, self._log.tobytes()))

    def __repr__(self):
        return "MaxVector(%s, mode=%r)" % (self.to_values(), self.mode)


class MaxMatrix:
    """Dense square nonnegative matrix over the max-times semiring."""

    __slots__ = ("n", "mode", "_rows", "_log")

    def __init__(self, n, mode, rows=None, log=None):
        self.n = n
        self.mode = mode
        self._rows = rows
        self._log = log

    @classmethod
    def from_rows(cls, rows, mode=EXACT):
        rows = [list(r) for r in rows]
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch(
                    "expected a square matrix, got a row of length %d in an "
                    "%d-row matrix" % (len(r), n)
                )
        if mode == EXACT:
            data = tuple(tuple(to_fraction(v) for v in r) for r in rows)
            for r in data:
                for v in r:
                    if v < 0:
                        raise NegativeEntry("negative entry %s" % v)
            return cls(n, EXACT, rows=data)
        arr = np.asarray([[float(v) for v in r] for r in rows], dtype=float)
        if np.any(arr < 0):
            raise NegativeEntry("negative entry in float matrix")
        with np.errstate(divide="ignore"):
            return cls(n, FLOAT, log=np.log(arr))

    @classmethod
    def from_log(cls, log_array):
        arr = np.ascontiguousarray(log_array, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionMismatch("log array must be square")
        return cls(arr.shape[0], FLOAT, log=arr)

    @classmethod
    def identity(cls, n, mode=EXACT):
        if mode == EXACT:
            one, zero = Fraction(1), Fraction(0)
            return cls(n, EXACT, rows=tuple(
                tuple(one if i == j else zero for j in range(n)) for i in range(n)
            ))
        log = np.full((n, n), NEG_INF)
        np.fill_diagonal(log, 0.0)
        return cls(n, FLOAT, log=log)

    @classmethod
    def zeros(cls, n, mode=EXACT):
        if mode == EXACT:
            zero = Fraction(0)
            return cls(n, EXACT, rows=tuple(tuple(zero for _ in range(n)) for _ in range(n)))
        return cls(n, FLOAT, log=np.full((n, n), NEG_INF))

    @classmethod
    def ones(cls, n, mode=EXACT):
        """The all-ones matrix (every entry equal to the semiring unit)."""
        if mode == EXACT:
            one = Fraction(1)
            return cls(n, EXACT, rows=tuple(tuple(one for _ in range(n)) for _ in range(n)))
        return cls(n, FLOAT, log=np.zeros((n, n)))

    def entry(self, i, j):
        if self.mode == EXACT:
            return self._rows[i][j]
        v = self._log[i, j]
        return math.exp(v) if v != NEG_INF else 0.0

    def to_rows(self):
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def exact_rows(self):
        if self.mode != EXACT:
            raise ModeMismatch("exact_rows() on a float-mode matrix")
        return self._rows

    def log_array(self):
        """Log-domain copy (computed from the Fractions in exact mode)."""
        if self.mode == FLOAT:
            return self._log.copy()
        return np.array([[_fraction_log(v) for v in r] for r in self._rows])

    def to_float(self):
        if self.mode == FLOAT:
            return self
        return MaxMatrix(self.n, FLOAT, log=self.log_array())

    def column(self, j):
        if self.mode == EXACT:
            return MaxVector(self.n, EXACT, vals=tuple(r[j] for r in self._rows))
        return MaxVector(self.n, FLOAT, log=self._log[:, j].copy())

    def transpose(self):
        if self.mode == EXACT:
            return MaxMatrix(self.n, EXACT, rows=tuple(zip(*self._rows)))
        return MaxMatrix(self.n, FLOAT, log=np.ascontiguousarray(self._log.T))

    def positive_adjacency(self):
        """adjacency[i] = list of j with a_ij > 0 (the digraph of A)."""
        if self.mode == EXACT:
            return [[j for j, v in enumerate(r) if v > 0] for r in self._rows]
        return [list(np.nonzero(self._log[i] > NEG_INF)[0]) for i in range(self.n)]

    def __eq__(self, other):
        if not isinstance(other, MaxMatrix):
            return NotImplemented
        if self.n != other.n or self.mode != other.mode:
            return False
        if self.mode == EXACT:
            return self._rows == other._rows
        return bool(np.array_equal(self._log, other._log))

    def __hash__(self):
        if self.mode == EXACT:
            return hash((self.n, self._rows))
        return hash((self.n, self._log.tobytes()))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        if self.n > 8:
            return "MaxMatrix(n=%d, mode=%r)" % (self.n, self.mode)
        return "MaxMatrix(%s, mode=%r)" % (self.to_rows(), self.mode)


class ScalingVector:
    """Strictly positive vector x inducing the scaling X = diag(x).

    ``provenance`` records how the vector was produced: 'column-sum',
    'log-convex', 'perron' or 'user'.
    """

    PROVENANCES = ("column-sum", "log-convex", "perron", "user")

    __slots__ = ("vec", "provenance")

    def __init__(self, vec, provenance="user"):
        if provenance not in self.PROVENANCES:
            raise ValueError("unknown provenance %r" % provenance)
        if not isinstance(vec, MaxVector):
            vec = MaxVector.from_values(vec)
        if not vec.is_positive():
            raise ValueError("scaling vector must be strictly positive: diag(x) "
                             "is invertible only for positive x")
        self.vec = vec
        self.provenance = provenance

    @property
    def n(self):
        return self.vec.n

    @property
    def mode(self):
        return self.vec.mode

    def reciprocal(self):
        return ScalingVector(self.vec.reciprocal(), self.provenance)

    def to_float(self):
        return ScalingVector(self.vec.to_float(), self.provenance)

    def __eq__(self, other):
        if not isinstance(other, ScalingVector):
            return NotImplemented
        return self.vec == other.vec

    def __repr__(self):
        return "ScalingVector(%s, provenance=%r)" % (self.vec.to_values(), self.provenance)


def _check_pair(a, b):
    if a.n != b.n:
        raise DimensionMismatch("dimension mismatch: %d vs %d" % (a.n, b.n))
    if a.mode != b.mode:
        raise ModeMismatch("cannot mix %s and %s operands" % (a.mode, b.mode))


def mat_mul(a, b):
    """Max-times matrix product: c_ij = max_k a_ik * b_kj."""
    _check_pair(a, b)
    n = a.n
    if a.mode == FLOAT:
        from . import _kernels

        return MaxMatrix(n, FLOAT, log=_kernels.maxplus_matmul(
            np.ascontiguousarray(a._log), np.ascontiguousarray(b._log)))
    zero = Fraction(0)
    out = [[zero] * n for _ in range(n)]
    brows = b._rows
    for i in range(n):
        arow = a._rows[i]
        orow = out[i]
        for k in range(n):
            aik = arow[k]
            if aik == 0:
                continue
            brow = brows[k]
            for j in range(n):
                v = aik * brow[j]
                if v > orow[j]:
                    orow[j] = v
    return MaxMatrix(n, EXACT, rows=tuple(tuple(r) for r in out))


def mat_oplus(a, b):
    """Entrywise maximum of two matrices."""
    _check_pair(a, b)
    if a.mode == FLOAT:
        return MaxMatrix(a.n, FLOAT, log=np.maximum(a._log, b._log))
    return MaxMatrix(a.n, EXACT, rows=tuple(
        tuple(max(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a._rows, b._rows)
    ))


def mat_vec(a, x):
    """Max-times matrix-vector product."""
    _check_pair(a, x)
    if a.mode == FLOAT:
        with np.errstate(invalid="ignore"):
            s = a._log + x._log[None, :]
        s[np.isnan(s)] = NEG_INF  # -inf + inf cannot occur; belt and braces
        return MaxVector(a.n, FLOAT, log=np.max(s, axis=1))
    out = []
    for row in a._rows:
        best = Fraction(0)
        for aij, xj in zip(row, x._vals):
            if aij == 0 or xj == 0:
                continue
            v = aij * xj
            if v > best:
                best = v
        out.append(best)
    return MaxVector(a.n, EXACT, vals=tuple(out))


def vec_oplus(x, y):
    _check_pair(x, y)
    if x.mode == FLOAT:
        return MaxVector(x.n, FLOAT, log=np.maximum(x._log, y._log))
    return MaxVector(x.n, EXACT, vals=tuple(max(u, v) for u, v in zip(x._vals, y._vals)))


def vec_scale(c, x):
    """Scalar multiple c * x (c a nonnegative linear-domain scalar)."""
    if x.mode == FLOAT:
        c = float(c)
        if c < 0:
            raise NegativeEntry("negative scalar %r" % c)
        shift = math.log(c) if c > 0 else NEG_INF
        return MaxVector(x.n, FLOAT, log=x._log + shift)
    c = to_fraction(c)
    if c < 0:
        raise NegativeEntry("negative scalar %r" % c)
    return MaxVector(x.n, EXACT, vals=tuple(c * v for v in x._vals))


def scalar_mul(c, a):
    """Scalar multiple c * A of a matrix."""
    if a.mode == FLOAT:
        c = float(c)
        if c < 0:
            raise NegativeEntry("negative scalar %r" % c)
        shift = math.log(c) if c > 0 else NEG_INF
        return MaxMatrix(a.n, FLOAT, log=a._log + shift)
    c = to_fraction(c)
    if c < 0:
        raise NegativeEntry("negative scalar %r" % c)
    return MaxMatrix(a.n, EXACT, rows=tuple(tuple(c * v for v in r) for r in a._rows))


def diag_similarity(a, x):
    """Diagonal similarity scaling: b_ij = a_ij * x_j / x_i.

    ``x`` may be a ScalingVector or a strictly positive MaxVector.  The
    transform is involutive under x -> 1/x and preserves all cycle
    weights, hence the cycle geometric mean and the critical digraph.
    """
    if isinstance(x, ScalingVector):
        x = x.vec
    if not x.is_positive():
        raise ValueError("diagonal similarity needs a strictly positive vector")
    _check_pair(a, x)
    if a.mode == FLOAT:
        log = a._log + x._log[None, :] - x._log[:, None]
        return MaxMatrix(a.n, FLOAT, log=log)
    rows = tuple(
        tuple(aij * x._vals[j] / x._vals[i] for j, aij in enumerate(row))
        for i, row in enumerate(a._rows)
    )
    return MaxMatrix(a.n, EXACT, rows=rows)


def matrices_close(a, b, tol=DEFAULT_TOL):
    """Equality up to tol: exact equality in exact mode, log-domain
    closeness entry by entry in float mode."""
    if a.n != b.n:
        return False
    if a.mode == EXACT and b.mode == EXACT:
        return a._rows == b._rows
    la, lb = a.log_array(), b.log_array()
    if not np.array_equal(la == NEG_INF, lb == NEG_INF):
        return False
    sel = la != NEG_INF
    if not sel.any():
        return True
    return bool(np.all(np.abs(la[sel] - lb[sel]) <= tol))


def vectors_close(x, y, tol=DEFAULT_TOL):
    if x.n != y.n:
        return False
    if x.mode == EXACT and y.mode == EXACT:
        return x._vals == y._vals
    lx, ly = x.log_array(), y.log_array()
    if not np.array_equal(lx == NEG_INF, ly == NEG_INF):
        return False
    sel = lx != NEG_INF
    return bool(np.all(np.abs(lx[sel] - ly[sel]) <= tol))
