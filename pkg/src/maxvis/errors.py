"""Exception taxonomy.

Two families matter to callers: parse/usage problems (bad input files,
wrong numeric mode, oracle size limits) and domain errors, which are
mathematically meaningful rejections of a well-formed input.  The CLI
maps the former to exit code 1 and the latter to exit code 2.
"""


class MaxvisError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(MaxvisError, ValueError):
    """Operands have incompatible dimensions."""


class ModeMismatch(MaxvisError, ValueError):
    """Operands mix exact-rational and float-log storage."""


class ModeError(MaxvisError, ValueError):
    """Operation is not available in the matrix's numeric mode."""


class OracleLimitExceeded(MaxvisError, ValueError):
    """Input is larger than the configured brute-force oracle limit."""


class ParseError(MaxvisError, ValueError):
    """Malformed matrix or vector file."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = " (line %d%s)" % (line, ", column %d" % column if column is not None else "")
        super().__init__(message + loc)
        self.line = line
        self.column = column


class NegativeEntry(ParseError):
    """An entry is negative; the max-times domain is the nonnegative reals."""


class DomainError(MaxvisError):
    """A precondition with mathematical content is violated (CLI exit 2)."""


class ZeroLambda(DomainError):
    """The maximum cycle geometric mean is 0 (no positive cycle).

    Eigenvectors then degenerate to zero-support vectors and every scaling
    construction is undefined; callers are expected to treat this case
    separately.
    """


class IrrationalLambda(DomainError):
    """Exact mode cannot divide by an irrational cycle geometric mean.

    The maximum cycle geometric mean is a k-th root of a rational and need
    not be rational itself.  Exact-rational matrices cannot represent
    A / lambda(A) in that case; use float mode, or query the root form
    via ``max_cycle_root``.
    """


class LambdaExceedsOne(DomainError):
    """lambda(A) > 1: the series I (+) A (+) A^2 (+) ... diverges."""


class NotVisualized(DomainError):
    """Operation requires a visualized matrix (entries <= lambda with
    equality exactly on critical edges)."""


class NotDefinite(DomainError):
    """Operation requires a definite matrix (lambda(A) == 1)."""


class ReducibleMatrix(DomainError):
    """Operation requires an irreducible matrix (strongly connected
    digraph of positive entries)."""


class NoPositivePermutation(DomainError):
    """Every permutation of the matrix has weight 0; the max-product
    assignment problem is infeasible."""


class PowerIterationDivergence(DomainError):
    """Power iteration failed to converge within its iteration cap."""
