"""Matrix/vector file parsing and report serialization.

File grammar (whitespace separated)::

    domain: times          # optional first line; 'times' (default) or 'plus'
    3                      # dimension n
    1   2    1/8           # n rows of n entries
    0.5 1    0
    0   7/11 1

'times' entries are nonnegative decimals or rationals 'p/q' and parse to
exact rationals unless float mode is forced.  'plus' entries are already
log-domain reals ('-inf' allowed for the zero) and always parse to float
mode.  Vector files use the same grammar with a single row.

Reports are JSON documents; exact values serialize as 'p/q' strings,
floats as full-precision JSON numbers ('-inf' becomes the string
"-inf" since JSON has no infinities).
"""

import json
import math
from fractions import Fraction
from importlib import resources

from .errors import ModeError, NegativeEntry, ParseError
from .semiring import EXACT, FLOAT, NEG_INF, MaxMatrix, MaxVector

import numpy as np


def _split_header(text):
    """-> (domain, n, token stream with positions, header line count)."""
    lines = text.splitlines()
    domain = "times"
    start = 0
    # skip blank/comment lines before the header
    while start < len(lines) and (not lines[start].strip() or lines[start].lstrip().startswith("#")):
        start += 1
    if start < len(lines) and lines[start].strip().lower().startswith("domain:"):
        value = lines[start].split(":", 1)[1].strip().lower()
        if value not in ("times", "plus"):
            raise ParseError("domain must be 'times' or 'plus', got %r" % value,
                             line=start + 1)
        domain = value
        start += 1
    while start < len(lines) and (not lines[start].strip() or lines[start].lstrip().startswith("#")):
        start += 1
    if start >= len(lines):
        raise ParseError("missing dimension header")
    header = lines[start].strip()
    try:
        n = int(header)
    except ValueError:
        raise ParseError("dimension header must be an integer, got %r" % header,
                         line=start + 1) from None
    if n <= 0:
        raise ParseError("dimension must be positive, got %d" % n, line=start + 1)
    tokens = []
    for lineno in range(start + 1, len(lines)):
        raw = lines[lineno]
        if raw.lstrip().startswith("#"):
            continue
        col = 0
        for tok in raw.split():
            col += 1
            tokens.append((tok, lineno + 1, col))
    return domain, n, tokens


def _parse_times_exact(tok, line, col):
    try:
        v = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad entry %r" % tok, line=line, column=col) from None
    if v < 0:
        raise NegativeEntry("negative entry %s: the max-times domain is the "
                            "nonnegative reals" % tok, line=line, column=col)
    return v


def _parse_times_float(tok, line, col):
    try:
        v = float(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad entry %r" % tok, line=line, column=col) from None
    if v < 0:
        raise NegativeEntry("negative entry %s" % tok, line=line, column=col)
    return math.log(v) if v > 0 else NEG_INF


def _parse_plus(tok, line, col):
    low = tok.lower()
    if low in ("-inf", "-infinity"):
        return NEG_INF
    try:
        v = float(tok)
    except ValueError:
        raise ParseError("bad entry %r" % tok, line=line, column=col) from None
    if math.isnan(v) or math.isinf(v):
        raise ParseError("plus-domain entries must be finite or -inf, got %r" % tok,
                         line=line, column=col)
    return v


def _entries(text, expected, mode):
    domain, n, tokens = _split_header(text)
    if domain == "plus" and mode == EXACT:
        raise ModeError("plus-domain files store log values and cannot be "
                        "read in exact mode")
    if mode is None:
        mode = FLOAT if domain == "plus" else EXACT
    want = expected(n)
    if len(tokens) != want:
        raise ParseError("expected %d entries for n = %d, found %d"
                         % (want, n, len(tokens)))
    if domain == "plus":
        parse = _parse_plus
        out_mode = FLOAT
    elif mode == FLOAT:
        parse = _parse_times_float
        out_mode = FLOAT
    else:
        parse = _parse_times_exact
        out_mode = EXACT
    values = [parse(tok, line, col) for tok, line, col in tokens]
    return domain, n, out_mode, values


def read_domain(text):
    """Domain declared by a file ('times' when absent)."""
    return _split_header(text)[0]


def parse_matrix(text, mode=None):
    """Parse a matrix file.  ``mode`` forces 'exact' or 'float'; by
    default times-domain files parse exactly and plus-domain files parse
    to float mode."""
    domain, n, out_mode, values = _entries(text, lambda n: n * n, mode)
    if out_mode == EXACT:
        rows = [values[i * n:(i + 1) * n] for i in range(n)]
        return MaxMatrix(n, EXACT, rows=tuple(tuple(r) for r in rows))
    arr = np.array(values, dtype=float).reshape(n, n)
    return MaxMatrix(n, FLOAT, log=arr)


def parse_vector(text, mode=None):
    """Parse a vector file (same grammar, one logical row of n entries)."""
    domain, n, out_mode, values = _entries(text, lambda n: n, mode)
    if out_mode == EXACT:
        return MaxVector(n, EXACT, vals=tuple(values))
    return MaxVector(n, FLOAT, log=np.array(values, dtype=float))


def serialize_matrix(a, domain="times"):
    """Render a matrix back to the file grammar.  Exact matrices round
    trip bit-exactly through 'times'; float matrices round trip through
    'plus' (the stored log values are emitted verbatim)."""
    if domain not in ("times", "plus"):
        raise ValueError("domain must be 'times' or 'plus'")
    lines = ["domain: %s" % domain, str(a.n)]
    if domain == "plus":
        if a.mode == EXACT:
            raise ModeError("exact matrices serialize in the times domain")
        log = a.log_array()
        for i in range(a.n):
            lines.append(" ".join(
                "-inf" if v == NEG_INF else repr(float(v)) for v in log[i]
            ))
        return "\n".join(lines) + "\n"
    for i in range(a.n):
        lines.append(" ".join(format_scalar(a.entry(i, j)) for j in range(a.n)))
    return "\n".join(lines) + "\n"


def format_scalar(v):
    """Text form of a linear-domain scalar ('p/q' or full-precision float)."""
    if isinstance(v, Fraction):
        return str(v)
    return repr(float(v))


def json_scalar(v):
    """JSON form of a scalar: 'p/q' string when exact, number when float
    (with the string '-inf' standing in for log-domain minus infinity)."""
    if isinstance(v, Fraction):
        return str(v)
    if v is None:
        return None
    f = float(v)
    if f == NEG_INF:
        return "-inf"
    return f


def json_matrix(a, domain="times"):
    """Nested-list JSON form of a matrix in the requested display domain."""
    if domain == "plus":
        log = a.log_array()
        return [[json_scalar(v) for v in row] for row in log]
    return [[json_scalar(a.entry(i, j)) for j in range(a.n)] for i in range(a.n)]


def json_vector(x, domain="times"):
    if domain == "plus":
        return [json_scalar(v) for v in x.log_array()]
    return [json_scalar(x.entry(i)) for i in range(x.n)]


def load_report_schema():
    with resources.files("maxvis").joinpath("report_schema.json").open() as fh:
        return json.load(fh)


def validate_report(report):
    """Check a report against the published schema.  Raises ValueError
    with the first violation; returns the report when valid."""
    schema = load_report_schema()
    if not isinstance(report, dict):
        raise ValueError("report must be a JSON object")
    for field in schema["required"]:
        if field not in report:
            raise ValueError("report is missing required field %r" % field)
    types = {"string": str, "integer": int, "number": (int, float)}
    for field, spec in schema["properties"].items():
        if field not in report:
            continue
        expected = spec.get("type")
        if expected in types and not isinstance(report[field], types[expected]):
            raise ValueError("field %r must be a %s" % (field, expected))
        if "enum" in spec and report[field] not in spec["enum"]:
            raise ValueError("field %r must be one of %s" % (field, spec["enum"]))
    command = report["command"]
    per_command = schema["per_command_required"]
    if command not in per_command:
        raise ValueError("unknown command %r" % command)
    required = list(per_command[command])
    if command == "oracle":
        stage = report.get("stage")
        stage_req = schema["oracle_stage_required"]
        if stage not in stage_req:
            raise ValueError("unknown oracle stage %r" % stage)
        required += stage_req[stage]
    for field in required:
        if field not in report:
            raise ValueError("report for %r is missing field %r" % (command, field))
    return report
