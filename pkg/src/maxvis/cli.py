"""Command-line interface.

Every subcommand reads a matrix file (or '-' for stdin), runs one
pipeline stage and prints a single JSON report to stdout; diagnostics go
to stderr.  Exit codes: 0 success, 1 parse/usage error, 2 domain error
(divergent star, zero cycle mean, infeasible assignment, ...).

Scalars are reported in the display domain of the input file: linear
values for 'times' files, log values for 'plus' files.
"""

import argparse
import json
import math
import sys
import time
from fractions import Fraction

from . import cones, io, kleene, spectral, visualize
from .assignment import brute_force_assignment, visualize_assignment
from .errors import DomainError, MaxvisError, ModeError, OracleLimitExceeded, ParseError
from .semiring import DEFAULT_TOL, EXACT, FLOAT, diag_similarity


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    parser = _Parser(prog="maxvis", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--mode", choices=[EXACT, FLOAT], default=None,
                        help="numeric mode; default: exact for times-domain "
                             "files, float for plus-domain files")
    parser.add_argument("--tolerance", type=float, default=DEFAULT_TOL,
                        help="relative tolerance for float-mode comparisons "
                             "(applied to log values)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed recorded in the report (reports are "
                             "deterministic given file, flags and seed)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("matrix", help="matrix file, or - for stdin")
        return p

    add("lambda", "maximum cycle geometric mean")
    add("star", "Kleene star (requires lambda <= 1)")
    add("critical", "critical digraph, components and representatives")
    p = add("basis", "scaled basis of the eigencone or subeigencone")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--eigen", action="store_true", help="eigencone basis")
    group.add_argument("--subeigen", action="store_true",
                       help="subeigencone basis (default)")
    add("dims", "max-algebraic and linear-algebraic dimensions")
    add("rank", "conventional rank over the rationals (exact mode only)")
    add("check", "classify visualization status")
    p = add("visualize", "compute a strict visualization scaling")
    p.add_argument("--method", choices=["sum", "logconvex", "perron"],
                   default="sum")
    p.add_argument("--weights", default=None,
                   help="comma-separated positive weights summing to 1 "
                        "(logconvex only; default uniform)")
    p = add("preserve", "classify a scaling of a visualized definite matrix")
    p.add_argument("--scaling", required=True,
                   help="vector file with the positive scaling x")
    add("quotient", "component-maxima matrix of a visualized definite matrix")
    add("assign", "maximal permutation and two-sided assignment visualization")
    p = sub.add_parser("oracle", help="run a brute-force oracle stage")
    p.add_argument("stage", choices=["lambda", "star", "assign", "critical"])
    p.add_argument("matrix", help="matrix file, or - for stdin")
    p.add_argument("--limit", type=int, default=None,
                   help="override the oracle size limit")
    return parser


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError("cannot read %r: %s" % (path, exc)) from None


def _lambda_fields(a, domain, tol):
    """lambda in the display domain, with the exact root form when the
    value is irrational."""
    if a.mode == EXACT:
        root = spectral.max_cycle_root(a)
        lam = root.as_fraction()
        fields = {"lambda": io.json_scalar(lam) if lam is not None else None}
        if lam is None:
            fields["lambda_root"] = {"weight": str(root.weight), "length": root.length}
            fields["lambda_approx"] = root.approx()
        return fields
    lg = spectral.lambda_log(a, tol)
    if domain == "plus":
        return {"lambda": io.json_scalar(lg)}
    return {"lambda": math.exp(lg) if lg != float("-inf") else 0.0}


def _scalar(v, domain):
    if domain == "plus" and not isinstance(v, Fraction) and v is not None:
        return io.json_scalar(math.log(v) if v > 0 else float("-inf"))
    return io.json_scalar(v)


def _run(args):
    text = _read_text(args.matrix)
    domain = io.read_domain(text)
    a = io.parse_matrix(text, mode=args.mode)
    tol = args.tolerance
    payload = {}
    started = time.perf_counter()

    if args.command == "lambda":
        payload.update(_lambda_fields(a, domain, tol))
    elif args.command == "star":
        star = kleene.kleene_star(a, tol=tol)
        payload["star"] = io.json_matrix(star.star, domain)
        payload.update(_lambda_fields(a, domain, tol))
        payload["is_kleene_star_input"] = kleene.is_kleene_star(a, tol)
    elif args.command == "critical":
        data = spectral.critical_structure(a, tol)
        payload["lambda"] = _scalar(data.lam, domain)
        payload["critical_nodes"] = sorted(data.critical_nodes)
        payload["critical_edges"] = sorted([i, j] for i, j in data.critical_edges)
        payload["components"] = [list(c) for c in data.components]
        payload["representatives"] = list(data.representatives)
        payload["non_critical"] = sorted(data.non_critical)
    elif args.command == "basis":
        basis = cones.eigencone_basis(a, tol) if args.eigen else cones.subeigencone_basis(a, tol)
        payload["kind"] = basis.kind
        payload["generators"] = [io.json_vector(g, domain) for g in basis.generators]
        payload["source_columns"] = list(basis.source_columns)
    elif args.command == "dims":
        report = cones.dimensions(a, tol)
        payload["maxdim_eigencone"] = report.maxdim_eigencone
        payload["maxdim_subeigencone"] = report.maxdim_subeigencone
        payload["linear_hull_dim"] = report.linear_hull_dim
        payload["linear_rank_star"] = report.linear_rank_star
    elif args.command == "rank":
        payload["rank"] = cones.linear_rank(a)
    elif args.command == "check":
        report = visualize.check_visualization(a, tol)
        payload["status"] = report.status
        payload["witnesses"] = [[i, j, _scalar(v, domain)] for i, j, v in report.witnesses]
        payload["margin"] = _scalar(report.margin, domain) if report.margin is not None else None
        payload["lambda"] = _scalar(report.lam, domain)
    elif args.command == "visualize":
        method = {"sum": "column_sum", "logconvex": "log_convex",
                  "perron": "perron"}[args.method]
        weights = None
        if args.weights is not None:
            weights = [float(Fraction(w)) for w in args.weights.split(",")]
        x = visualize.strict_visualizer(a, method, weights=weights, tol=tol)
        scaled_input = a.to_float() if x.mode == FLOAT and a.mode == EXACT else a
        scaled = diag_similarity(scaled_input, x)
        payload["method"] = args.method
        payload["scaling"] = io.json_vector(x.vec, domain)
        payload["provenance"] = x.provenance
        payload["scaled"] = io.json_matrix(scaled, domain)
        payload["scaled_status"] = visualize.check_visualization(scaled, tol).status
    elif args.command == "preserve":
        xtext = _read_text(args.scaling)
        x = io.parse_vector(xtext, mode=args.mode)
        if x.mode != a.mode:
            if a.mode == FLOAT:
                x = x.to_float()
            else:
                a = a.to_float()
        classification = visualize.preserving_scaling_check(a, x, tol)
        scaled = diag_similarity(a, x)
        q = visualize.quotient_matrix(a, tol)
        payload["classification"] = classification
        payload["m"] = q.m
        payload["alpha"] = io.json_matrix(q.alpha, domain)
        payload["scaled_status"] = visualize.check_visualization(scaled, tol).status
    elif args.command == "quotient":
        q = visualize.quotient_matrix(a, tol)
        payload["m"] = q.m
        payload["alpha"] = io.json_matrix(q.alpha, domain)
        payload["node_to_component"] = list(q.node_to_component)
        payload["component_nodes"] = [list(c) for c in q.component_nodes]
    elif args.command == "assign":
        av = visualize_assignment(a)
        payload["permutation"] = list(av.pi.mapping)
        payload["weight"] = _scalar(av.pi.weight, domain)
        payload["result"] = io.json_matrix(av.result, domain)
        payload["scaling"] = io.json_vector(av.x.vec, domain)
        payload["strongly_definite_form"] = io.json_matrix(av.strongly_definite_form, domain)
        payload["left_diagonal"] = io.json_vector(av.left_diagonal, domain)
    elif args.command == "oracle":
        limit = args.limit
        payload["stage"] = args.stage
        if args.stage == "lambda":
            kwargs = {"limit": limit} if limit else {}
            if a.mode == EXACT:
                root = spectral.brute_force_lambda_root(a, **kwargs)
                lam = root.as_fraction()
                payload["lambda"] = io.json_scalar(lam) if lam is not None else None
                if lam is None:
                    payload["lambda_root"] = {"weight": str(root.weight),
                                              "length": root.length}
                    payload["lambda_approx"] = root.approx()
            else:
                lam = spectral.brute_force_lambda(a, **kwargs)
                payload["lambda"] = _scalar(lam, domain)
        elif args.stage == "star":
            kwargs = {"limit": limit} if limit else {}
            series = kleene.kleene_series_oracle(a, tol=tol, **kwargs)
            payload["star"] = io.json_matrix(series, domain)
        elif args.stage == "assign":
            kwargs = {"limit": limit} if limit else {}
            perm = brute_force_assignment(a, **kwargs)
            payload["permutation"] = list(perm.mapping)
            payload["weight"] = _scalar(perm.weight, domain)
        elif args.stage == "critical":
            kwargs = {"limit": limit} if limit else {}
            edges = spectral.critical_edges_oracle(a, **kwargs)
            payload["critical_edges"] = sorted([i, j] for i, j in edges)

    elapsed = time.perf_counter() - started
    report = {
        "command": args.command,
        "mode": a.mode,
        "domain": domain,
        "n": a.n,
        "elapsed_s": elapsed,
        "tolerance": tol,
        "seed": args.seed,
    }
    report.update(payload)
    io.validate_report(report)
    return report


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 1
    try:
        report = _run(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 1
    except (ParseError, ModeError, OracleLimitExceeded) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 1
    except DomainError as exc:
        print("domain error: %s" % exc, file=sys.stderr)
        return 2
    except MaxvisError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
