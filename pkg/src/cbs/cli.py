"""``cbs`` command line: sequences, polynomial tables, verification, numerics.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or a
parameter outside a closed form's domain, 3 an enumeration guard tripped.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import eulerian as eu
from . import lehmer as lh
from . import polybernoulli as pb
from . import verify as vf
from .exact import BiPoly, DomainError, EnumerationLimitError, Poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def rat_str(q: Fraction) -> str:
    """Exact text form: "p/q", or just "p" for integers."""
    return str(Fraction(q))


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _parse_bounds(text: str) -> tuple:
    if not text.strip():
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bounds must be comma-separated integers: {text!r}")


def _emit(fmt: str, kind: str, index, fields: list, out) -> None:
    """Write one record; ``fields`` is a list of (name, text) pairs."""
    if fmt == "json":
        rec = {"kind": kind, "index": index}
        rec.update(fields)
        out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        out.write(",".join([str(index)] + [_csv_cell(v) for _, v in fields]) + "\n")
    else:
        # plain keeps only the data columns
        cells = [_plain_cell(v) for k, v in fields if k != "family"]
        out.write(" ".join([str(index)] + cells) + "\n")


def _csv_cell(v) -> str:
    if isinstance(v, list):
        return '"' + "[" + ",".join(map(str, v)) + "]" + '"'
    return str(v)


def _plain_cell(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(map(str, v)) + "]"
    return str(v)


# ---------------------------------------------------------------------------
# seq
# ---------------------------------------------------------------------------


def cmd_seq(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    n_max = args.max_n
    if args.name == "b":
        for n in range(n_max + 1):
            _emit(args.format, "sequence", n, [("value", rat_str(pb.b_rec(n)))], out)
    elif args.name == "a":
        for n in range(n_max + 1):
            _emit(args.format, "sequence", n, [("value", rat_str(lh.a_seq(n)))], out)
    elif args.name == "polybernoulli":
        # B_n^(-k) along antidiagonals n + k = d
        for d in range(n_max + 1):
            for k in range(d + 1):
                fields = [("k", str(-k)), ("value", rat_str(pb.poly_bernoulli(d - k, -k)))]
                _emit(args.format, "sequence", d - k, fields, out)
    elif args.name == "zeta":
        for k in range(n_max + 1):
            z = lh.zeta_cb_neg(k)
            fields = [("rational_part", rat_str(z.rational_part)), ("pi_sqrt3_part", rat_str(z.pi_sqrt3_part))]
            _emit(args.format, "zeta", k, fields, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# poly
# ---------------------------------------------------------------------------


def _emit_poly(fmt, family, index, poly: Poly, out) -> None:
    _emit(fmt, "polynomial", index, [("family", family), ("coeffs", [rat_str(c) for c in poly.coeffs])], out)


def _emit_bipoly(fmt, index, bp: BiPoly, out) -> None:
    # one record per monomial x^i y^j, ordered by (i, j)
    for (i, j), c in sorted(bp.terms().items()):
        fields = [("family", "F"), ("x_exp", i), ("y_exp", j), ("coeff", rat_str(c))]
        _emit(fmt, "polynomial", index, fields, out)


def cmd_poly(args, out) -> int:
    fam = args.family
    if fam == "sEulerian":
        if args.bounds is None:
            raise UsageError("sEulerian needs --bounds")
        poly = eu.s_eulerian(args.bounds, cap=args.seq_cap)
        _emit_poly(args.format, fam, len(args.bounds), poly, out)
        return EXIT_OK
    if args.n is None:
        raise UsageError(f"family {fam} needs an index n")
    n = args.n
    if fam in ("p", "q"):
        if n < -1:
            raise UsageError("p and q are defined for n >= -1")
        pair = lh.pq_polys(n)
        _emit_poly(args.format, fam, n, pair.p if fam == "p" else pair.q, out)
    elif fam == "F":
        if n < 0:
            raise UsageError("F is defined for n >= 0")
        bp = eu.f_bipoly_brute(n, cap=args.perm_cap) if args.brute else eu.f_bipoly(n)
        if args.y is not None:
            _emit_poly(args.format, fam, n, bp.subs_y(args.y), out)
        else:
            _emit_bipoly(args.format, n, bp, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    try:
        results = vf.run_suite(args.suite, args.max_n, seed=args.seed, tolerance=args.tolerance)
    except vf.UnknownSuiteError as e:
        raise UsageError(str(e.args[0]))
    if not args.timings:
        for r in results:
            r.elapsed_ms = 0
    out.write(vf.serialize(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"target {args.target} needs {', '.join(missing)}")


def cmd_eval(args, out) -> int:
    target = args.target
    if args.terms is not None and args.terms < 1:
        raise UsageError("--terms must be >= 1")
    if target == "lehmer":
        _need(args, "k", "x")
        terms = args.terms or 60
        closed = lh.closed_form_rhs(args.k, args.x)
        series = lh.series_partial_sum(args.k, args.x, terms)
    elif target == "P":
        _need(args, "x", "t")
        terms = args.terms or 25
        closed = lh.p_egf_closed(args.x, args.t)
        series = lh.p_egf_truncated(args.x, args.t, terms)
    elif target == "Q":
        _need(args, "x", "t")
        terms = args.terms or 25
        closed = lh.q_egf_closed(args.x, args.t)
        series = lh.q_egf_truncated(args.x, args.t, terms)
    elif target == "aegf":
        _need(args, "t")
        terms = args.terms or 25
        closed = lh.a_egf_closed(args.t)
        series = lh.a_egf_truncated(args.t, terms)
    else:  # dirichlet
        _need(args, "k")
        if args.k < 0:
            raise DomainError("dirichlet needs k >= 0")
        terms = args.terms or 60
        closed = float(lh.zeta_cb_neg(args.k))
        series = lh.dirichlet_partial_sum(args.k, terms)
    fields = [("closed_form", repr(closed)), ("series", repr(series)), ("abs_diff", repr(abs(closed - series)))]
    index = args.k if args.k is not None else 0
    if args.format == "plain":
        out.write(" ".join(f"{k}={v}" for k, v in fields) + "\n")
    else:
        _emit(args.format, "numeric", index, [("target", target), ("terms", terms)] + fields, out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbs", description="Central binomial series, Eulerian and poly-Bernoulli identities."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("seq", parents=[fmt], help="print an exact sequence")
    p.add_argument("name", choices=("b", "a", "polybernoulli", "zeta"))
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("poly", parents=[fmt], help="print a polynomial")
    p.add_argument("family", choices=("p", "q", "F", "sEulerian"))
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--y", type=_parse_rational, help='substitute y = "p/q" into F')
    p.add_argument("--bounds", type=_parse_bounds, help="comma-separated s_1,...,s_n for sEulerian")
    p.add_argument("--brute", action="store_true", help="compute F by enumerating S_n")
    p.add_argument("--perm-cap", type=int, default=eu.DEFAULT_PERM_CAP)
    p.add_argument("--seq-cap", type=int, default=eu.DEFAULT_SEQ_CAP)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="run verification suites, JSON lines out")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-n", type=int, default=15)
    p.add_argument("--seed", type=int, default=vf.DEFAULT_SEED)
    p.add_argument("--tolerance", type=float, default=vf.DEFAULT_TOLERANCE)
    p.add_argument("--timings", action="store_true", help="report wall-clock elapsed_ms (output no longer reproducible)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", parents=[fmt], help="closed form vs truncated series")
    p.add_argument("target", choices=("lehmer", "P", "Q", "aegf", "dirichlet"))
    p.add_argument("--k", type=int)
    p.add_argument("--x", type=float)
    p.add_argument("--t", type=float)
    p.add_argument("--terms", type=int)
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, DomainError) as e:
        print(f"cbs: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationLimitError as e:
        print(f"cbs: guard: {e}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
