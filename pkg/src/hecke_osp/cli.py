"""Command line entry point: ``hecke-osp verify ...`` and ``hecke-osp table ...``.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 pair budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from .combinat import osp_count
from .groebner import DEFAULT_PAIR_BUDGET, ResourceBudgetExceeded, hilbert_function, standard_monomials
from .osp import parse_alpha
from .polyring import MPoly, TermOrder
from .repn import graded_frobenius_formula
from .verify import STATEMENT_LIMITS, STATEMENTS, BasisCache, Context, run_statement

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

TABLES = ("hilbert", "grfrob", "standard-monomials", "osp-count")
TABLE_LIMIT = 6


class UsageError(Exception):
    pass


def _alpha(text: str) -> list[Fraction]:
    try:
        return parse_alpha(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad --alpha {text!r}: {exc}") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="number of variables / letters")
    p.add_argument("--k", type=int, help="number of blocks (default: every k <= n)")
    p.add_argument("--alpha", type=_alpha, help="comma-separated distinct nonzero rationals")
    p.add_argument("--order", choices=["neglex", "deg-neglex"], default="neglex")
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_PAIR_BUDGET, help="S-pair budget per Buchberger run")
    p.add_argument("--cache-dir", help="directory for cached Gröbner bases")
    p.add_argument("--allow-large", action="store_true", help="lift the default size limits")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecke-osp",
        description="Exact checks for the Hecke action on ordered set partition quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run one statement and report pass/fail")
    v.add_argument("statement", choices=sorted(STATEMENTS))
    v.add_argument("--timing", action="store_true", help="include wall time (makes output non-reproducible)")
    _common(v)
    t = sub.add_parser("table", help="emit a data table")
    t.add_argument("what", choices=TABLES)
    _common(t)
    return parser


def _context(args) -> Context:
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.k is not None and args.k < 1:
        raise UsageError("--k must be positive")
    if args.k is not None and args.k > args.n and getattr(args, "statement", None) != "closure":
        raise UsageError("--k must not exceed --n")
    if args.budget < 1:
        raise UsageError("--budget must be positive")
    if args.alpha is not None:
        if args.k is None:
            raise UsageError("--alpha requires --k")
        if len(args.alpha) != args.k:
            raise UsageError(f"--alpha needs exactly {args.k} values")
        if len(set(args.alpha)) != len(args.alpha) or 0 in args.alpha:
            raise UsageError("--alpha values must be distinct and nonzero")
    return Context(
        n=args.n,
        k=args.k,
        alpha=args.alpha,
        order=TermOrder.from_name(args.order),
        seed=args.seed,
        budget=args.budget,
        cache=BasisCache(args.cache_dir),
    )


def _limit_check(n: int, limit: int, allow: bool, what: str) -> None:
    if n > limit and not allow:
        raise UsageError(f"{what} is limited to n <= {limit}; pass --allow-large to override")


def _table_rows(what: str, ctx: Context) -> list[dict]:
    rows = []
    for k in ctx.ks():
        if what == "osp-count":
            value = osp_count(ctx.n, k)
        elif what == "grfrob":
            E = graded_frobenius_formula(ctx.n, k)
            value = json.loads(E.to_json())
        else:
            G = ctx.ideal_basis(ctx.n, k)
            if what == "hilbert":
                value = str(hilbert_function(G))
            else:
                value = [str(MPoly.monomial(m)) for m in standard_monomials(G)]
        rows.append({"n": ctx.n, "k": k, "value": value})
    return rows


def _emit_table(what: str, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"table": what, "rows": rows}, indent=1, sort_keys=True) + "\n"
    lines = []
    for row in rows:
        value = row["value"]
        if isinstance(value, dict):
            lines += [f"{row['n']}\t{row['k']}\t{lam}\t{c}" for lam, c in value.items()]
        elif isinstance(value, list):
            lines += [f"{row['n']}\t{row['k']}\t{m}" for m in value]
        else:
            lines.append(f"{row['n']}\t{row['k']}\t{value}")
    header = {"grfrob": "n\tk\tpartition\tcoefficient", "standard-monomials": "n\tk\tmonomial"}.get(what, "n\tk\tvalue")
    return "\n".join([header, *lines]) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        ctx = _context(args)
        if args.command == "verify":
            _limit_check(args.n, STATEMENT_LIMITS[args.statement], args.allow_large, args.statement)
            report = run_statement(args.statement, ctx)
            sys.stdout.write(report.to_json(args.timing) + "\n" if args.format == "json" else report.to_tsv())
            if report.error is not None:
                return EXIT_BUDGET
            return EXIT_PASS if report.passed else EXIT_FAIL
        _limit_check(args.n, TABLE_LIMIT, args.allow_large, f"table {args.what}")
        sys.stdout.write(_emit_table(args.what, _table_rows(args.what, ctx), args.format))
        return EXIT_PASS
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hecke-osp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBudgetExceeded as exc:
        print(f"hecke-osp: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
