"""Command-line front end.

Four subcommands:

* ``table``: degree-indexed polynomial tables (or Stirling triangles),
  built through the Stirling-route construction.
* ``gf``: the same families read off the truncated generating function,
  row for row comparable with ``table`` output by design.
* ``verify``: run the identity audit and emit its report; the exit code
  states whether every asserted identity held.
* ``padic``: one integral-versus-polynomial comparison modulo p^M.

Row rendering is shared between ``table`` and ``gf`` so that equal
polynomials produce identical bytes in every format; tests rely on that.
Exit codes: 0 success, 1 a checked identity or comparison failed,
2 usage or constraint error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .combinatorics import stirling_table
from .euler_boole import FamilyId, family_polynomial
from .exact_core import MultiPoly
from .identity_audit import DEFAULT_SEED, run_suite
from .padic_oracle import witt_check

__all__ = ["build_parser", "main", "entrypoint"]

_POLY_FAMILIES = {
    "euler": "euler",
    "boole-classical": "boole_classical",
    "qboole-first": "qboole_first",
    "qboole-second": "qboole_second",
}
_STIRLING_FAMILIES = {"stirling1": "first", "stirling2": "second"}
_FORMATS = ("json", "csv", "latex", "text")


# -- rendering -------------------------------------------------------------


def _render_rows(
    header: tuple[str, ...],
    rows: list[tuple],
    fmt: str,
    meta: dict,
) -> str:
    """One rendering path for every tabular subcommand.

    ``rows`` holds tuples matching ``header``; MultiPoly cells render
    canonically (or as LaTeX in latex format), everything else via str.
    """
    if fmt == "json":
        payload = dict(meta)
        payload["rows"] = [
            {key: (str(cell) if isinstance(cell, MultiPoly) else cell) for key, cell in zip(header, row)}
            for row in rows
        ]
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([str(cell) for cell in row])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = []
        for row in rows:
            cells = [
                cell.to_latex() if isinstance(cell, MultiPoly) else str(cell)
                for cell in row
            ]
            lines.append(" & ".join(cells) + r" \\")
        return "\n".join(lines)
    # text
    lines = ["  ".join(header)]
    for row in rows:
        lines.append("  ".join(str(cell) for cell in row))
    return "\n".join(lines)


def _family_rows(cli_family: str, alpha: int, bound: int, construction: str) -> list[tuple]:
    fid = FamilyId(_POLY_FAMILIES[cli_family], alpha)
    return [(n, family_polynomial(fid, n, construction)) for n in range(bound + 1)]


def _stirling_rows(cli_family: str, bound: int) -> list[tuple]:
    table = stirling_table(_STIRLING_FAMILIES[cli_family], bound)
    return [
        (n, ell, table.values[n][ell])
        for n in range(bound + 1)
        for ell in range(n + 1)
    ]


# -- subcommands -----------------------------------------------------------


def _cmd_table(args: argparse.Namespace) -> tuple[str, int]:
    if args.n < 0:
        raise ValueError(f"--n must be non-negative, got {args.n}")
    if args.family in _STIRLING_FAMILIES:
        if args.alpha != 1:
            raise ValueError("--alpha does not apply to Stirling triangles")
        rows = _stirling_rows(args.family, args.n)
        meta = {"family": args.family, "n_max": args.n}
        return _render_rows(("n", "l", "value"), rows, args.format, meta), 0
    rows = _family_rows(args.family, args.alpha, args.n, "by_stirling_sum")
    meta = {
        "family": args.family,
        "alpha": args.alpha,
        "n_max": args.n,
        "construction": "by_stirling_sum",
    }
    return _render_rows(("n", "polynomial"), rows, args.format, meta), 0


def _cmd_gf(args: argparse.Namespace) -> tuple[str, int]:
    if args.k < 0:
        raise ValueError(f"--k must be non-negative, got {args.k}")
    rows = _family_rows(args.family, args.alpha, args.k, "by_series")
    meta = {
        "family": args.family,
        "alpha": args.alpha,
        "k": args.k,
        "construction": "by_series",
    }
    return _render_rows(("n", "polynomial"), rows, args.format, meta), 0


def _cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    report = run_suite(
        profile=args.profile,
        include_printed=args.include_printed_variants,
        seed=args.seed,
        workers=args.workers,
    )
    out = report.to_json() if args.format == "json" else report.to_text()
    return out, 0 if report.all_asserted_pass else 1


def _cmd_padic(args: argparse.Namespace) -> tuple[str, int]:
    result = witt_check(
        _POLY_FAMILIES[args.family],
        args.n,
        args.x,
        args.lam,
        args.q,
        args.p,
        args.N,
        args.M,
        alpha=args.alpha,
        literal=args.literal,
    )
    payload = {
        "family": args.family,
        "alpha": args.alpha,
        "n": args.n,
        "x": args.x,
        "lambda": args.lam,
        "q": args.q,
        "p": args.p,
        "N": args.N,
        "M": args.M,
        "modulus": result.integral.modulus,
        "integral": result.integral.residue,
        "polynomial": result.polynomial.residue,
        "verdict": "pass" if result.agree else "fail",
    }
    return json.dumps(payload, indent=2), 0 if result.agree else 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qboole",
        description="Exact q-deformed Boole polynomial families, identity audit, p-adic oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="polynomial tables and Stirling triangles")
    table.add_argument(
        "--family",
        required=True,
        choices=sorted(_POLY_FAMILIES) + sorted(_STIRLING_FAMILIES),
    )
    table.add_argument("--n", type=int, required=True, help="largest degree index")
    table.add_argument("--alpha", type=int, default=1, help="family order")
    table.add_argument("--format", choices=_FORMATS, default="text")
    table.add_argument("--output", default=None, help="write here instead of stdout")

    gf = sub.add_parser("gf", help="generating-function expansion")
    gf.add_argument("--family", required=True, choices=sorted(_POLY_FAMILIES))
    gf.add_argument("--k", type=int, required=True, help="truncation order")
    gf.add_argument("--alpha", type=int, default=1, help="family order")
    gf.add_argument("--format", choices=_FORMATS, default="text")
    gf.add_argument("--output", default=None)

    verify = sub.add_parser("verify", help="run the identity audit")
    verify.add_argument("--profile", choices=("quick", "full"), default="quick")
    verify.add_argument(
        "--include-printed-variants",
        action="store_true",
        help="also audit the variant forms documented as inconsistent",
    )
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument(
        "--workers",
        type=int,
        default=None,
        help="thread count; defaults to QBOOLE_WORKERS or sequential",
    )
    verify.add_argument("--format", choices=("json", "text"), default="json")
    verify.add_argument("--output", default=None)

    padic = sub.add_parser("padic", help="integral vs polynomial modulo p^M")
    padic.add_argument("--family", choices=sorted(_POLY_FAMILIES), default="qboole-first")
    padic.add_argument("--n", type=int, required=True, help="degree index")
    padic.add_argument("--alpha", type=int, default=1, help="family order")
    padic.add_argument("--x", type=int, default=0)
    padic.add_argument("--lambda", dest="lam", type=int, default=1)
    padic.add_argument("--q", type=int, default=1)
    padic.add_argument("--p", type=int, required=True, help="odd prime")
    padic.add_argument("--N", type=int, required=True, help="summation level")
    padic.add_argument("--M", type=int, required=True, help="precision, at most N")
    padic.add_argument(
        "--literal",
        action="store_true",
        help="use the direct enumeration instead of the base-p contraction",
    )
    padic.add_argument("--output", default=None)

    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        print(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "table": _cmd_table,
        "gf": _cmd_gf,
        "verify": _cmd_verify,
        "padic": _cmd_padic,
    }
    try:
        out, code = handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(out, args.output)
    return code


def entrypoint() -> None:
    sys.exit(main())
