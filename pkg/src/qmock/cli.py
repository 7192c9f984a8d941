"""Command-line front end: ``verify``, ``coeffs`` and ``table``.

Exit status is 0 when everything requested passes, 1 when a verification
fails or a table row disagrees, and 2 on usage errors or unknown names.
"""
from __future__ import annotations

import argparse
import csv
import sys
from typing import List, Optional

from . import partitions
from .catalog import DEFAULT_CATALOG, Catalog, UnknownBuilderError, VerifyReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_FIELDS = ["identity", "status", "q_order", "z_order", "z_degree", "q_exponent",
              "lhs", "rhs", "elapsed_ms"]


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmock", description="Exact q-series identity checks.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify catalogued identities")
    v.add_argument("identity", nargs="?", help="identity id")
    v.add_argument("--all", action="store_true", help="verify every identity")
    v.add_argument("--q-order", type=_positive)
    v.add_argument("--z-order", type=_positive)
    v.add_argument("--n-max", type=_nonneg)
    fmt = v.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_const", dest="format", const="json")
    fmt.add_argument("--csv", action="store_const", dest="format", const="csv")
    v.add_argument("--list", action="store_true", help="list identity ids and exit")

    c = sub.add_parser("coeffs", help="print nonzero coefficients of a builder")
    c.add_argument("builder")
    c.add_argument("--q-order", type=_nonneg, required=True)
    c.add_argument("--z-degree", type=_nonneg)

    t = sub.add_parser("table", help="partition counts against series coefficients")
    t.add_argument("mode", choices=["pomega", "pnu"])
    t.add_argument("--max", type=_nonneg, required=True, dest="n_max")
    t.add_argument("--csv", action="store_const", dest="format", const="csv")
    return p


# --- verify ------------------------------------------------------------------


def _text_line(r: VerifyReport) -> str:
    orders = f"q_order={r.q_order}" + ("" if r.z_order is None else f" z_order={r.z_order}")
    line = f"{r.status.upper():4} {r.identity} ({orders}, {r.elapsed_ms} ms)"
    fm = r.first_mismatch
    if fm is not None:
        line += f": first mismatch at z^{fm.z_degree} q^{fm.q_exponent}: lhs={fm.lhs} rhs={fm.rhs}"
    return line


def _csv_row(r: VerifyReport) -> list:
    fm = r.first_mismatch
    miss = ["", "", "", ""] if fm is None else [fm.z_degree, fm.q_exponent, str(fm.lhs), str(fm.rhs)]
    z = "" if r.z_order is None else r.z_order
    return [r.identity, r.status, r.q_order, z, *miss, r.elapsed_ms]


def cmd_verify(args, catalog: Catalog, out) -> int:
    if args.list:
        for i in catalog.ids():
            out.write(f"{i}\t{catalog.records[i].description}\n")
        return EXIT_OK
    if args.all == (args.identity is not None):
        raise UsageError("give exactly one of --all or an identity id")
    if args.identity is not None and args.identity not in catalog.records:
        raise UsageError(f"unknown identity {args.identity!r}; try 'verify --list'")
    ids = catalog.ids() if args.all else [args.identity]

    writer = csv.writer(out, lineterminator="\n") if args.format == "csv" else None
    if writer:
        writer.writerow(CSV_FIELDS)
    failed = 0
    for i in ids:
        r = catalog.verify(i, args.q_order, args.z_order, args.n_max)
        failed += not r.passed
        if args.format == "json":
            out.write(r.to_json() + "\n")
        elif writer:
            writer.writerow(_csv_row(r))
        else:
            out.write(_text_line(r) + "\n")
        out.flush()
    if args.format is None and len(ids) > 1:
        out.write(f"{len(ids) - failed} passed, {failed} failed\n")
    return EXIT_FAIL if failed else EXIT_OK


# --- coeffs ------------------------------------------------------------------


def cmd_coeffs(args, catalog: Catalog, out) -> int:
    try:
        bivariate = catalog.is_bivariate(args.builder)
    except UnknownBuilderError:
        raise UsageError(f"unknown builder {args.builder!r}; known: {', '.join(sorted(catalog.builders))}") from None
    if not bivariate:
        if args.z_degree is not None:
            raise UsageError(f"builder {args.builder!r} is one-variable; --z-degree does not apply")
        s = catalog.build(args.builder, args.q_order)
        for e, c in s.nonzero():
            out.write(f"{e} {c}\n")
        return EXIT_OK
    # rows vanish below q^m, so z_order = q_order already holds every cell up to q_order
    z_order = args.q_order if args.z_degree is None else args.z_degree
    g = catalog.build(args.builder, args.q_order, z_order)
    rows = range(g.z_order + 1) if args.z_degree is None else [args.z_degree]
    for m in rows:
        for e, c in g.row(m).nonzero():
            out.write(f"{e} {c}\n" if args.z_degree is not None else f"{m} {e} {c}\n")
    return EXIT_OK


# --- table -------------------------------------------------------------------


def cmd_table(args, catalog: Catalog, out) -> int:
    if args.mode == "pomega":
        counts, series, first = partitions.omega_counts(args.n_max), "q-omega", 1
    else:
        counts, series, first = partitions.nu_counts(args.n_max), "nu-neg", 0
    coeffs = catalog.build(series, args.n_max)
    writer = csv.writer(out, lineterminator="\n") if args.format == "csv" else None
    if writer:
        writer.writerow(["n", "count", "series_coeff", "agree"])
    bad = 0
    for n in range(first, args.n_max + 1):
        ok = counts[n] == coeffs[n]
        bad += not ok
        if writer:
            writer.writerow([n, counts[n], str(coeffs[n]), "true" if ok else "false"])
        else:
            out.write(f"{n} {counts[n]} {coeffs[n]} {'OK' if ok else 'MISMATCH'}\n")
    return EXIT_FAIL if bad else EXIT_OK


COMMANDS = {"verify": cmd_verify, "coeffs": cmd_coeffs, "table": cmd_table}


def main(argv: Optional[List[str]] = None, *, catalog: Optional[Catalog] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    catalog = DEFAULT_CATALOG if catalog is None else catalog
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, catalog, out)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"qmock {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
