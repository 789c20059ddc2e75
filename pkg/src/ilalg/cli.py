"""Command-line interface.

Commands: check, filters, quotient, derive-arrow. Exit codes: 0 all pass,
1 violations or failed preconditions, 2 parse error, 3 usage error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .core import (
    build_algebra,
    check_identities,
    check_lattice,
    check_monoid,
    check_residuation,
)
from .errors import (
    BuildError,
    NotResiduatedError,
    ParseError,
)
from .filters import (
    classify_all,
    describe_filter_failure,
    enumerate_filters,
    is_filter,
)
from .quotient import (
    check_affine_quotient,
    check_distributive_quotient,
    check_linear_quotient,
    check_quotient_order,
    quotient_algebra,
)
from .report import ReportDocument
from .specfile import document_of, parse_spec, render_spec

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE = 2
EXIT_USAGE = 3

_FLAG_NAMES = ("distributive", "prime", "maximal", "implicative", "affine")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ilalg",
        description="Workbench for finite IL-algebras: verify the laws, "
        "enumerate and classify filters, build quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the law and identity suites")
    p.add_argument("file")
    p.add_argument("--lenient", action="store_true",
                   help="run the identity suite even when core laws fail")
    p.add_argument("--machine", action="store_true")

    p = sub.add_parser("filters", help="enumerate (and classify) all filters")
    p.add_argument("file")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--machine", action="store_true")

    p = sub.add_parser("quotient", help="quotient by a filter")
    p.add_argument("file")
    p.add_argument("--filter", dest="filter_members", required=True,
                   metavar="e1,e2,...", help="comma-separated member names")
    p.add_argument("--machine", action="store_true")

    p = sub.add_parser("derive-arrow",
                       help="derive the residual table from star and order")
    p.add_argument("file")
    p.add_argument("--machine", action="store_true")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        doc = parse_spec(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    command = {
        "check": _cmd_check,
        "filters": _cmd_filters,
        "quotient": _cmd_quotient,
        "derive-arrow": _cmd_derive_arrow,
    }[args.command]
    return command(doc, args)


def _emit(doc: ReportDocument, machine: bool) -> None:
    text = doc.render(machine)
    if text:
        print(text)


def _build_lenient(doc, out: ReportDocument):
    """Build for reporting; returns (algebra, report) or None after logging."""
    try:
        return build_algebra(doc, mode="lenient")
    except NotResiduatedError as exc:
        for x, z in exc.pairs:
            out.add("ERROR", "not-residuated",
                    (doc.elements[x], doc.elements[z]),
                    "no greatest solution w of x*w <= z")
        return None
    except BuildError as exc:
        out.add("ERROR", "build", (), str(exc))
        return None


def _cmd_check(doc, args) -> int:
    out = ReportDocument()
    built = _build_lenient(doc, out)
    if built is None:
        _emit(out, args.machine)
        return EXIT_VIOLATIONS
    alg, report = built
    for label, check in (
        ("lattice", check_lattice),
        ("monoid", check_monoid),
        ("residuation", check_residuation),
    ):
        part = check(alg)
        out.add("VERDICT", label, (), part.status)
        out.extend_violations(part)
    for v in report.violations:
        if v.law == "top-declared":
            out.add("VIOLATION", v.law, v.witness,
                    f"expected {v.expected} | found {v.found}")
    ident_ok = True
    if alg.valid or args.lenient:
        ident = check_identities(alg)
        out.add("VERDICT", "identities", (), ident.status)
        out.extend_violations(ident)
        ident_ok = ident.ok
    ok = report.ok and ident_ok
    out.add("VERDICT", "overall", (), "pass" if ok else "fail")
    _emit(out, args.machine)
    return EXIT_OK if ok else EXIT_VIOLATIONS


def _cmd_filters(doc, args) -> int:
    out = ReportDocument()
    built = _build_lenient(doc, out)
    if built is None:
        _emit(out, args.machine)
        return EXIT_VIOLATIONS
    alg, report = built
    if not alg.valid:
        out.add("ERROR", "filters", (),
                "filter enumeration needs a law-valid algebra")
        out.extend_violations(report)
        _emit(out, args.machine)
        return EXIT_VIOLATIONS
    if args.classify:
        rows = classify_all(alg)
        for row in rows:
            flags = row.flags
            detail = " ".join(
                f"{name}={'yes' if getattr(flags, name) else 'no'}"
                for name in _FLAG_NAMES
            )
            out.add("FILTER", "classified", row.member_names(), detail)
    else:
        rows = enumerate_filters(alg)
        for row in rows:
            out.add("FILTER", "filter", row.member_names(), "")
    out.add("VERDICT", "filters", (), f"count={len(rows)}")
    _emit(out, args.machine)
    return EXIT_OK


def _cmd_quotient(doc, args) -> int:
    out = ReportDocument()
    built = _build_lenient(doc, out)
    if built is None:
        _emit(out, args.machine)
        return EXIT_VIOLATIONS
    alg, report = built
    if not alg.valid:
        out.add("ERROR", "quotient", (),
                "quotient construction needs a law-valid algebra")
        out.extend_violations(report)
        _emit(out, args.machine)
        return EXIT_VIOLATIONS
    member_names = [m for m in args.filter_members.split(",") if m]
    try:
        members = [alg.index(m) for m in member_names]
    except KeyError as exc:
        print(f"bad --filter value: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    check = is_filter(alg, members)
    if not check.ok:
        out.add("VIOLATION", check.condition, alg.names(check.witness),
                "not a filter: " + describe_filter_failure(alg, check))
        _emit(out, args.machine)
        return EXIT_VIOLATIONS
    result = quotient_algebra(alg, members)
    for bi, blk in enumerate(result.blocks):
        out.add("BLOCK", result.algebra.carrier[bi], alg.names(blk),
                f"index={bi}")
    if args.machine:
        q = result.algebra
        for opname, table in (("star", q.star_table), ("arrow", q.arrow_table)):
            for i in range(q.n):
                for j in range(q.n):
                    out.add("TABLE", opname,
                            (q.carrier[i], q.carrier[j]),
                            q.carrier[table[i][j]])
    order_ok = check_quotient_order(alg, members)
    checks = {
        "induced-algebra": result.verdicts.is_il_algebra,
        "quotient-order": order_ok,
    }
    for label, ok in checks.items():
        out.add("VERDICT", label, (), "pass" if ok else "fail")
    for label, theorem in (
        ("distributive-quotient", check_distributive_quotient(alg, members)),
        ("linear-quotient", check_linear_quotient(alg, members)),
        ("affine-quotient", check_affine_quotient(alg, members)),
    ):
        detail = (
            f"premise={'yes' if theorem.premise else 'no'} "
            f"conclusion={'yes' if theorem.conclusion else 'no'} "
            f"{'pass' if theorem.holds else 'fail'}"
        )
        out.add("VERDICT", label, (), detail)
        checks[label] = theorem.holds
    if result.verdicts.singleton_blocks:
        out.add("NOTE", "quotient", (),
                "all blocks are singletons, the quotient matches the source")
    _emit(out, args.machine)
    if not args.machine:
        print()
        print(render_spec(document_of(result.algebra, doc.name + "-quotient")),
              end="")
    return EXIT_OK if all(checks.values()) else EXIT_VIOLATIONS


def _cmd_derive_arrow(doc, args) -> int:
    out = ReportDocument()
    stripped = replace(doc, arrow_rows=None)
    built = _build_lenient(stripped, out)
    if built is None:
        _emit(out, args.machine)
        return EXIT_VIOLATIONS
    alg, _report = built
    if args.machine:
        for i in range(alg.n):
            for j in range(alg.n):
                out.add("TABLE", "arrow", (alg.carrier[i], alg.carrier[j]),
                        alg.carrier[alg.arrow_table[i][j]])
        _emit(out, True)
    else:
        width = max(len(e) for e in alg.carrier)
        for i in range(alg.n):
            row = " ".join(
                alg.carrier[v].ljust(width) for v in alg.arrow_table[i]
            ).rstrip()
            print(f"arrow {alg.carrier[i].ljust(width)} : {row}")
    return EXIT_OK
