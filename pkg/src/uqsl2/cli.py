"""Command line interface: ``uq verify``, ``uq table``, ``uq eval``, ``uq center``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checks import SUITES, run_suite
from .center import canonical_central_elements
from .errors import ConsistencyError, UqError
from .parser import element_to_text, eval_expr, parse_element, to_source
from .slf import gta_form
from .tables import FORMATS, KINDS, emit_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_P = 7


class UsageError(Exception):
    pass


def _max_p() -> int:
    raw = os.environ.get("UQ_MAX_P", "")
    if not raw:
        return DEFAULT_MAX_P
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"UQ_MAX_P must be an integer, got {raw!r}") from None


def _check_p(p: int) -> int:
    if p < 2:
        raise UsageError(f"p must be >= 2, got {p}")
    cap = _max_p()
    if p > cap:
        raise UsageError(f"p = {p} exceeds the limit {cap} (set UQ_MAX_P to raise it)")
    return p


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    p = _check_p(args.p)
    report = run_suite(p, args.suite)
    if args.format == "json":
        text = _dump(report.to_json())
    else:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.id}  {c.ref}" for c in report.checks]
        lines.append(f"{report.suite} p={p}: {'PASS' if report.passed else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_table(args) -> int:
    p = _check_p(args.p)
    _write(emit_table(p, args.kind, args.format), args.out)
    return EXIT_OK


def cmd_eval(args) -> int:
    p = _check_p(args.p)
    expr = parse_element(args.expr, p)
    x = eval_expr(expr, p)
    doc = {"p": p, "expr": to_source(expr)}
    if args.form:
        v = gta_form(p, args.form)(x)
        doc.update({"form": args.form, "value": v.to_json(), "text": str(v)})
    else:
        doc.update({"element": x.to_json(), "text": element_to_text(x)})
    _write(_dump(doc), args.out)
    return EXIT_OK


def cmd_center(args) -> int:
    p = _check_p(args.p)
    ce = canonical_central_elements(p)
    doc = {"p": p, "elements": {name: x.to_json() for name, x in ce.all()}}
    _write(_dump(doc), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uq", description="Exact computations in the restricted quantum group of sl2.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--suite", default="all", choices=["all", *SUITES])
    v.add_argument("--out")
    v.add_argument("--format", default="json", choices=["json", "text"])
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="emit a table")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--kind", required=True, choices=list(KINDS))
    t.add_argument("--format", default="json", choices=list(FORMATS))
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--expr", required=True)
    e.add_argument("--form", help="GTA label such as chi:+:2 or G:1; prints the form's value on the element")
    e.add_argument("--out")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("center", help="dump the canonical central elements")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--emit", default="json", choices=["json"])
    c.add_argument("--out")
    c.set_defaults(func=cmd_center)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"uq: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, UqError) as exc:
        print(f"uq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
