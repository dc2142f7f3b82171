"""Table emitters: GTA multiplication, character fusion and modified-trace values.

Every cell is recomputed from scratch (convolution product followed by GTA
decomposition, or decomposition of the integral form), so the tables are an
independent record of what the engine computes.
"""

from __future__ import annotations

import csv
import io
import json

from .cyclotomic import CycloNum
from .errors import ParameterError
from .slf import decompose_gta, gta_form, gta_labels, product
from .traces import integral_form, slf_to_trace

__all__ = ["KINDS", "FORMATS", "table_data", "emit_table"]

KINDS = ("gta-mult", "fusion-char", "mod-trace")
FORMATS = ("json", "csv", "latex")


def _chi_labels(p: int) -> list[str]:
    return [lab for lab in gta_labels(p) if lab.startswith("chi")]


def _product_rows(p: int, labels: list[str]) -> list[tuple[str, str, dict]]:
    rows = []
    for a in labels:
        for b in labels:
            coords = decompose_gta(product(gta_form(p, a), gta_form(p, b)))
            rows.append((a, b, coords.as_labels()))
    return rows


def _trace_rows(p: int) -> list[tuple[str, str, CycloNum]]:
    t = slf_to_trace(integral_form(p))
    rows = [(f"X:+:{p}", "Id", t.tXp_plus), (f"X:-:{p}", "Id", t.tXp_minus)]
    for a, sym in ((1, "+"), (-1, "-")):
        for s in range(1, p):
            rows.append((f"P:{sym}:{s}", "Id", t.tP_id[(a, s)]))
    for s in range(1, p):
        rows.append((f"P:+:{s}", "nil", t.tP_nil[s]))
    for s in range(1, p):
        rows.append((f"P:-:{s}", "nil", t.nil_minus(s)))
    return rows


def table_data(p: int, kind: str):
    if kind == "gta-mult":
        return _product_rows(p, gta_labels(p))
    if kind == "fusion-char":
        return _product_rows(p, _chi_labels(p))
    if kind == "mod-trace":
        return _trace_rows(p)
    raise ParameterError(f"unknown table kind {kind!r}; choose from {', '.join(KINDS)}")


def _tex_label(label: str) -> str:
    parts = label.split(":")
    if parts[0] == "chi":
        return f"\\chi^{{{parts[1]}}}_{{{parts[2]}}}"
    if parts[0] == "G":
        return f"G_{{{parts[1]}}}"
    kind = "\\mathcal{X}" if parts[0] == "X" else "\\mathcal{P}"
    return f"{kind}^{{{parts[1]}}}({parts[2]})"


def _tex_combination(coords: dict) -> str:
    terms = []
    for lab, c in coords.items():
        if not c:
            continue
        if c == 1:
            terms.append(_tex_label(lab))
        elif c == -1:
            terms.append("-" + _tex_label(lab))
        elif c.is_rational():
            terms.append(f"{c.latex()}{_tex_label(lab)}")
        else:
            terms.append(f"\\left({c.latex()}\\right){_tex_label(lab)}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def emit_table(p: int, kind: str, fmt: str = "json") -> str:
    if fmt not in FORMATS:
        raise ParameterError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    data = table_data(p, kind)
    if kind == "mod-trace":
        return _emit_traces(p, data, fmt)
    labels = gta_labels(p) if kind == "gta-mult" else _chi_labels(p)
    coord_labels = gta_labels(p)
    if fmt == "json":
        entries: dict = {}
        for a, b, coords in data:
            entries.setdefault(a, {})[b] = {k: v.to_json() for k, v in coords.items()}
        doc = {"p": p, "kind": kind, "labels": labels, "coordinates": coord_labels, "entries": entries}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["left", "right", *coord_labels])
        for a, b, coords in data:
            w.writerow([a, b, *(str(coords[k]) for k in coord_labels)])
        return buf.getvalue()
    cells = {(a, b): _tex_combination(coords) for a, b, coords in data}
    lines = [
        f"% {kind}, p = {p}",
        "\\begin{tabular}{c|" + "c" * len(labels) + "}",
        " & ".join(["$\\cdot$"] + [f"${_tex_label(b)}$" for b in labels]) + " \\\\",
        "\\hline",
    ]
    for a in labels:
        row = [f"${_tex_label(a)}$"] + [f"${cells[(a, b)]}$" for b in labels]
        lines.append(" & ".join(row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _emit_traces(p: int, rows, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "p": p,
            "kind": "mod-trace",
            "rows": [{"module": m, "map": f, "value": v.to_json(), "text": str(v)} for m, f, v in rows],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["module", "map", "value"])
        for m, f, v in rows:
            w.writerow([m, f, str(v)])
        return buf.getvalue()
    lines = [
        f"% mod-trace, p = {p}",
        "\\begin{tabular}{llc}",
        "module & map & value \\\\",
        "\\hline",
    ]
    for m, f, v in rows:
        fm = "\\mathrm{Id}" if f == "Id" else "p"
        lines.append(f"${_tex_label(m)}$ & ${fm}$ & ${v.latex()}$ \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"
