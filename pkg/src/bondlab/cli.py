"""Command-line front end.

Subcommands: gamma, bondage, hr, genus, faces, curvature, constant,
bounds, survey, gen. Graph input comes from a file argument or stdin,
autodetected as graph6 or edge-list by the first byte; embeddings come
from --embedding FILE. Exit codes: 0 all checks pass, 1 bound violation,
2 input/usage error, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import families
from .bondage import bondage_number, hr_bound
from .bounds import bound_suite
from .curvature import SurfaceSpec, check_euler_identities, curvature_table, improved_constant
from .domination import domination_number
from .embedding import (
    GenusBudget,
    embedding_summary,
    min_genus,
    parse_embedding,
    trace_faces,
    write_embedding,
)
from .errors import BondlabError, BudgetExceeded, InternalError, ParseError
from .graph6 import iter_graph6, parse_graph_text, write_graph6
from .graphs import Graph
from .survey import CSV_HEADER, run_survey

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_graph(args) -> Graph:
    embedding_path = getattr(args, "embedding", None)
    if getattr(args, "graph", None) is None and embedding_path:
        return parse_embedding(_read_text(embedding_path)).graph
    return parse_graph_text(_read_text(args.graph))


def _load_embedding(args):
    rs = parse_embedding(_read_text(args.embedding))
    if getattr(args, "graph", None) is not None:
        g = parse_graph_text(_read_text(args.graph))
        if g.n != rs.graph.n or g.adj != rs.graph.adj:
            raise ParseError("embedding file does not describe the given graph")
    return rs


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_gen(args) -> int:
    spec = families.FamilySpec(args.family, tuple(args.params), args.seed)
    try:
        g = families.generate(spec)
    except TypeError:
        raise ParseError(
            f"wrong number of parameters for family {args.family!r}"
        ) from None
    print(write_graph6(g))
    return EXIT_OK


def cmd_gamma(args) -> int:
    g = _load_graph(args)
    res = domination_number(g)
    _emit(
        args,
        {"gamma": res.gamma, "witness": list(res.witness)},
        [f"gamma {res.gamma}", "witness " + " ".join(map(str, res.witness))],
    )
    return EXIT_OK


def cmd_bondage(args) -> int:
    g = _load_graph(args)
    res = bondage_number(g, cap=args.bondage_cap)
    witness = [f"({u},{v})" for u, v in res.witness]
    _emit(
        args,
        {"bondage": res.b, "gamma": res.base_gamma, "witness": [list(e) for e in res.witness]},
        [f"bondage {res.b}", f"gamma {res.base_gamma}", "witness " + " ".join(witness)],
    )
    return EXIT_OK


def cmd_hr(args) -> int:
    g = _load_graph(args)
    res = hr_bound(g)
    _emit(
        args,
        {"hr": res.value, "edge": list(res.arg_edge)},
        [f"hr {res.value}", f"edge ({res.arg_edge[0]},{res.arg_edge[1]})"],
    )
    return EXIT_OK


def cmd_genus(args) -> int:
    g = _load_graph(args)
    budget = GenusBudget(args.budget)
    payload = {}
    lines = []
    for orientable, key in ((True, "h"), (False, "k")):
        try:
            genus, witness = min_genus(g, orientable, budget)
            payload[key] = genus
            payload[f"witness_{key}"] = write_embedding(witness) if witness else None
            lines.append(f"{key} {genus}")
        except BudgetExceeded as exc:
            payload[key] = "budget"
            payload[f"best_{key}"] = exc.best_genus
            lines.append(f"{key} budget (best found: {exc.best_genus})")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_faces(args) -> int:
    rs = _load_embedding(args)
    faces = trace_faces(rs)
    summary = embedding_summary(rs)
    walks = [["%d-%d" % dart for dart in walk] for walk in faces.faces]
    lines = [
        f"faces {summary.f}  euler_genus {summary.euler_genus}  "
        f"{'orientable h=%d' % summary.genus if summary.orientable else 'non-orientable k=%d' % summary.genus}"
    ]
    for i, walk in enumerate(walks):
        lines.append(f"face {i} len {len(walk)}: " + " ".join(walk))
    _emit(
        args,
        {
            "f": summary.f,
            "euler_genus": summary.euler_genus,
            "orientable": summary.orientable,
            "genus": summary.genus,
            "walks": walks,
        },
        lines,
    )
    return EXIT_OK


def cmd_curvature(args) -> int:
    rs = _load_embedding(args)
    summary = embedding_summary(rs)
    surface = SurfaceSpec(summary.orientable, summary.genus)
    report = curvature_table(rs.graph, rs, surface)
    ok = check_euler_identities(report, summary)
    rows = [
        {
            "edge": list(rec.edge),
            "w": _frac(rec.w),
            "f": _frac(rec.f),
            "m1": rec.m1,
            "m2": rec.m2,
            "curvature": _frac(rec.curvature),
        }
        for rec in report.per_edge
    ]
    lines = [
        f"surface {'S' if surface.orientable else 'N'}_{surface.genus}  edges {len(rows)}",
        "edge  w  f  m1  m2  curvature",
    ]
    for rec in report.per_edge:
        lines.append(
            f"({rec.edge[0]},{rec.edge[1]})  {_frac(rec.w)}  {_frac(rec.f)}  "
            f"{rec.m1}  {rec.m2}  {_frac(rec.curvature)}"
        )
    lines.append(
        f"sum_w {_frac(report.sum_w)}  sum_f {_frac(report.sum_f)}  "
        f"sum_curvature {_frac(report.sum_curvature)}  identities {'ok' if ok else 'VIOLATED'}"
    )
    _emit(
        args,
        {
            "surface": {"orientable": surface.orientable, "genus": surface.genus},
            "edges": rows,
            "sum_w": _frac(report.sum_w),
            "sum_f": _frac(report.sum_f),
            "sum_curvature": _frac(report.sum_curvature),
            "identities_ok": ok,
        },
        lines,
    )
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_constant(args) -> int:
    orientable = args.surface_class == "orientable"
    c = improved_constant(orientable, args.genus)
    _emit(
        args,
        {"class": args.surface_class, "genus": args.genus, "constant": c},
        [f"b(G) <= Delta(G) + {c} on "
         f"{'S' if orientable else 'N'}_{args.genus} (2-cell embeddable)"],
    )
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _load_graph(args)
    budget = GenusBudget(args.budget)
    h, _ = min_genus(g, True, budget)
    k, _ = min_genus(g, False, budget)
    suite = bound_suite(g, h, k)
    payload = {"h": h, "k": k, "best": suite.best}
    payload.update(suite.populated())
    lines = [f"h {h}  k {k}"]
    lines += [f"{name} {value}" for name, value in suite.populated().items()]
    lines.append(f"best {suite.best}")
    _emit(args, payload, lines)
    return EXIT_OK


def _row_cells(row) -> list[str]:
    def cell(value, missing=""):
        return str(value) if value is not None else missing

    bounds = row.bounds
    return [
        row.name,
        str(row.n),
        str(row.m),
        str(row.delta_min),
        str(row.delta_max),
        str(row.gamma),
        cell(row.bondage, "cap" if "cap" in row.reasons else ""),
        cell(row.hr),
        cell(row.genus_h, "budget" if "budget-h" in row.reasons else ""),
        cell(row.genus_k, "budget" if "budget-k" in row.reasons else ""),
        cell(bounds.orientable_surface if bounds else None),
        cell(bounds.nonorientable_surface if bounds else None),
        cell(bounds.planar if bounds else None),
        cell(bounds.best if bounds else None),
        "true" if row.ok else "false",
    ]


def _format_survey(rows, fmt: str) -> str:
    if fmt == "csv":
        out = [CSV_HEADER]
        out += [",".join(_row_cells(row)) for row in rows]
        return "\n".join(out) + "\n"
    if fmt == "json":
        payload = []
        for row in rows:
            entry = {
                "name": row.name,
                "n": row.n,
                "m": row.m,
                "delta": row.delta_min,
                "Delta": row.delta_max,
                "gamma": row.gamma,
                "bondage": row.bondage,
                "hr": row.hr,
                "h": row.genus_h,
                "k": row.genus_k,
                "ok": row.ok,
                "reasons": list(row.reasons),
            }
            if row.bounds is not None:
                entry["bounds"] = dict(row.bounds.populated())
                entry["bound_best"] = row.bounds.best
            payload.append(entry)
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    header = CSV_HEADER.split(",")
    table = [header] + [_row_cells(row) for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    out = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip()
           for line in table]
    return "\n".join(out) + "\n"


def cmd_survey(args) -> int:
    text = _read_text(args.graph)
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty survey corpus")
    if stripped[0].isdigit():
        named = [("edge-list", parse_graph_text(text))]
    else:
        named = list(iter_graph6(text.splitlines()))
    budget = GenusBudget(args.budget)
    rows, status = run_survey(named, budget, args.bondage_cap)
    report = _format_survey(rows, args.format)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(report)
        print(f"{len(rows)} graphs surveyed, "
              f"{sum(1 for r in rows if not r.ok)} violations -> {args.report}")
    else:
        sys.stdout.write(report)
    return EXIT_OK if status == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bondlab",
        description="Domination, bondage, genus, and curvature laboratory for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name, func, help_text, embedding=False, budget=False, cap=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", nargs="?", default=None,
                       help="graph file (graph6 or edge list); stdin when omitted")
        if embedding:
            p.add_argument("--embedding", required=name in ("faces", "curvature"),
                           help="embedding file (rotation + signature)")
        if budget:
            p.add_argument("--budget", type=int, default=GenusBudget().max_traces,
                           help="face-trace budget for genus searches")
        if cap:
            p.add_argument("--bondage-cap", type=int, default=None,
                           help="edge-subset size cap for the bondage search")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.set_defaults(func=func)
        return p

    graph_command("gamma", cmd_gamma, "exact domination number")
    graph_command("bondage", cmd_bondage, "exact bondage number", cap=True)
    graph_command("hr", cmd_hr, "per-edge degree bound, minimized over edges")
    graph_command("genus", cmd_genus, "minimum orientable and non-orientable genus", budget=True)
    graph_command("faces", cmd_faces, "face walks of an embedding", embedding=True)
    graph_command("curvature", cmd_curvature, "per-edge curvature table", embedding=True)
    graph_command("bounds", cmd_bounds, "all bondage upper bounds", budget=True)
    survey_p = graph_command("survey", cmd_survey, "survey a graph6 corpus",
                             budget=True, cap=True)
    survey_p.add_argument("--report", default=None, help="write the report to this path")

    const_p = sub.add_parser("constant", help="improved per-genus constant")
    const_p.add_argument("surface_class", choices=("orientable", "nonorientable", "non-orientable"))
    const_p.add_argument("genus", type=int)
    const_p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    const_p.set_defaults(func=cmd_constant)

    gen_p = sub.add_parser("gen", help="emit a family graph as graph6")
    gen_p.add_argument("family", choices=families.FAMILIES)
    gen_p.add_argument("params", nargs="*", type=int)
    gen_p.add_argument("--seed", type=int, default=None)
    gen_p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "surface_class", None) == "non-orientable":
        args.surface_class = "nonorientable"
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except BondlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
