"""Command-line interface.

Exit codes: 0 answered, 2 input error, 3 refuted at ``--max-width``,
4 state budget exhausted, 5 dual graph not simple.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import generators as gen
from .bounds import cartesian_product_bound, product_bound, strong_product_bound
from .formats import (
    FormatError,
    emit_graph6,
    emit_sequence,
    export_sequence_dot,
    parse_graph6,
    parse_sequence,
    read_graph,
)
from .graph import ContractionSequence, Graph, InvalidSequence, label_name, vertex_name
from .iso import survey_max_twinwidth
from .planar import EmbeddingError, NonSimpleDual, dual_graph, parse_rotation_system, trace_faces
from .solver import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    SolveStats,
    twinwidth_at_most,
    twinwidth_exact,
    twinwidth_heuristic,
    verify_sequence,
)

log = logging.getLogger("twinwidth")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_REFUTED = 3
EXIT_BUDGET = 4
EXIT_NONSIMPLE = 5

EXACT_LIMIT = 12


class InputError(Exception):
    pass


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="graph file")
    src.add_argument("--g6", metavar="STRING", help="graph6 string")
    p.add_argument("--format", choices=["g6", "edgelist"], help="format of --input (default: by extension)")


def _load_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    path = Path(args.input)
    fmt = args.format or ("g6" if path.suffix in (".g6", ".graph6") else "edgelist")
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return read_graph(text, fmt)


def _load_sequence(path: str, n: int) -> ContractionSequence:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_sequence(text, n)


def _cert_json(seq: ContractionSequence | None, n: int):
    if seq is None:
        return None
    return [[label_name(a, n), label_name(b, n)] for a, b in seq.steps]


def cmd_compute(args) -> int:
    if args.heuristic and args.max_width is not None:
        raise InputError("--max-width needs the exact search; drop --heuristic")
    g = _load_graph(args)
    record = {"input": emit_graph6(g) if g.n <= 62 else None, "twinwidth": None, "exact": False,
              "certificate": None, "stats": None}
    seq = None
    code = EXIT_OK
    try:
        if args.max_width is not None:
            stats = SolveStats()
            seq = twinwidth_at_most(g, args.max_width, budget=args.budget, threads=args.threads, stats=stats)
            record["stats"] = stats.as_dict()
            if seq is None:
                code = EXIT_REFUTED
                message = f"twin-width > {args.max_width}"
            else:
                record["twinwidth"] = seq.width
                message = f"twin-width <= {args.max_width} (certificate width {seq.width})"
        else:
            exact = args.exact or (not args.heuristic and g.n <= EXACT_LIMIT)
            if not args.exact and not args.heuristic and not exact:
                log.warning("%d vertices: using the heuristic (pass --exact to force the exact search)", g.n)
            if exact:
                report = twinwidth_exact(g, budget=args.budget, threads=args.threads)
            else:
                report = twinwidth_heuristic(g)
            seq = report.certificate
            record.update(twinwidth=report.twinwidth, exact=report.exact, stats=report.stats.as_dict())
            flag = "exact" if report.exact else "upper bound"
            message = f"twin-width = {report.twinwidth} ({flag})"
    except BudgetExhausted as exc:
        record["stats"] = exc.stats.as_dict()
        code = EXIT_BUDGET
        message = f"budget exhausted after {exc.stats.visited} states (twin-width >= {exc.lower_bound})"
    record["certificate"] = _cert_json(seq, g.n)
    if seq is not None and args.cert:
        Path(args.cert).write_text(emit_sequence(seq, g.n))
    print(json.dumps(record) if args.json else message)
    return code


FAMILIES = {
    "path": (1, lambda a: gen.path(*a)),
    "cycle": (1, lambda a: gen.cycle(*a)),
    "complete": (1, lambda a: gen.complete(*a)),
    "biclique": (2, lambda a: gen.complete_bipartite(*a)),
    "paley": (1, lambda a: gen.paley(*a)),
    "king": (2, lambda a: gen.king(*a)),
    "rook": (2, lambda a: gen.rook(*a)),
}
OPERATORS = {
    "complement": (1, lambda gs: gen.complement(*gs)),
    "linegraph": (1, lambda gs: gen.line_graph(*gs)),
    "strongprod": (2, lambda gs: gen.strong_product(*gs)),
    "cartprod": (2, lambda gs: gen.cartesian_product(*gs)),
}


def cmd_generate(args) -> int:
    name, params = args.family, args.params
    if name == "caterpillar":
        if not params:
            raise InputError("caterpillar needs at least one leaf count")
        g = gen.caterpillar([_int(p) for p in params])
    elif name in FAMILIES:
        arity, build = FAMILIES[name]
        if len(params) != arity:
            raise InputError(f"{name} takes {arity} integer argument(s)")
        g = build([_int(p) for p in params])
    elif name in OPERATORS:
        arity, build = OPERATORS[name]
        if len(params) != arity:
            raise InputError(f"{name} takes {arity} graph6 argument(s)")
        g = build([parse_graph6(p) for p in params])
    else:
        raise InputError(f"unknown family {name!r}")
    print(emit_graph6(g))
    return EXIT_OK


def _int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise InputError(f"expected an integer, got {s!r}") from None


def cmd_survey(args) -> int:
    survey = survey_max_twinwidth(args.n)
    for row in survey.rows:
        g6 = emit_graph6(row.graph)
        if args.json:
            print(json.dumps({"graph6": g6, "twinwidth": row.twinwidth}))
        else:
            print(f"{g6}\t{row.twinwidth}")
    if not args.json:
        print(f"# classes: {len(survey.rows)}")
        for width, count in survey.histogram.items():
            print(f"# twin-width {width}: {count}")
        print(f"# max: {survey.maximum}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args)
    seq = _load_sequence(args.seq, g.n)
    print(verify_sequence(g, seq))
    return EXIT_OK


def cmd_dual(args) -> int:
    try:
        r = parse_rotation_system(Path(args.file).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    if args.faces:
        for i, cyc in enumerate(trace_faces(r).vertex_cycles()):
            print(f"# face {i}: {' '.join(vertex_name(v, r.graph.n) for v in cyc)}")
    try:
        d = dual_graph(r)
    except NonSimpleDual as exc:
        print(f"NonSimpleDual: {exc}")
        for (a, b), c in sorted(exc.face_pairs.items()):
            print(f"  faces {a} {b} x{c}")
        return EXIT_NONSIMPLE
    print(emit_graph6(d))
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.graphs:
        if args.values:
            raise InputError("give either three integers or --graphs, not both")
        g, h = (parse_graph6(s) for s in args.graphs)
        res = product_bound(args.kind, g, h)
        print(f"{res.value}\t{res.provenance}")
        return EXIT_OK
    if len(args.values) != 3:
        raise InputError("expected three integers")
    a, b, c = (_int(v) for v in args.values)
    if args.kind == "strong":
        value = strong_product_bound(a, b, c)
        prov = f"strong(tww(G)={a}, Δ(H)={b}, tww(H)={c})"
    else:
        value = cartesian_product_bound(a, b, c)
        prov = f"cartesian(tww(G)={a}, tww(H)={b}, Δ(H)={c})"
    print(f"{value}\t{prov}")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _load_graph(args)
    seq = _load_sequence(args.seq, g.n)
    frames = export_sequence_dot(g, seq)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    width = len(str(len(frames)))
    for i, doc in enumerate(frames, 1):
        path = out / f"{args.prefix}_{i:0{width}d}.dot"
        path.write_text(doc)
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twinwidth", description="Twin-width of small graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="twin-width of one graph")
    _add_graph_input(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--heuristic", action="store_true")
    p.add_argument("--max-width", type=int, metavar="D", help="only decide whether twin-width <= D")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="N", help="state budget")
    p.add_argument("--threads", type=int, default=1, metavar="K")
    p.add_argument("--cert", metavar="FILE", help="write the contraction sequence here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="print a graph family member as graph6")
    p.add_argument("family", help=", ".join([*FAMILIES, "caterpillar", *OPERATORS]))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("survey", help="twin-width of every graph on n vertices")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true", help="one JSON record per class")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", help="width of a contraction sequence")
    _add_graph_input(p)
    p.add_argument("--seq", required=True, metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dual", help="dual graph of a rotation system")
    p.add_argument("file")
    p.add_argument("--faces", action="store_true", help="also list the traced faces")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("bound", help="product twin-width bounds")
    p.add_argument("kind", choices=["strong", "cartesian"])
    p.add_argument("values", nargs="*", help="strong: tww(G) Δ(H) tww(H); cartesian: tww(G) tww(H) Δ(H)")
    p.add_argument("--graphs", nargs=2, metavar="G6", help="evaluate from two graphs instead")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("export-dot", help="write one DOT file per contraction step")
    _add_graph_input(p)
    p.add_argument("--seq", required=True, metavar="FILE")
    p.add_argument("--out", required=True, metavar="DIR")
    p.add_argument("--prefix", default="frame")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, FormatError, InvalidSequence, EmbeddingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
