"""Command-line interface.

Every subcommand prints one JSON report on stdout.  Exit codes: 0 when the
checked property holds, 1 when it fails, 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Sequence

from mpgc import __version__
from mpgc.coloring import three_color
from mpgc.enumeration import verify_theorems
from mpgc.errors import CapabilityError, GraphInputError
from mpgc.families import generalized_petersen
from mpgc.formats import decode_graph6, emit_dot, encode_graph6
from mpgc.gamma import GammaParams, build_gamma, check_gamma_cover, embed_gamma, verify_gamma
from mpgc.graph import Graph, complement, triangle_witness
from mpgc.mpg import check_mpg, check_mpgc, duplicate_vertex, five_cycle_cover

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def read_graph(arg: str) -> Graph:
    """A graph6 string, a file holding one (first non-empty line), or ``-`` for stdin."""
    if arg == "-":
        text = sys.stdin.read()
    elif Path(arg).is_file():
        text = Path(arg).read_text(encoding="ascii")
    else:
        text = arg
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphInputError("no graph given")
    return decode_graph6(lines[0])


def graph_block(g: Graph) -> dict:
    return {"graph6": encode_graph6(g), "order": g.order, "edges": [list(e) for e in g.edges()]}


def cover_table(g: Graph, all_witnesses: bool = False) -> dict:
    cover = five_cycle_cover(g, all_witnesses=all_witnesses)
    rows = []
    for e in g.edges():
        row = {"edge": list(e), "five_cycle": list(cover.covered[e]) if e in cover.covered else None}
        if cover.all_witnesses is not None:
            row["all_five_cycles"] = [list(w) for w in cover.all_witnesses[e]]
        rows.append(row)
    return {"table": rows, "uncovered": [list(e) for e in cover.uncovered], "complete": cover.complete}


def cmd_check(args: argparse.Namespace) -> tuple[dict, int]:
    g = read_graph(args.graph)
    report = check_mpg(g) if args.as_mpg else check_mpgc(g)
    out = {"graph": graph_block(g), "verdict": report.to_dict()}
    # witnesses refer to the complement-side graph; embed it when it differs from the input
    if args.as_mpg:
        out["checked_complement"] = graph_block(complement(g))
    return out, EXIT_OK if report.is_mpgc else EXIT_FAIL


def cmd_cover(args: argparse.Namespace) -> tuple[dict, int]:
    g = read_graph(args.graph)
    table = cover_table(g, args.all)
    return {"graph": graph_block(g), "cover": table}, EXIT_OK if table["complete"] else EXIT_FAIL


def _write_enumeration(out_dir: Path, doc: dict) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for order, codes in doc["mpgcs_by_order"].items():
        (out_dir / f"mpgc_n{order}.g6").write_text("".join(c + "\n" for c in codes), encoding="ascii")
    (out_dir / "summary.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def cmd_enumerate(args: argparse.Namespace) -> tuple[dict, int]:
    summary = verify_theorems(args.max_n, jobs=args.jobs, checks=False)
    doc = summary.to_dict(timing=not args.seedless)
    del doc["violations"], doc["total_violations"], doc["ok"]
    if args.out:
        _write_enumeration(Path(args.out), doc)
    return {"enumeration": doc}, EXIT_OK


def cmd_verify(args: argparse.Namespace) -> tuple[dict, int]:
    summary = verify_theorems(args.max_n, jobs=args.jobs)
    doc = summary.to_dict(timing=not args.seedless)
    if args.out:
        out_dir = Path(args.out)
        _write_enumeration(out_dir, doc)
        if not summary.ok:
            failures = sorted({v["graph6"] for vs in doc["violations"].values() for v in vs})
            (out_dir / "failures.g6").write_text("".join(f + "\n" for f in failures), encoding="ascii")
            (out_dir / "failures.json").write_text(
                json.dumps(doc["violations"], indent=2, sort_keys=True) + "\n", encoding="utf-8"
            )
    return {"verification": doc}, EXIT_OK if summary.ok else EXIT_FAIL


def cmd_gamma(args: argparse.Namespace) -> tuple[dict, int]:
    params = GammaParams.parse(args.params)
    gg = build_gamma(params)
    labels = gg.labels()
    out: dict = {
        "params": list(params.as_tuple()),
        "graph": graph_block(gg.graph),
        "labels": labels,
        "parts": {name: list(vs) for name, vs in gg.parts.items()},
        "coloring": list(gg.coloring),
    }
    code = EXIT_OK
    if args.check:
        report = verify_gamma(gg)
        out["check"] = report.to_dict()
        if not report.ok:
            code = EXIT_FAIL
    if args.embed:
        host = read_graph(args.embed)
        emb = embed_gamma(host, params)
        out["embedding"] = None if emb is None else {labels[p]: t for p, t in emb.items()}
        if emb is not None:
            cover = check_gamma_cover(host, gg, emb)
            out["embedding_cover"] = cover.to_dict()
            if not cover.ok:
                code = EXIT_FAIL
    if args.dot:
        out["dot"] = emit_dot(gg.graph, gg.coloring, labels)
    return out, code


def cmd_duplicate(args: argparse.Namespace) -> tuple[dict, int]:
    g = read_graph(args.graph)
    dup = duplicate_vertex(g, args.vertex)
    report = check_mpgc(dup)
    out = {"graph": graph_block(g), "vertex": args.vertex, "result": graph_block(dup), "verdict": report.to_dict()}
    if args.check:
        return out, EXIT_OK if report.is_mpgc else EXIT_FAIL
    return out, EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> tuple[dict, int]:
    g = read_graph(args.graph)
    coloring = None
    if args.color:
        coloring = three_color(g)
        if coloring is None:
            raise GraphInputError("graph is not 3-colourable; drop --color")
    return {"graph": graph_block(g), "dot": emit_dot(g, coloring)}, EXIT_OK


def cmd_petersen(args: argparse.Namespace) -> tuple[dict, int]:
    g = generalized_petersen(args.n, args.k)
    tri = triangle_witness(g)
    table = cover_table(g)
    report = check_mpgc(g)
    out = {
        "n": args.n,
        "k": args.k,
        "graph": graph_block(g),
        "triangle_free": tri is None,
        "triangle": list(tri) if tri else None,
        "cover": table,
        "verdict": report.to_dict(),
    }
    holds = tri is None and table["complete"]
    return out, EXIT_OK if holds else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mpgc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seedless", action="store_true", help="zero timing fields so reports are byte-identical")
    parser.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seedless", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="MPGC (or with --as-mpg, MPG) verdict for a graph6 input", parents=[common])
    p.add_argument("graph", help="graph6 string, file, or - for stdin")
    p.add_argument("--as-mpg", action="store_true", help="treat the input as the MPG rather than its complement")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cover", help="5-cycle cover table", parents=[common])
    p.add_argument("graph")
    p.add_argument("--all", action="store_true", help="list every 5-cycle through each edge")
    p.set_defaults(func=cmd_cover)

    for name, func, text in (
        ("enumerate", cmd_enumerate, "all MPGCs up to --max-n vertices"),
        ("verify", cmd_verify, "enumerate and check every theorem on each MPGC"),
    ):
        p = sub.add_parser(name, help=text, parents=[common])
        p.add_argument("--max-n", type=int, required=True)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out", help="directory for per-order graph6 lists and JSON summary")
        p.set_defaults(func=func)

    p = sub.add_parser("gamma", help="build Gamma(m,n,k,l,x,y)", parents=[common])
    p.add_argument("--params", required=True, help="m,n,k,l,x,y")
    p.add_argument("--check", action="store_true", help="verify structure and rejection as MPG/MPGC")
    p.add_argument("--embed", metavar="GRAPH", help="find the graph inside this host and check its 5-cycle cover")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("duplicate", help="add a non-adjacent twin of a vertex", parents=[common])
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--check", action="store_true", help="exit 1 unless the result is an MPGC")
    p.set_defaults(func=cmd_duplicate)

    p = sub.add_parser("export-dot", help="DOT rendering", parents=[common])
    p.add_argument("graph")
    p.add_argument("--color", action="store_true", help="fill vertices with a 3-colouring")
    p.add_argument("--raw", action="store_true", help="print bare DOT instead of a JSON report")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("petersen", help="generalized Petersen graph P(n, k) through the check/cover pipeline", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_petersen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1 or getattr(args, "max_n", 1) < 1:
            parser.error("--jobs and --max-n must be positive")
    except SystemExit as exc:  # usage errors and --help/--version
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    start = time.perf_counter()
    try:
        body, code = args.func(args)
    except (GraphInputError, CapabilityError) as exc:
        print(f"mpgc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "export-dot" and args.raw:
        sys.stdout.write(body["dot"])
        return code
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool": "mpgc",
        "version": __version__,
        "command": args.command,
        "ok": code == EXIT_OK,
        **body,
        "timing": {"seconds": 0.0 if args.seedless else round(time.perf_counter() - start, 4)},
    }
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
