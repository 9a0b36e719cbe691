"""Command-line entry point: ``convex-census <subcommand> ...``.

Results go to standard output (or ``--output``) as JSON, one document per
invocation, except ``enumerate`` and ``certify`` which emit NDJSON.  Counts
are decimal strings.  Exit status: 0 success, 1 invalid input or a claim
that did not certify, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import certify as cert
from .constructions import (all_convex_triangulations, arc_points, balanced_triangulation,
                            concat_construction, convexify)
from .counting import count_by_length, count_convex_paths, count_convex_polygons, iter_convex_polygons
from .oracle import brute_count, brute_count_paths
from .pslg import (InvalidPslgError, NotATriangulationError, Pslg, PslgFormatError, Triangulation,
                   load, to_json, validate)
from .recurrences import argmax_split, ccx_table, lambda_seq, p_table

log = logging.getLogger("convex_census")

MAXSEARCH_RANGE = (3, 12)


def maxsearch(n: int) -> tuple[int, Triangulation, int]:
    """Largest polygon count over all triangulations of n convex-position points.

    Returns (maximum, first maximizer in enumeration order, triangulations seen).
    """
    lo, hi = MAXSEARCH_RANGE
    if not lo <= n <= hi:
        raise ValueError(f"maxsearch supports {lo} <= n <= {hi}")
    pts = arc_points(n)
    best, best_edges, seen = -1, None, 0
    for edges in all_convex_triangulations(n):
        seen += 1
        c = count_convex_polygons(Pslg(pts, edges), check=False)
        if c > best:
            best, best_edges = c, edges
    return best, Triangulation.from_pslg(Pslg(pts, best_edges), check=False), seen


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors print help text and exit 2
        self.print_help(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _io_args(p: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        p.add_argument("--input", "-i", default="-", help="graph JSON path (default: stdin)")
    p.add_argument("--output", "-o", default="-", help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="convex-census", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="count convex polygons with the dynamic program")
    _io_args(p)
    p.add_argument("--by-length", action="store_true", help="also report the per-length histogram")

    p = sub.add_parser("paths", help="count convex paths between two vertices")
    _io_args(p)
    p.add_argument("--from", dest="src", type=int, required=True)
    p.add_argument("--to", dest="dst", type=int, required=True)

    p = sub.add_parser("enumerate", help="list convex polygons as NDJSON")
    _io_args(p)

    p = sub.add_parser("oracle", help="brute-force counts (small graphs only)")
    _io_args(p)
    p.add_argument("--from", dest="src", type=int)
    p.add_argument("--to", dest="dst", type=int)

    p = sub.add_parser("validate", help="report general-position and planarity violations")
    _io_args(p)

    p = sub.add_parser("tables", help="P or Cx values as a JSON array")
    _io_args(p, with_input=False)
    p.add_argument("--name", choices=["P", "Cx"], required=True)
    p.add_argument("--max", dest="max_n", type=int, required=True)

    p = sub.add_parser("lambda", help="lambda_0..lambda_K as a JSON array")
    _io_args(p, with_input=False)
    p.add_argument("--max", dest="max_k", type=int, required=True)

    p = sub.add_parser("argmax-split", help="splits attaining P(n)")
    _io_args(p, with_input=False)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("certify", help="certify the numeric facts and bounds")
    _io_args(p, with_input=False)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--fact", type=int, choices=range(1, 7), metavar="I")
    g.add_argument("--theorem2", type=int, metavar="N")
    g.add_argument("--lambda-bound", type=int, metavar="K")

    p = sub.add_parser("gen-tk", help="balanced triangulation T_k")
    _io_args(p, with_input=False)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("gen-concat", help="m copies of T_k along one arc")
    _io_args(p, with_input=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("convexify", help="map a triangulation to convex position around a face")
    _io_args(p)
    p.add_argument("--face", type=int, required=True, help="index into the sorted bounded faces")

    p = sub.add_parser("maxsearch", help="maximum count over all triangulations of a convex n-gon")
    _io_args(p, with_input=False)
    p.add_argument("--n", type=int, required=True)
    return ap


def _read_graph(path: str) -> Pslg:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return load(text)


def _emit(path: str, lines: Sequence[str]) -> None:
    body = "".join(line + "\n" for line in lines)
    if path == "-":
        sys.stdout.write(body)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(body)


def _dump(obj) -> str:
    return json.dumps(obj)


def _run(args) -> int:
    cmd = args.command
    if cmd == "count":
        g = _read_graph(args.input)
        out = {"count": str(count_convex_polygons(g))}
        if args.by_length:
            out["by_length"] = {str(k): str(v) for k, v in count_by_length(g, check=False).items()}
        _emit(args.output, [_dump(out)])
    elif cmd == "paths":
        g = _read_graph(args.input)
        c = count_convex_paths(g, args.src, args.dst)
        _emit(args.output, [_dump({"from": args.src, "to": args.dst, "count": str(c)})])
    elif cmd == "enumerate":
        g = _read_graph(args.input)
        _emit(args.output, [_dump(list(p.cycle)) for p in iter_convex_polygons(g)])
    elif cmd == "oracle":
        g = _read_graph(args.input)
        if (args.src is None) != (args.dst is None):
            raise ValueError("--from and --to must be given together")
        if args.src is None:
            out = {"count": str(brute_count(g))}
        else:
            out = {"from": args.src, "to": args.dst, "count": str(brute_count_paths(g, args.src, args.dst))}
        _emit(args.output, [_dump(out)])
    elif cmd == "validate":
        g = _read_graph(args.input)
        rep = validate(g)
        _emit(args.output, [_dump(rep.to_json())])
        return 0 if rep.ok else 1
    elif cmd == "tables":
        table = p_table(args.max_n) if args.name == "P" else ccx_table(args.max_n)
        _emit(args.output, [_dump([str(v) for v in table.values])])
    elif cmd == "lambda":
        _emit(args.output, [_dump([str(v) for v in lambda_seq(args.max_k).values])])
    elif cmd == "argmax-split":
        _emit(args.output, [_dump(sorted([list(s) for s in argmax_split(args.n)]))])
    elif cmd == "certify":
        if args.all:
            verdicts = cert.verify_all()
        elif args.fact is not None:
            verdicts = [cert.verify_fact(args.fact)]
        elif args.theorem2 is not None:
            verdicts = [cert.verify_theorem2(args.theorem2)]
        else:
            verdicts = [cert.verify_lambda_bound(args.lambda_bound)]
        _emit(args.output, [_dump(v.to_json()) for v in verdicts])
        return 0 if all(v.proved for v in verdicts) else 1
    elif cmd == "gen-tk":
        _emit(args.output, [_dump(to_json(balanced_triangulation(args.k).pslg))])
    elif cmd == "gen-concat":
        _emit(args.output, [_dump(to_json(concat_construction(args.k, args.m).pslg))])
    elif cmd == "convexify":
        g = _read_graph(args.input)
        t = Triangulation.from_pslg(g)
        target, pmap = convexify(t, args.face)
        doc = to_json(target)
        doc["map"] = pmap.to_json()
        doc["map"]["face"] = list(t.faces[args.face])
        _emit(args.output, [_dump(doc)])
    elif cmd == "maxsearch":
        best, tri, seen = maxsearch(args.n)
        doc = {"n": args.n, "max": str(best), "triangulations": seen, "maximizer": to_json(tri.pslg)}
        _emit(args.output, [_dump(doc)])
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return _run(args)
    except (PslgFormatError, InvalidPslgError, NotATriangulationError, ValueError,
            IndexError, OSError) as exc:
        log.error("%s", exc)
        return 1


def main() -> None:
    sys.exit(run())
