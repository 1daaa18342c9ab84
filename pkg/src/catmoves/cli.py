"""Command-line front end: ``catmoves <command> ...``.

Data goes to stdout or ``--out``; progress and timing go to stderr.  Exit
status is 0 on success, 1 on a failed claim, a size cap or an I/O error, 2 on bad
flags or input.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from typing import Optional, Sequence

from . import core, enumeration, movegraph
from .errors import CatmovesError, IoFailure, ParseError, ShapeTooLarge, SizeExceedsCap
from .verify import SUITES, run_suites

log = logging.getLogger("catmoves")

MOVES = {
    "typeA": movegraph.GeneratorKind.TYPE_A,
    "typeC": movegraph.GeneratorKind.TYPE_C,
    "all": movegraph.GeneratorKind.ALL_LOCAL_MOVES,
    "tableau": movegraph.GeneratorKind.TABLEAU_SHAPE,
}


class UsageError(Exception):
    """Flag combination rejected before any computation; exits with status 2."""


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _shape(text: str) -> core.Partition:
    try:
        return core.make_partition(int(x) for x in text.split(","))
    except (ValueError, CatmovesError) as exc:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}: {exc}")


def _open_out(path: Optional[str]):
    if path is None:
        return sys.stdout
    return open(path, "w", newline="")


def cmd_trees_enumerate(args) -> int:
    trees = enumeration.enumerate_trees(args.n, args.cap)
    out = _open_out(args.out)
    try:
        for rank, tree in enumerate(trees):
            if args.format == "jsonl":
                record = {"n": tree.n, "rank": rank, "tree": core.format_tree(tree), "pairs": [list(p) for p in tree.pairs]}
                out.write(json.dumps(record) + "\n")
            else:
                out.write(core.format_tree(tree) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_syt_enumerate(args) -> int:
    tableaux = enumeration.enumerate_syt(args.shape, args.cap)
    out = _open_out(args.out)
    try:
        for k, t in enumerate(tableaux):
            if args.format == "jsonl":
                out.write(json.dumps({"shape": list(t.shape.parts), "index": k, "tableau": core.format_tableau(t)}) + "\n")
            else:
                out.write(core.format_tableau(t) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _generators(args) -> movegraph.GeneratorSet:
    kind = MOVES[args.moves]
    if kind is movegraph.GeneratorKind.TABLEAU_SHAPE:
        if args.shape is None:
            raise UsageError("--moves tableau needs --shape")
        return movegraph.GeneratorSet.tableau(args.shape)
    if args.n is None:
        raise UsageError(f"--moves {args.moves} needs --n")
    return movegraph.GeneratorSet(kind)


def _build(args) -> movegraph.MoveGraph:
    gens = _generators(args)
    start = time.perf_counter()
    graph = movegraph.build_graph(gens, args.n, workers=args.workers, cap=args.cap)
    log.info("built graph in %.3fs", time.perf_counter() - start)
    return graph


def _summary(graph: movegraph.MoveGraph) -> str:
    comps = movegraph.connected_components(graph)
    sizes = ", ".join(map(str, sorted(comps.sizes, reverse=True)))
    return f"vertices: {graph.vertex_count}\nedges: {graph.edge_count}\ncomponents: {comps.component_count} (sizes {sizes})\n"


def cmd_graph(args) -> int:
    graph = _build(args)
    summary = _summary(graph)
    if args.format is None:
        sys.stdout.write(summary)
        return 0
    text = movegraph.dumps_graph(graph, args.format, loops=args.loops)
    if args.out:
        movegraph.export_graph(graph, args.format, args.out, loops=args.loops)
        sys.stdout.write(summary)
    else:
        sys.stdout.write(text)
        sys.stderr.write(summary)
    return 0


def cmd_verify(args) -> int:
    names = args.suite or ["all"]
    start = time.perf_counter()
    claims = run_suites(names, args.max_n)
    for claim in claims:
        print(claim.line())
    log.info("verified %d claims in %.2fs", len(claims), time.perf_counter() - start)
    return 0 if all(c.passed for c in claims) else 1


def cmd_ranks(args) -> int:
    if args.n is not None:
        sizes = [args.n]
    elif args.max_n is not None:
        sizes = list(range(args.min_n, args.max_n + 1))
    else:
        raise UsageError("ranks needs --n or --max-n")
    reports = [movegraph.grading_report(movegraph.build_graph("typeA", n, workers=args.workers, cap=args.cap)) for n in sizes]
    out = _open_out(args.out)
    try:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["n", "rank", "count", "unimodal"])
            for r in reports:
                for rank, count in r.rank_sequence():
                    writer.writerow([r.n, rank, count, str(r.is_unimodal).lower()])
        else:
            for r in reports:
                seq = " ".join(f"{rank}:{count}" for rank, count in r.rank_sequence())
                line = f"{seq}, unimodal={str(r.is_unimodal).lower()}"
                out.write((line if len(reports) == 1 else f"n={r.n} {line}") + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _vertex(graph: movegraph.MoveGraph, text: str) -> int:
    if text.strip().isdigit():
        return int(text)
    try:
        if graph.kind.kind is movegraph.GeneratorKind.TABLEAU_SHAPE:
            return graph.vertex_labels.index(core.format_tableau(core.parse_tableau(text)))
        return graph.vertex_labels.index(core.format_tree(core.parse_tree(text)))
    except ValueError:
        raise ParseError(f"{text!r} is not a vertex of this graph")


def cmd_path(args) -> int:
    graph = _build(args)
    u, v = _vertex(graph, args.source), _vertex(graph, args.target)
    steps = movegraph.witness_path(graph, u, v)
    if steps is None:
        print("no path")
        return 0
    print(f"length: {len(steps)}")
    for a, b, gen in steps:
        print(f"{graph.vertex_labels[a]} --{gen}--> {graph.vertex_labels[b]}")
    return 0


def cmd_word(args) -> int:
    source, target = core.parse_tableau(args.source), core.parse_tableau(args.target)
    print(" ".join(map(str, movegraph.connecting_word(source, target))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catmoves", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="timing and progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=None, default_format=None):
        p.add_argument("--cap", type=_positive, help="override the enumeration size cap")
        p.add_argument("--workers", type=_positive, default=1)
        p.add_argument("--out", help="write data here instead of stdout")
        if formats:
            p.add_argument("--format", choices=formats, default=default_format)

    trees = sub.add_parser("trees", help="plane trees").add_subparsers(dest="action", required=True)
    p = trees.add_parser("enumerate", help="list every tree with n edges")
    p.add_argument("--n", type=_positive, required=True)
    common(p, ["text", "jsonl"], "text")
    p.set_defaults(func=cmd_trees_enumerate)

    syt = sub.add_parser("syt", help="standard Young tableaux").add_subparsers(dest="action", required=True)
    p = syt.add_parser("enumerate", help="list every tableau of a shape")
    p.add_argument("--shape", type=_shape, required=True)
    common(p, ["text", "jsonl"], "text")
    p.set_defaults(func=cmd_syt_enumerate)

    for name, func, help_text in (
        ("graph", cmd_graph, "build a move graph, print a summary, optionally export it"),
        ("path", cmd_path, "shortest generator path between two vertices"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--moves", choices=list(MOVES), default="typeA")
        p.add_argument("--n", type=_positive)
        p.add_argument("--shape", type=_shape)
        if name == "graph":
            common(p, ["dot", "json", "csv"], None)
            p.add_argument("--loops", action="store_true", help="include fixed points as self-loops in dot/csv")
        else:
            common(p)
            p.add_argument("--from", dest="source", required=True, help="tree/tableau text or vertex id")
            p.add_argument("--to", dest="target", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run claim suites")
    p.add_argument("--suite", action="append", choices=["all", *SUITES])
    p.add_argument("--max-n", type=_positive, default=7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ranks", help="rank sequences of the typeA graph")
    p.add_argument("--n", type=_positive)
    p.add_argument("--min-n", type=_positive, default=1)
    p.add_argument("--max-n", type=_positive)
    common(p, ["text", "csv"], "text")
    p.set_defaults(func=cmd_ranks)

    p = sub.add_parser("word", help="connecting word between two (n,n) tableaux")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.set_defaults(func=cmd_word)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (SizeExceedsCap, ShapeTooLarge, IoFailure) as exc:
        print(f"catmoves: {exc}", file=sys.stderr)
        return 1
    except CatmovesError as exc:
        print(f"catmoves: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"catmoves: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
