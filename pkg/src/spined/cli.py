"""Command-line interface: ``spined width|laws|compare|generate``.

Reports go to stdout as JSON with sorted keys; diagnostics go to stderr.
Exit codes: 0 ok, 2 bad input or parameters, 3 oracle bound exceeded,
4 width/oracle disagreement, 5 law violation.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .category import (
    LawReport,
    check_category_laws,
    check_sc1,
    check_sc2,
    check_sfunctor_laws,
)
from .errors import BoundExceeded, ParseError, RangeError
from .formats import GRAPH_FORMATS, HYPERGRAPH_FORMATS, emit_graph, load
from .generators import (
    FAMILIES,
    all_graphs,
    family,
    random_diagrams,
    random_graphs,
    random_hyper_diagrams,
    random_hypergraph,
    random_mono_pairs,
)
from .graph import SimpleGraph
from .hypergraph import Hypergraph, all_hypergraphs, primal_graph
from .triangulation import (
    GRAPHS,
    NAT,
    Convention,
    delta,
    delta_graph,
    hyper_delta,
    hyper_omega,
    hypergraph_delta,
    nat_identity,
    omega,
    treewidth_oracle,
)
from .hypergraph import HypergraphCategory

EXIT_OK, EXIT_INPUT, EXIT_BOUND, EXIT_DISAGREE, EXIT_LAW = 0, 2, 3, 4, 5
SCHEMA = 1
SUITES = ("sc1", "sc2", "sfunctor", "category")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _elapsed_ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


def _report(command: str, input_: Any, results: Any, start: float) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": command,
        "version": __version__,
        "input": input_,
        "results": results,
        "elapsed_ms": _elapsed_ms(start),
    }


def _emit(report: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def _load(path: str, fmt: str | None) -> SimpleGraph | Hypergraph:
    try:
        return load(path, fmt)
    except (ParseError, RangeError, ValueError, OSError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from exc


def cmd_width(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    obj = _load(args.input, args.format)
    convention = Convention(args.convention)
    if isinstance(obj, Hypergraph):
        width = hypergraph_delta(obj)
        graph = primal_graph(obj)
        kind = "hypergraph"
    else:
        width = delta_graph(obj)
        graph = obj
        kind = "graph"
    result: dict[str, Any] = {
        "graph": {"name": Path(args.input).name, "kind": kind, "vertices": graph.vertex_count,
                  "edges": graph.edge_count},
        "delta": width.to(convention).value,
        "convention": convention.value,
    }
    code = EXIT_OK
    if args.oracle:
        try:
            oracle = treewidth_oracle(graph)
        except BoundExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BOUND
        result["oracle"] = oracle.to(convention).value
        result["agrees"] = oracle.to(Convention.PAPER).value == width.value
        if not result["agrees"]:
            print("error: width and oracle disagree", file=sys.stderr)
            code = EXIT_DISAGREE
    result["elapsed_ms"] = _elapsed_ms(start)
    _emit(_report("width", {"path": Path(args.input).name, "format": args.format}, result, start))
    return code


def _graph_suites(suites, max_vertices, samples, seed):
    reports = []
    if "category" in suites:
        population = random_graphs(min(samples, 8), 0, min(max_vertices, 4), seed)
        reports.append(check_category_laws(GRAPHS, population, limit=24))
    if "sc1" in suites:
        population = [G for n in range(max_vertices + 1) for G in all_graphs(n)]
        reports.append(check_sc1(GRAPHS, population))
    if "sc2" in suites:
        reports.append(check_sc2(GRAPHS, random_diagrams(samples, max_vertices, seed)))
    if "sfunctor" in suites:
        population = random_graphs(min(samples, 30), 1, max_vertices, seed)
        spans = [(g, h) for g, h, _, _ in random_diagrams(samples, 2 * max_vertices, seed + 1)]
        monos = random_mono_pairs(samples, 1, 2 * max_vertices, seed + 2)
        for f in (omega, delta):
            reports.append(check_sfunctor_laws(GRAPHS, f, population, spans, 6, monos))
    return reports


def _hypergraph_suites(suites, max_vertices, samples, seed):
    rng = random.Random(seed)
    instance = HypergraphCategory()
    population = [
        random_hypergraph(rng.randint(0, max_vertices), rng.randint(0, 4), 3, rng)
        for _ in range(min(samples, 20))
    ]
    reports = []
    if "category" in suites:
        reports.append(check_category_laws(instance, population[:8], limit=24))
    if "sc1" in suites:
        exhaustive = [H for n in range(min(max_vertices, 3) + 1) for H in all_hypergraphs(n)]
        reports.append(check_sc1(instance, exhaustive + population))
    if "sc2" in suites:
        reports.append(check_sc2(instance, random_hyper_diagrams(samples, max_vertices, seed)))
    if "sfunctor" in suites:
        spans = [(g, h) for g, h, _, _ in random_hyper_diagrams(samples, 2 * max_vertices, seed + 1)]
        for f in (hyper_omega, hyper_delta):
            reports.append(check_sfunctor_laws(instance, f, population, spans, 6))
    return reports


def _nat_suites(suites, max_vertices, samples, seed):
    top = max(max_vertices, 0)
    reports = []
    if "category" in suites:
        reports.append(check_category_laws(NAT, list(range(top + 1))))
    if "sc1" in suites:
        reports.append(check_sc1(NAT, range(top + 1)))
    if "sc2" in suites:
        diagrams = [
            (NAT.hom(n, a)[0], NAT.hom(n, b)[0], NAT.hom(a, a2)[0], NAT.hom(b, b2)[0])
            for n in range(top + 1) for a in range(n, top + 1) for b in range(n, top + 1)
            for a2 in range(a, top + 1) for b2 in range(b, top + 1)
        ]
        reports.append(check_sc2(NAT, diagrams))
    if "sfunctor" in suites:
        spans = [(NAT.hom(n, a)[0], NAT.hom(n, b)[0])
                 for n in range(top + 1) for a in range(n, top + 1) for b in range(n, top + 1)]
        reports.append(check_sfunctor_laws(NAT, nat_identity, list(range(top + 1)), spans, top))
    return reports


_INSTANCES = {"graph": _graph_suites, "hypergraph": _hypergraph_suites, "nat": _nat_suites}


def cmd_laws(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    if args.max_vertices < 0 or args.samples < 0:
        raise CliError("--max-vertices and --samples must be non-negative", EXIT_INPUT)
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports: list[LawReport] = _INSTANCES[args.instance](
        suites, args.max_vertices, args.samples, args.seed
    )
    results = {
        "reports": [json.loads(r.to_json()) for r in reports],
        "passed": all(r.passed for r in reports),
    }
    input_ = {"suite": args.suite, "instance": args.instance, "max_vertices": args.max_vertices,
              "samples": args.samples, "seed": args.seed}
    _emit(_report("laws", input_, results, start))
    if not results["passed"]:
        print("error: law violation", file=sys.stderr)
        return EXIT_LAW
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise CliError(f"{corpus} is not a directory", EXIT_INPUT)
    rows = []
    summary = {"files": 0, "compared": 0, "agreed": 0, "disagreed": 0, "errors": 0, "skipped": 0}
    for path in sorted(p for p in corpus.iterdir() if p.is_file()):
        summary["files"] += 1
        row: dict[str, Any] = {"file": path.name}
        t0 = time.perf_counter()
        try:
            obj = load(path)
        except (ParseError, RangeError, ValueError, OSError) as exc:
            row.update(status="error", detail=str(exc))
            summary["errors"] += 1
            rows.append(row)
            continue
        graph = primal_graph(obj) if isinstance(obj, Hypergraph) else obj
        row.update(vertices=graph.vertex_count, edges=graph.edge_count)
        if args.max_vertices is not None and graph.vertex_count > args.max_vertices:
            row["status"] = "skipped"
            summary["skipped"] += 1
            rows.append(row)
            continue
        try:
            oracle = treewidth_oracle(graph)
        except BoundExceeded as exc:
            row.update(status="error", detail=str(exc))
            summary["errors"] += 1
            rows.append(row)
            continue
        width = delta_graph(graph)
        agrees = width.value == oracle.to(Convention.PAPER).value
        row.update(
            delta_paper=width.value,
            oracle_standard=oracle.value,
            agrees=agrees,
            status="ok",
            elapsed_ms=_elapsed_ms(t0),
        )
        summary["compared"] += 1
        summary["agreed" if agrees else "disagreed"] += 1
        rows.append(row)
    input_ = {"corpus": corpus.name, "max_vertices": args.max_vertices}
    _emit(_report("compare", input_, {"rows": rows, "summary": summary}, start))
    if summary["disagreed"]:
        print("error: width and oracle disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    if args.n < 0:
        raise CliError("--n must be non-negative", EXIT_INPUT)
    try:
        G = family(args.family, args.n, args.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    text = emit_graph(G, "edgelist")
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    Path(args.out).write_text(text, encoding="utf-8")
    input_ = {"family": args.family, "n": args.n, "seed": args.seed}
    results = {"out": str(args.out), "vertices": G.vertex_count, "edges": G.edge_count}
    _emit(_report("generate", input_, results, start))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spined", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("width", help="triangulation width of a graph or hypergraph file")
    p.add_argument("input")
    p.add_argument("--format", choices=GRAPH_FORMATS + HYPERGRAPH_FORMATS)
    p.add_argument("--convention", choices=[c.value for c in Convention], default="paper")
    p.add_argument("--oracle", action="store_true", help="also run the exact treewidth oracle")
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("laws", help="check spined-category and S-functor laws")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--instance", choices=sorted(_INSTANCES), default="graph")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("compare", help="compare widths with the oracle over a corpus")
    p.add_argument("corpus")
    p.add_argument("--max-vertices", type=int, default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="write a graph from a named family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
