"""
💻 CFC LAB COMMAND LINE
Thin argparse front end over the library. Exit codes: 0 success, 1 failed check or
verification, 2 usage error, 3 input error.
"""

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import structlog

from . import __version__
from .alpha import independence_number
from .coloring import is_conflict_free_connected
from .config import LabConfig
from .construct import (
    color_H,
    color_path_ruler,
    color_Q,
    color_star,
    color_tree_via_theorem2,
    color_via_theorem1,
)
from .errors import BudgetExceeded, CfcLabError
from .families import Family, FamilySpec, enumerate_connected_graphs, enumerate_trees, gen
from .formats import (
    format_colored_edge_list,
    format_graph,
    parse_colored_edge_list,
    parse_graph,
    read_text,
    write_text,
)
from .graph import Graph, cut_edges, is_tree, max_degree
from .harness import CheckId, make_bounds, run_all
from .logging_config import configure_logging
from .solver import cfc_exact, cfc_lower_bound, h_value, lemma7_upper_bound, theorem2_hypothesis

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def _load_graph(args: argparse.Namespace) -> Graph:
    return parse_graph(read_text(args.graph), args.input_format)


def _write_json(location: Optional[str], payload: str) -> None:
    if location:
        write_text(location, payload if payload.endswith("\n") else payload + "\n")


def _cmd_alpha(args: argparse.Namespace, config: LabConfig) -> int:
    result = independence_number(_load_graph(args))
    print(result.value)
    print("witness: " + " ".join(str(v) for v in sorted(result.witness)))
    return EXIT_OK


def _cmd_cfc_exact(args: argparse.Namespace, config: LabConfig) -> int:
    g = _load_graph(args)
    if args.edge_limit is not None:
        config = config.with_overrides(edge_limit=args.edge_limit)
    try:
        result = cfc_exact(g, args.cap, trust_cited_bounds=not args.no_cited_bounds, config=config)
    except BudgetExceeded as exc:
        print(f"no coloring within {exc.cap} colors", file=sys.stderr)
        return EXIT_FAILED
    print(result.value)
    if args.emit_witness:
        write_text(args.emit_witness, format_colored_edge_list(result.witness))
    _write_json(args.stats_json, json.dumps(
        {"value": result.value, "lower_bound": result.lower_bound, **result.stats.to_dict()},
        indent=2,
    ))
    return EXIT_OK


_SIMPLE_COLORERS: Dict[str, Callable[[int], object]] = {
    "hk": color_H,
    "qk": color_Q,
    "star": color_star,
}


def _cmd_cfc_construct(args: argparse.Namespace, config: LabConfig) -> int:
    trace = None
    if args.method in ("theorem1", "theorem2"):
        if not args.graph:
            args.parser.error(f"--method {args.method} needs a graph file")
        g = _load_graph(args)
        colorer = color_via_theorem1 if args.method == "theorem1" else color_tree_via_theorem2
        coloring, trace = colorer(g)
    elif args.method == "path":
        if args.edges is None:
            args.parser.error("--method path needs --edges")
        coloring = color_path_ruler(args.edges)
    else:
        if args.k is None:
            args.parser.error(f"--method {args.method} needs --k")
        coloring = _SIMPLE_COLORERS[args.method](args.k)
    write_text(args.output, format_colored_edge_list(coloring))
    if args.trace_json:
        if trace is None:
            args.parser.error("--trace-json is only available for theorem1 and theorem2")
        _write_json(args.trace_json, trace.model_dump_json(indent=2))
    return EXIT_OK


def _cmd_cfc_bounds(args: argparse.Namespace, config: LabConfig) -> int:
    g = _load_graph(args)
    alpha = independence_number(g).value
    print(f"lower bound: {cfc_lower_bound(g, config)}")
    print(f"alpha: {alpha}")
    if cut_edges(g):
        print(f"h: {h_value(g, config=config)}")
    else:
        print("h: undefined (no cut-edges)")
    if is_tree(g):
        delta = max_degree(g)
        if delta >= 3:
            print(f"tree upper bound: {lemma7_upper_bound(g):.6f}")
        verdict = "holds" if theorem2_hypothesis(delta, alpha) else "fails"
        print(f"2*Delta >= alpha + 2: {verdict}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, config: LabConfig) -> int:
    coloring = parse_colored_edge_list(read_text(args.coloring))
    cert = is_conflict_free_connected(coloring)
    print(f"conflict-free connected: {'yes' if cert.passed else 'no'}")
    print(f"certificate pairs: {len(cert.pairs)}")
    if cert.failing_pair is not None:
        print(f"failing pair: {cert.failing_pair[0]} {cert.failing_pair[1]}")
    _write_json(args.certificate_json, cert.model_dump_json(indent=2))
    return EXIT_OK if cert.passed else EXIT_FAILED


def _cmd_gen(args: argparse.Namespace, config: LabConfig) -> int:
    spec = FamilySpec(family=Family(args.family), n=args.n, k=args.k, l=args.l, m=args.edges,
                      seed=config.seed)
    write_text(args.output, format_graph(gen(spec), args.graph_format))
    return EXIT_OK


def _cmd_enum(args: argparse.Namespace, config: LabConfig) -> int:
    if args.kind == "trees":
        graphs = enumerate_trees(args.n, method=args.method or "augment")
    else:
        graphs = enumerate_connected_graphs(args.n, method=args.method or "augment")
    target = Path(args.output)
    target.mkdir(parents=True, exist_ok=True)
    prefix = "tree" if args.kind == "trees" else "graph"
    for index, g in enumerate(graphs):
        path = target / f"{prefix}_n{args.n}_{index:04d}.el"
        path.write_text(format_graph(g), encoding="utf-8")
    print(len(graphs))
    return EXIT_OK


def _cmd_harness_run(args: argparse.Namespace, config: LabConfig) -> int:
    bounds = make_bounds(max_n_graphs=args.max_n_graphs, max_n_trees=args.max_n_trees,
                         edge_limit=args.edge_limit, random_trees=args.random_trees)
    checks = [CheckId(c) for c in args.check] if args.check else None
    report = run_all(bounds, seed=config.seed, config=config, check_ids=checks)
    write_text(args.output, report.render(args.format))
    if not report.passed:
        failed = [c.check_id.value for c in report.checks if not c.passed]
        print(f"failed checks: {', '.join(failed)}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED


def _graph_argument(parser: argparse.ArgumentParser, optional: bool = False) -> None:
    parser.add_argument("graph", nargs="?" if optional else None,
                        help="graph file (edge-list or graph6), '-' for standard input")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfc-lab", description="Conflict-free connection coloring lab")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes for the harness (default and 0: all cores)")
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    parser.add_argument("--seed", type=int, default=None, help="falls back to CFC_LAB_SEED")
    parser.add_argument("--input-format", default="auto", choices=["auto", "el", "g6"])
    commands = parser.add_subparsers(dest="command", required=True)

    alpha = commands.add_parser("alpha", help="independence number")
    _graph_argument(alpha)
    alpha.set_defaults(handler=_cmd_alpha)

    cfc = commands.add_parser("cfc", help="conflict-free connection number tools")
    cfc_commands = cfc.add_subparsers(dest="cfc_command", required=True)

    exact = cfc_commands.add_parser("exact", help="exact cfc with an optimal witness")
    _graph_argument(exact)
    exact.add_argument("--cap", type=int, default=None, help="give up above this many colors")
    exact.add_argument("--edge-limit", type=int, default=None)
    exact.add_argument("--emit-witness", metavar="FILE")
    exact.add_argument("--stats-json", metavar="FILE")
    exact.add_argument("--no-cited-bounds", action="store_true",
                       help="start the search from the elementary lower bound only")
    exact.set_defaults(handler=_cmd_cfc_exact)

    construct = cfc_commands.add_parser("construct", help="constructive colorings")
    _graph_argument(construct, optional=True)
    construct.add_argument("--method", required=True,
                           choices=["theorem1", "theorem2", "hk", "qk", "star", "path"])
    construct.add_argument("--k", type=int)
    construct.add_argument("--edges", type=int)
    construct.add_argument("-o", "--output", default="-")
    construct.add_argument("--trace-json", metavar="FILE")
    construct.set_defaults(handler=_cmd_cfc_construct, parser=construct)

    bounds = cfc_commands.add_parser("bounds", help="lower and upper bounds")
    _graph_argument(bounds)
    bounds.set_defaults(handler=_cmd_cfc_bounds)

    verify = commands.add_parser("verify-coloring", help="check a colored edge-list")
    verify.add_argument("coloring", help="colored edge-list file, '-' for standard input")
    verify.add_argument("--certificate-json", metavar="FILE")
    verify.set_defaults(handler=_cmd_verify)

    generate = commands.add_parser("gen", help="generate a named graph family")
    generate.add_argument("family", choices=[f.value for f in Family])
    generate.add_argument("--n", type=int)
    generate.add_argument("--k", type=int)
    generate.add_argument("--l", type=int)
    generate.add_argument("--edges", type=int)
    generate.add_argument("--seed", type=int, default=None, dest="local_seed")
    generate.add_argument("-o", "--output", default="-")
    generate.add_argument("--graph-format", default="el", choices=["el", "g6"])
    generate.set_defaults(handler=_cmd_gen)

    enum = commands.add_parser("enum", help="enumerate non-isomorphic trees or connected graphs")
    enum.add_argument("kind", choices=["trees", "graphs"])
    enum.add_argument("n", type=int)
    enum.add_argument("-o", "--output", required=True, help="output directory")
    enum.add_argument("--method", choices=["augment", "levels", "prufer", "subsets"])
    enum.set_defaults(handler=_cmd_enum)

    harness = commands.add_parser("harness", help="verification battery")
    harness_commands = harness.add_subparsers(dest="harness_command", required=True)
    run = harness_commands.add_parser("run", help="run checks and write a report")
    run.add_argument("--check", action="append", choices=[c.value for c in CheckId])
    run.add_argument("--max-n-graphs", type=int)
    run.add_argument("--max-n-trees", type=int)
    run.add_argument("--random-trees", type=int)
    run.add_argument("--edge-limit", type=int)
    run.add_argument("--seed", type=int, default=None, dest="local_seed")
    run.add_argument("-o", "--output", default="-")
    run.add_argument("--format", default="json", choices=["json", "csv", "text"])
    run.set_defaults(handler=_cmd_harness_run)

    return parser


def resolve_threads(requested: Optional[int]) -> Optional[int]:
    """Worker count for a command. An explicit flag wins, then CFC_LAB_THREADS, then all cores."""
    if requested is None and os.getenv("CFC_LAB_THREADS"):
        return None
    if requested is None or requested == 0:
        return os.cpu_count() or 1
    return max(1, requested)


def _config_from(args: argparse.Namespace) -> LabConfig:
    threads = resolve_threads(args.threads)
    seed = getattr(args, "local_seed", None)
    return LabConfig.from_env().with_overrides(
        seed=seed if seed is not None else args.seed,
        threads=threads,
        log_level=args.log_level,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    config = _config_from(args)
    configure_logging(config.log_level, config.log_json)
    try:
        return args.handler(args, config)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    except (CfcLabError, OSError) as exc:
        logger.debug("💥 command failed", command=args.command, error=str(exc))
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))
