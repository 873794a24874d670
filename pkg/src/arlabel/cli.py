"""Command-line interface: ``arlabel {gen,verify,construct,index,lemma,witness-cache}``.

Structured results go to stdout (or ``--out``) as JSON; graphs from ``gen`` use
the format chosen with ``--format``.  Summaries and errors go to stderr.

Exit codes: 0 success, 1 verification failed or graph not AR, 2 parse or
parameter error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as gio
from .constructors import construct, label_cycle_covered, label_hamiltonian_cubic
from .constructors.witnesses import regenerate
from .errors import (
    ARLabelError,
    BaseNotAR,
    BudgetExceeded,
    ConstructionFailed,
    Infeasible,
)
from .graph import Family, FamilySpec, Graph, generate, is_cubic
from .lemmas import forbidden_fourth, fourth_label_ok, third_label_ok
from .search import SearchConfig, ar_index, bounds
from .verify import verify_labeling

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
FORMATS = ("edge_list", "graph6", "json")
FAMILY_PARAMS = ("n", "r", "t", "copies", "n1", "length", "p", "q")


def _add_family(p: argparse.ArgumentParser, required: bool = False) -> None:
    p.add_argument("--family", choices=[f.value for f in Family], required=required)
    for name in FAMILY_PARAMS:
        p.add_argument(f"--{name}", type=int, default=None)


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, default=None, help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arlabel", description="AR-labelings: generate, verify, construct, search.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph")
    _add_family(p, required=True)
    p.add_argument("--format", choices=FORMATS, default="edge_list")
    _add_output(p)

    p = sub.add_parser("verify", help="check a labeling")
    p.add_argument("--graph", type=Path, help="graph file (default: labeled JSON on stdin)")
    p.add_argument("--labels", type=Path, help="JSON list of labels, or a labeled-graph document")
    p.add_argument("--format", choices=FORMATS, default=None, help="graph format (default: detect)")
    p.add_argument("--compact", action="store_true", help="also require labels exactly 1..m")
    _add_output(p)

    p = sub.add_parser("construct", help="compact labeling from a family construction")
    _add_family(p)
    p.add_argument("--graph", type=Path, help="graph file; '-' reads stdin")
    p.add_argument("--format", choices=FORMATS, default=None)
    _add_output(p)

    p = sub.add_parser("index", help="exact AR-index by branch and bound")
    p.add_argument("--graph", type=Path, help="graph file (default: stdin)")
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--budget", type=int, default=10 ** 8, help="node budget")
    p.add_argument("--parallel", action="store_true")
    _add_output(p)

    p = sub.add_parser("lemma", help="evaluate the small-set lemmas")
    lsub = p.add_subparsers(dest="lemma", required=True)
    q = lsub.add_parser("forbidden-fourth", help="labels that cannot join a sum-distinct triple")
    q.add_argument("labels", type=int, nargs=3)
    _add_output(q)
    q = lsub.add_parser("third-label", help="can z join the pair {x, y}")
    q.add_argument("labels", type=int, nargs=3, metavar="X Y Z")
    _add_output(q)
    q = lsub.add_parser("fourth-label", help="can a4 join the triple a1 < a2 < a3")
    q.add_argument("labels", type=int, nargs=4)
    _add_output(q)

    p = sub.add_parser("witness-cache", help="maintain the cached base labelings")
    wsub = p.add_subparsers(dest="action", required=True)
    q = wsub.add_parser("regenerate", help="re-derive every cached witness")
    q.add_argument("--check", action="store_true", help="compare only; do not rewrite the cache")
    q.add_argument("--path", type=Path, default=None)
    _add_output(q)
    return ap


# ---------------------------------------------------------------------------
# helpers


def _family_spec(args) -> FamilySpec:
    params = {k: getattr(args, k) for k in FAMILY_PARAMS if getattr(args, k) is not None}
    return FamilySpec.of(args.family, **params)


def _read_text(path: Path | None) -> str:
    if path is None or str(path) == "-":
        return sys.stdin.read()
    return path.read_text()


def _read_graph(path: Path | None, fmt: str | None) -> Graph:
    text = _read_text(path)
    return gio.parse_graph(text, fmt or gio.detect_format(text))


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None) is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    graph = generate(_family_spec(args))
    if args.format == "graph6":
        text = gio.emit_graph6(graph)
    elif args.format == "json":
        text = gio.emit_graph_json(graph)
    else:
        text = gio.emit_edge_list(graph)
    _emit(args, text)
    _note(f"{args.family}: n={graph.n} m={graph.m}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.graph is None and args.labels is None:
        graph, labels = gio.parse_labeled(sys.stdin.read())
    elif args.labels is None:
        text = _read_text(args.graph)
        graph, labels = gio.parse_labeled(text)
    else:
        labels = gio.parse_labels(args.labels.read_text())
        graph = _read_graph(args.graph, args.format)
    report = verify_labeling(graph, labels, require_compact=args.compact)
    _emit(args, report.to_json())
    if report.ok:
        _note(f"ok: AR-labeling{' with labels 1..%d' % graph.m if report.is_compact else ''}")
        return EXIT_OK
    bad = [f.vertex for f in report.failing_vertices]
    why = f"failing vertices {bad}" if bad else ("labels not injective and positive" if not report.injectivity_ok else f"labels are not 1..{graph.m}")
    _note(f"FAIL: {why}")
    return EXIT_FAIL


def _construct_for_graph(graph: Graph):
    if is_cubic(graph):
        try:
            return label_hamiltonian_cubic(graph)
        except ARLabelError:
            pass
    return label_cycle_covered(graph)


def _piped_stdin() -> str:
    """Stdin text when something is piped in, else an empty string."""
    try:
        if sys.stdin is None or sys.stdin.isatty():
            return ""
        return sys.stdin.read()
    except (OSError, ValueError):
        return ""


def cmd_construct(args) -> int:
    piped = None
    if args.graph is not None:
        piped = _read_graph(args.graph, args.format)
    else:
        text = _piped_stdin()
        if text.strip():
            piped = gio.parse_graph(text, args.format or gio.detect_format(text))
    if args.family is None and piped is None:
        _note("construct needs --family or a graph (--graph or stdin)")
        return EXIT_USAGE
    if args.family is not None:
        spec = _family_spec(args)
        outcome = construct(spec)
        if piped is not None and piped.edges != outcome.graph.edges:
            _note("input graph does not match the generated family graph")
            return EXIT_USAGE
    else:
        outcome = _construct_for_graph(piped)
    _emit(args, json.dumps(outcome.to_dict()))
    for w in outcome.warnings:
        _note(f"warning: {w}")
    _note(f"constructed labels 1..{outcome.graph.m}" + (f" ({len(outcome.repairs)} repair(s))" if outcome.repairs else ""))
    return EXIT_OK


def cmd_index(args) -> int:
    graph = _read_graph(args.graph, args.format)
    config = SearchConfig(max_k=args.max_k, node_budget=args.budget, parallel=args.parallel)
    try:
        result = ar_index(graph, config)
    except BudgetExceeded as exc:
        lo, hi = (exc.lower, exc.upper) if exc.lower is not None else bounds(graph)
        _emit(args, json.dumps({"ari": None, "lower": lo, "upper": hi, "nodes": exc.nodes}))
        _note(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    _emit(args, result.to_json(graph))
    _note(f"ARI = {result.value} ({'AR-graph' if result.value == graph.m else 'not an AR-graph'}), {result.nodes_explored} nodes")
    return EXIT_OK


def cmd_lemma(args) -> int:
    if args.lemma == "forbidden-fourth":
        a1, a2, a3 = args.labels
        _emit(args, json.dumps(sorted(forbidden_fourth(a1, a2, a3))))
        return EXIT_OK
    if args.lemma == "third-label":
        ok = third_label_ok(*args.labels)
    else:
        ok = fourth_label_ok(*args.labels)
    _emit(args, json.dumps({"ok": ok}))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_witness_cache(args) -> int:
    summary = regenerate(args.path, write=not args.check)
    _emit(args, json.dumps(summary))
    _note(f"{summary['entries']} witnesses re-derived; all verified: {summary['all_verified']}")
    return EXIT_OK if summary["all_verified"] else EXIT_FAIL


COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "construct": cmd_construct,
    "index": cmd_index,
    "lemma": cmd_lemma,
    "witness-cache": cmd_witness_cache,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        _note(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    except (Infeasible, BaseNotAR, ConstructionFailed) as exc:
        _note(f"not constructible: {exc}")
        return EXIT_FAIL
    except (ARLabelError, ValueError, OSError) as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
