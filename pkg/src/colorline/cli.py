"""Command-line front end.

One subcommand per recognizer plus the construction, oracle, gadget and
fixture utilities. Results go to stdout as a JSON certificate document with
stable key order; warnings go to stderr. Exit codes: 0 accept, 1 reject
(valid run), 2 input error, 3 capability or budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import __version__
from .colored import EdgeColoredGraph, color_line_graph
from .core import Graph
from .errors import CapabilityError, ColorlineError, GraphArgumentError, ParseError
from .fixtures import fixture, fixture_names
from .formats import (
    graph6_encode,
    parse_colored_edge_list,
    parse_edge_list,
    serialize_colored_edge_list,
    serialize_edge_list,
)
from .krausz import KrauszFamily, build_root_from_krausz, check_krausz_color, check_krausz_proper, find_mappings
from .linegraph import recognize_line_graph
from .oracles import (
    LineBigraphInstance,
    oracle_k_color_line,
    oracle_proper_k_color_line,
    reduce_line_bigraph_to_2cl,
)
from .recognize import (
    ProperCertificate,
    Refusal,
    check_partition_characterization,
    cubic_proper_root,
    recognize_proper_2,
    recognize_proper_k,
)

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_INPUT_ERROR = 2
EXIT_CAPABILITY = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _input_hash(normalized: str) -> str:
    return hashlib.sha256(normalized.encode("utf-8")).hexdigest()


def _budget() -> float | None:
    raw = os.environ.get("COLORLINE_BUDGET_SECS")
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError:
        raise GraphArgumentError(f"COLORLINE_BUDGET_SECS={raw!r} is not a number") from None


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def _witness_json(witness: object) -> object:
    if isinstance(witness, tuple) and len(witness) == 2 and isinstance(witness[0], str):
        return {"name": witness[0], "embedding": list(witness[1])}
    if isinstance(witness, tuple):
        return list(witness)
    return witness


def _certificate_document(input_hash: str, cert: ProperCertificate) -> dict:
    doc = {"tool_version": __version__, "input_hash": input_hash, "accept": cert.accept}
    if cert.accept:
        doc["k_used"] = cert.k_used
        doc["root"] = _graph_json(cert.root.graph)
        doc["coloring"] = list(cert.root.colors)
        doc["vertex_to_edge"] = [list(e) for e in cert.vertex_to_edge]
    else:
        doc["refusal"] = {
            "reason": cert.refusal.reason,
            "witness": _witness_json(cert.refusal.witness),
        }
    return doc


def _finish_certificate(g: Graph, cert: ProperCertificate) -> int:
    _emit(_certificate_document(_input_hash(serialize_edge_list(g)), cert))
    return EXIT_ACCEPT if cert.accept else EXIT_REJECT


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_cl(args: argparse.Namespace) -> int:
    colored = parse_colored_edge_list(_read_input(args.input))
    result = color_line_graph(colored)
    sys.stdout.write(serialize_edge_list(result.cl))
    sidecar = {
        "edge_of_vertex": [list(e) for e in result.edge_of_vertex],
        "l_edges": [list(e) for e in sorted(result.l_edges)],
        "c_edges": [list(e) for e in sorted(result.c_edges)],
        "proper": not (result.l_edges & result.c_edges)
        and _is_proper(colored),
    }
    if args.sidecar:
        with open(args.sidecar, "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, indent=2)
            fh.write("\n")
    return EXIT_ACCEPT


def _is_proper(colored: EdgeColoredGraph) -> bool:
    from .colored import validate_proper

    return validate_proper(colored)


def _cmd_recognize_line(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_input(args.input))
    cert = recognize_line_graph(g)
    doc = {
        "tool_version": __version__,
        "input_hash": _input_hash(serialize_edge_list(g)),
        "accept": cert.is_line,
        "is_line": cert.is_line,
    }
    if cert.is_line:
        doc["root"] = _graph_json(cert.root)
        doc["vertex_to_edge"] = [list(e) for e in cert.vertex_to_edge]
    else:
        idx, embedding = cert.violation
        doc["violation"] = {"catalog_index": idx, "embedding": list(embedding)}
    _emit(doc)
    return EXIT_ACCEPT if cert.is_line else EXIT_REJECT


def _cmd_recognize_proper_k(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_input(args.input))
    return _finish_certificate(g, recognize_proper_k(g, args.k))


def _cmd_recognize_proper_2(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_input(args.input))
    return _finish_certificate(g, recognize_proper_2(g))


def _cmd_cubic_root(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_input(args.input))
    return _finish_certificate(g, cubic_proper_root(g))


def _parse_family(raw: str) -> KrauszFamily | tuple:
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"family is not valid JSON: {exc}") from None
    if "cliques" not in data:
        raise ParseError("family JSON needs a 'cliques' key")
    cliques = tuple(frozenset(int(v) for v in c) for c in data["cliques"])
    if "map_f" in data or "map_w" in data:
        map_f = {tuple(sorted(map(int, e))): int(i) for e, i in data.get("map_f", [])}
        map_w = {int(v): int(i) for v, i in data.get("map_w", [])}
        return KrauszFamily(cliques, map_f, map_w)
    return ("search", cliques)


def _cmd_check_krausz(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_input(args.input))
    parsed = _parse_family(args.family)
    if isinstance(parsed, tuple):
        fam = find_mappings(g, parsed[1], proper=args.proper)
        if fam is None:
            doc = {
                "tool_version": __version__,
                "input_hash": _input_hash(serialize_edge_list(g)),
                "accept": False,
                "refusal": {"reason": "no_valid_mappings", "witness": None},
            }
            _emit(doc)
            return EXIT_REJECT
    else:
        fam = parsed
    check = check_krausz_proper if args.proper else check_krausz_color
    ok, tag = check(g, fam)
    doc = {
        "tool_version": __version__,
        "input_hash": _input_hash(serialize_edge_list(g)),
        "accept": ok,
    }
    if ok:
        root, v2e = build_root_from_krausz(g, fam)
        doc["k_used"] = root.k
        doc["root"] = _graph_json(root.graph)
        doc["coloring"] = list(root.colors)
        doc["vertex_to_edge"] = [list(e) for e in v2e]
    else:
        doc["refusal"] = {"reason": f"condition_{tag}", "witness": None}
    _emit(doc)
    return EXIT_ACCEPT if ok else EXIT_REJECT


def _cmd_check_partition(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_input(args.input))
    try:
        classes = json.loads(args.classes)
    except json.JSONDecodeError as exc:
        raise ParseError(f"classes are not valid JSON: {exc}") from None
    partition = tuple(frozenset(int(v) for v in cls) for cls in classes)
    cert = check_partition_characterization(g, partition)
    if cert is None:
        cert = ProperCertificate(
            refusal=Refusal("exhausted_partitions", witness={"partitions_tried": 1})
        )
    return _finish_certificate(g, cert)


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_input(args.input))
    budget = _budget()
    input_hash = _input_hash(serialize_edge_list(g))
    if args.mode == "proper":
        cert = oracle_proper_k_color_line(g, args.k, budget_secs=budget)
        if cert is None:
            cert = ProperCertificate(refusal=Refusal("exhausted_partitions", witness=None))
        return _finish_certificate(g, cert)
    witness = oracle_k_color_line(g, args.k, budget_secs=budget)
    doc = {"tool_version": __version__, "input_hash": input_hash, "accept": witness is not None}
    if witness is not None:
        doc["k_used"] = witness.k
        doc["root"] = _graph_json(witness.graph)
        doc["coloring"] = list(witness.colors)
    else:
        doc["refusal"] = {"reason": "exhausted_partitions", "witness": None}
    _emit(doc)
    return EXIT_ACCEPT if witness is not None else EXIT_REJECT


def _cmd_reduce_bigraph(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    lines = [
        ln.split("#", 1)[0].strip()
        for ln in text.splitlines()
        if ln.split("#", 1)[0].strip()
    ]
    if not lines:
        raise ParseError("empty input", None)
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError(f"expected 'nx ny m', got {lines[0]!r}", 1)
    nx, ny, m = (int(x) for x in head)
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(lines) - 1}", 1)
    edges = set()
    for ln in lines[1:]:
        i, j = (int(x) for x in ln.split())
        edges.add((i, j))
    instance = LineBigraphInstance(nx, ny, frozenset(edges))
    sys.stdout.write(serialize_edge_list(reduce_line_bigraph_to_2cl(instance)))
    return EXIT_ACCEPT


def _cmd_fixtures(args: argparse.Namespace) -> int:
    if args.action == "list":
        sys.stdout.write("\n".join(fixture_names()) + "\n")
        return EXIT_ACCEPT
    if not args.name:
        raise GraphArgumentError("fixtures emit needs a name")
    item = fixture(args.name)
    if isinstance(item, EdgeColoredGraph):
        sys.stdout.write(serialize_colored_edge_list(item))
    elif args.format == "graph6":
        sys.stdout.write(graph6_encode(item) + "\n")
    else:
        sys.stdout.write(serialize_edge_list(item))
    return EXIT_ACCEPT


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorline",
        description="Color-line graph construction, recognition and oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        p.add_argument("input", nargs="?", default="-", help="input path or '-' for stdin")
        return p

    p = add("cl", _cmd_cl, "color-line graph of a colored edge list")
    p.add_argument("--sidecar", help="write the JSON sidecar to this path")

    add("recognize-line", _cmd_recognize_line, "line-graph recognition with root")

    p = add("recognize-proper-k", _cmd_recognize_proper_k, "proper k-color-line recognition")
    p.add_argument("--k", type=int, required=True)

    add("recognize-proper-2", _cmd_recognize_proper_2, "proper 2-color-line recognition")
    add("cubic-root", _cmd_cubic_root, "root for a bridgeless cubic graph")

    p = add("check-krausz", _cmd_check_krausz, "check a clique family certificate")
    p.add_argument("--family", required=True, help="JSON {cliques, map_f?, map_w?}")
    p.add_argument("--proper", action="store_true")

    p = add("check-partition", _cmd_check_partition, "check a vertex clique partition")
    p.add_argument("--classes", required=True, help="JSON list of vertex lists")

    p = add("oracle", _cmd_oracle, "exhaustive (proper) k-color-line oracle")
    p.add_argument("--mode", choices=("kcl", "proper"), required=True)
    p.add_argument("--k", type=int, required=True)

    add("reduce-bigraph", _cmd_reduce_bigraph, "bipartite instance to 2-color-line gadget")

    p = sub.add_parser("fixtures", help="list or emit named fixtures")
    p.set_defaults(handler=_cmd_fixtures)
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, GraphArgumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except ColorlineError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY


if __name__ == "__main__":
    sys.exit(main())
