"""Command-line front end.

    python -m intervaltotal generate --family wheel --n 6
    python -m intervaltotal color --family wheel --n 6 --t 6 -o cert.json
    python -m intervaltotal verify cert.json
    python -m intervaltotal spectrum --family complete --n 4

Exit status: 0 on success, 1 for an invalid certificate or an infeasible
single-t search, 2 for usage errors, 3 when the search node budget runs out.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bounds import bound_report
from .coloring import (
    CertificateError,
    certificate_from_json,
    certificate_to_json,
    invert,
    verify_interval_total,
)
from .constructions import ConstructionError, color_regular_bipartite, color_tree, construct
from .graph import FAMILIES, REGULAR_BIPARTITE_NAMES, FamilySpec, Graph, generate, graph_from_json, graph_to_json, is_tree, to_dot
from .search import BudgetExhausted, SearchConfig, compute_spectrum, exists_coloring
from .transform import lift_coloring, lifted_from_json, lifted_to_json, verify_interval_edge

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _add_output(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("-o", "--output", help="write to this file instead of stdout")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int, help="size; for wheels the total vertex count")
    p.add_argument("--m", type=int, help="first part size for complete_bipartite")
    p.add_argument("--seed", type=int, default=0, help="seed for tree_random (default 0)")
    p.add_argument("--name", choices=REGULAR_BIPARTITE_NAMES, help="instance for regular_bipartite_named")
    p.add_argument("--graph", type=Path, help="graph JSON file instead of --family")


def _add_search(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, help="node budget per search")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (implies --split when > 1)")
    p.add_argument("--split", action="store_true", help="split the search on the first element's color")
    p.add_argument("--symmetry", action="store_true", help="use color-inversion symmetry breaking")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intervaltotal", description="Interval total colorings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a family graph")
    _add_input(p)
    _add_output(p, ("json", "dot"), "json")

    p = sub.add_parser("color", help="build a certificate with one of the constructions")
    _add_input(p)
    p.add_argument("--t", type=int, help="number of colors (default: smallest constructed)")
    p.add_argument("--manifest", type=Path, help="append a manifest record to this JSON file")
    _add_output(p, ("json", "dot"), "json")

    p = sub.add_parser("verify", help="check a certificate (total or lifted edge coloring)")
    p.add_argument("certificate", type=Path)
    _add_output(p, ("json", "table"), "table")

    p = sub.add_parser("search", help="decide a single t with the exhaustive oracle")
    _add_input(p)
    p.add_argument("--t", type=int, required=True)
    _add_search(p)
    _add_output(p, ("json", "table"), "json")

    p = sub.add_parser("spectrum", help="run the oracle over a range of t")
    _add_input(p)
    p.add_argument("--t-min", type=int)
    p.add_argument("--t-max", type=int)
    _add_search(p)
    _add_output(p, ("json", "table"), "table")

    p = sub.add_parser("bounds", help="print all bounds for a graph")
    _add_input(p)
    _add_output(p, ("json", "table"), "table")

    p = sub.add_parser("lift", help="lift a certificate to the auxiliary bipartite graph")
    p.add_argument("certificate", type=Path)
    _add_output(p, ("json", "dot"), "json")

    p = sub.add_parser("invert", help="apply the color inversion x -> t+1-x")
    p.add_argument("certificate", type=Path)
    _add_output(p, ("json",), "json")
    return parser


def _read_json(path: Path):
    try:
        return json.loads(path.read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _spec(args) -> Optional[FamilySpec]:
    if args.family and args.graph:
        raise UsageError("give either --family or --graph, not both")
    if not args.family and not args.graph:
        raise UsageError("one of --family or --graph is required")
    if args.family:
        seed = args.seed if args.family == "tree_random" else None
        return FamilySpec(args.family, n=args.n, m=args.m, seed=seed, name=args.name)
    return None


def _graph(args) -> Graph:
    spec = _spec(args)
    if spec is not None:
        return generate(spec)
    return graph_from_json(_read_json(args.graph))


def _search_config(args, **extra) -> SearchConfig:
    return SearchConfig(
        node_budget=args.budget,
        split=args.split or args.jobs > 1,
        jobs=args.jobs,
        symmetry_breaking=args.symmetry,
        **extra,
    )


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, data) -> None:
    _emit(args, json.dumps(data, indent=2) + "\n")


def cmd_generate(args) -> int:
    g = _graph(args)
    if args.format == "dot":
        _emit(args, to_dot(g))
    else:
        _emit_json(args, graph_to_json(g))
    return EXIT_OK


def cmd_color(args) -> int:
    spec = _spec(args)
    if spec is not None:
        built = construct(spec, args.t)
        g, c, method = built.graph, built.coloring, built.method
        entry = built.manifest_entry()
    else:
        g = graph_from_json(_read_json(args.graph))
        if is_tree(g):
            c, method = color_tree(g), "tree-leaf-extension"
        else:
            try:
                c, method = color_regular_bipartite(g), "regular-bipartite"
            except ConstructionError:
                raise UsageError("no construction covers this graph; use `search`") from None
        if args.t is not None and args.t != c.t:
            raise UsageError(f"the construction gives t={c.t}, not {args.t}; use `search` for other t")
        entry = {"family": "graph-file", "parameters": {"path": str(args.graph)}, "construction": method, "t": c.t}
    if args.manifest:
        records = json.loads(args.manifest.read_text()) if args.manifest.exists() else []
        records.append(entry)
        args.manifest.write_text(json.dumps(records, indent=2) + "\n")
    if args.format == "dot":
        _emit(args, to_dot(g, c.vertex_colors, c.edge_colors))
    else:
        _emit_json(args, certificate_to_json(g, c, construction=method))
    return EXIT_OK


def cmd_verify(args) -> int:
    data = _read_json(args.certificate)
    if "vertex_colors" in data:
        g, c = certificate_from_json(data)
        outcome = verify_interval_total(g, c)
        kind = "interval total coloring"
    else:
        h, ec = lifted_from_json(data)
        outcome = verify_interval_edge(h, ec)
        kind = "interval edge coloring"
    if args.format == "json":
        _emit_json(args, outcome.to_json())
    else:
        lines = [f"{kind}: {'valid' if outcome.valid else 'INVALID'}"]
        lines += [f"  {f}" for f in outcome.failures]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if outcome.valid else EXIT_INVALID


def cmd_search(args) -> int:
    g = _graph(args)
    c = exists_coloring(g, args.t, _search_config(args))
    if args.format == "json":
        _emit_json(args, {"t": args.t, "status": "feasible" if c else "infeasible",
                          "certificate": certificate_to_json(g, c) if c else None})
    else:
        _emit(args, f"t={args.t}: {'feasible' if c else 'infeasible'}\n")
    return EXIT_OK if c else EXIT_INVALID


def cmd_spectrum(args) -> int:
    g = _graph(args)
    result = compute_spectrum(g, _search_config(args, t_min=args.t_min, t_max=args.t_max))
    if args.format == "json":
        _emit_json(args, result.to_json())
    else:
        _emit(args, result.to_table())
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = bound_report(_graph(args))
    if args.format == "json":
        _emit_json(args, report.to_json())
    else:
        _emit(args, report.to_table())
    return EXIT_OK


def cmd_lift(args) -> int:
    g, c = certificate_from_json(_read_json(args.certificate))
    aux, ec = lift_coloring(g, c)
    if args.format == "dot":
        _emit(args, to_dot(aux.graph, edge_colors=ec.colors, name="H"))
    else:
        _emit_json(args, lifted_to_json(aux, ec))
    return EXIT_OK


def cmd_invert(args) -> int:
    g, c = certificate_from_json(_read_json(args.certificate))
    _emit_json(args, certificate_to_json(g, invert(c)))
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "color": cmd_color,
    "verify": cmd_verify,
    "search": cmd_search,
    "spectrum": cmd_spectrum,
    "bounds": cmd_bounds,
    "lift": cmd_lift,
    "invert": cmd_invert,
}


def _fail(args, code: int, kind: str, message: str) -> int:
    if getattr(args, "format", None) == "json":
        sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    else:
        sys.stderr.write(f"error: {message}\n")
    return code


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail(args, EXIT_USAGE, "usage", str(exc))
    except BudgetExhausted as exc:
        return _fail(args, EXIT_BUDGET, "budget", str(exc))
    except CertificateError as exc:
        return _fail(args, EXIT_INVALID, "certificate", str(exc))
    except ValueError as exc:
        return _fail(args, EXIT_USAGE, type(exc).__name__, str(exc))


def main() -> None:
    sys.exit(run())
