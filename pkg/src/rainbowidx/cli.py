"""Command-line front end: gen, verify, rx, tmin, repro."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .claims import registry, run_registry
from .constructions import (
    BASIC_FAMILIES,
    ConstructionSpec,
    Family,
    build_basic,
    build_colored,
    wheel_graph,
)
from .coloring import ColoringError
from .graph import GraphError
from .io import dumps, read_coloring, read_graph, to_dot
from .search import t_min
from .verify import SearchBudgetExceeded, rx_at_most, rx_exact, verify_k_rainbow

log = logging.getLogger("rainbowidx")


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _spec_from_args(args: argparse.Namespace) -> ConstructionSpec:
    fam = Family(args.family)
    params = {}
    for key in ("n", "l", "k", "r", "p", "q"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.s is not None:
        params["s_bipartite"] = args.s
    return ConstructionSpec(fam, params)


def cmd_gen(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    if spec.family in BASIC_FAMILIES:
        g = build_basic(spec)
        payload = {"spec": spec.to_json(), "graph": g.to_json(), "colors": None, "palette": None, "claimed_k": None, "labels": {}}
        _write(dumps(payload), args.out)
        if args.dot:
            Path(args.dot).write_text(to_dot(g))
        return 0
    wheel_coloring = None
    if spec.family is Family.WHEEL_PENDANT:
        spokes = spec.get("n") - 2
        if spokes < 3:
            raise GraphError(f"wheel-pendant needs n >= 5, got {spec.get('n')}")
        wheel_coloring = rx_exact(wheel_graph(spokes), 3).witness_coloring
    c = build_colored(spec, wheel_coloring)
    _write(dumps(c.to_json()), args.out)
    if args.dot:
        Path(args.dot).write_text(to_dot(c.graph, c.coloring, c.vertex_labels))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    coloring = read_coloring(args.colors, g)
    report = verify_k_rainbow(g, coloring, args.k, witnesses=args.witnesses)
    payload = report.to_json()
    if args.witnesses and report.witness_trees is not None:
        payload["witnesses"] = [
            {"subset": list(s), "edges": sorted(t)} for s, t in sorted(report.witness_trees.items())
        ]
    _write(dumps(payload), None)
    return 0 if report.ok else 1


def cmd_rx(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    if args.at_most is not None:
        coloring = rx_at_most(g, args.k, args.at_most)
        payload = {
            "k": args.k,
            "l": args.at_most,
            "present": coloring is not None,
            "colors": list(coloring.colors) if coloring is not None else None,
        }
        _write(dumps(payload), None)
        return 0
    _write(dumps(rx_exact(g, args.k).to_json()), None)
    return 0


def cmd_tmin(args: argparse.Namespace) -> int:
    _write(dumps(t_min(args.n, args.k, args.l).to_json()), None)
    return 0


def cmd_repro(args: argparse.Namespace) -> int:
    only = set(args.claims.split(",")) if args.claims else None
    claims = registry()
    if only is not None:
        unknown = only - {c.claim_id for c in claims}
        if unknown:
            raise GraphError(f"unknown claim ids: {', '.join(sorted(unknown))}")
    report = run_registry(claims, max_n=args.max_n, only=only)
    if args.no_timing:
        for row in report.rows:
            row.millis = 0
    _write(report.to_tsv(), args.tsv)
    if args.json:
        _write(dumps(report.to_json()), args.json)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowidx", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a construction as JSON (and optionally DOT)")
    gen.add_argument("--family", required=True, choices=[f.value for f in Family])
    gen.add_argument("--n", type=int)
    gen.add_argument("--l", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--r", type=int)
    gen.add_argument("--s", type=int, help="second side of complete-bipartite")
    gen.add_argument("--p", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--out")
    gen.add_argument("--dot")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="check a k-rainbow coloring")
    ver.add_argument("--graph", required=True)
    ver.add_argument("--colors", required=True)
    ver.add_argument("--k", type=int, required=True)
    ver.add_argument("--witnesses", action="store_true")
    ver.set_defaults(func=cmd_verify)

    rx = sub.add_parser("rx", help="exact k-rainbow index, or the decision form with --at-most")
    rx.add_argument("--graph", required=True)
    rx.add_argument("--k", type=int, required=True)
    rx.add_argument("--at-most", type=int)
    rx.set_defaults(func=cmd_rx)

    tm = sub.add_parser("tmin", help="exhaustive t(n,k,l)")
    tm.add_argument("--n", type=int, required=True)
    tm.add_argument("--k", type=int, required=True)
    tm.add_argument("--l", type=int, required=True)
    tm.set_defaults(func=cmd_tmin)

    rp = sub.add_parser("repro", help="run the claim registry")
    rp.add_argument("--max-n", type=int, default=19)
    rp.add_argument("--claims", help="comma-separated claim ids")
    rp.add_argument("--tsv", help="TSV destination (default stdout)")
    rp.add_argument("--json", help="JSON destination")
    rp.add_argument("--no-timing", action="store_true", help="zero the millis column for byte-stable output")
    rp.set_defaults(func=cmd_repro)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, ColoringError, SearchBudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
