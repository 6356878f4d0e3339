"""Command-line interface.

Subcommands: cd, graph, order, enum, product, verify, catalog.  Exit code
0 on success, 1 when a verification claim fails, 2 on usage errors.
All output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import census, verify
from .groups import GroupSpec, UnsupportedFamilyError, character_degrees, group_order
from .prime_graph import PrimeGraph, graph_of, product_graph, structural_graph


def _spec_from_args(family: str, param: str) -> GroupSpec:
    try:
        return GroupSpec.parse(family, param)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}") from exc


def _print_graph(g: PrimeGraph, fmt: str) -> None:
    if fmt == "dot":
        sys.stdout.write(g.to_dot())
    elif fmt == "json":
        sys.stdout.write(g.to_json())
    else:
        sys.stdout.write(g.to_edgelist())


def _cmd_cd(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args.family, args.param)
    try:
        degrees = character_degrees(spec)
    except UnsupportedFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(" ".join(str(d) for d in degrees))
    return 0


def _cmd_order(args: argparse.Namespace) -> int:
    print(group_order(_spec_from_args(args.family, args.param)))
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args.family, args.param)
    try:
        g = structural_graph(spec) if args.structural else graph_of(spec)
    except UnsupportedFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _print_graph(g, args.format)
    return 0


def _cmd_product(args: argparse.Namespace) -> int:
    a = graph_of(_spec_from_args(args.family1, args.param1))
    b = graph_of(_spec_from_args(args.family2, args.param2))
    _print_graph(product_graph(a, b), args.format)
    return 0


def _cmd_enum(args: argparse.Namespace) -> int:
    try:
        result = census.enumerate_regular(args.n, args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not result.parity_ok:
        print(f"no graphs: n*k = {args.n * args.k} is odd")
        return 0
    classes = list(result)
    if args.require_clique:
        classes = [g for g in classes if census.contains_clique(g, args.require_clique)]
    if args.free_of_clique:
        classes = [g for g in classes if not census.contains_clique(g, args.free_of_clique)]
    print(f"{len(classes)} classes of {args.k}-regular graphs on {args.n} vertices")
    for i, g in enumerate(classes):
        edge_text = " ".join(f"{p}-{q}" for p, q in g.edges())
        if args.stats:
            print(
                f"{i}: triangles={census.triangle_count(g)} "
                f"k4={'y' if census.contains_clique(g, 4) else 'n'} "
                f"k5={'y' if census.contains_clique(g, 5) else 'n'} "
                f"vertex-transitive={'y' if census.is_vertex_transitive(g) else 'n'} "
                f"edges: {edge_text}"
            )
        else:
            print(f"{i}: {edge_text}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    bounds = verify.Bounds(
        psl2_max=args.psl2_max,
        suzuki_max=args.suzuki_max,
        psl3_max=args.psl3_max,
        psu3_max=args.psu3_max,
        product_trials=args.product_trials,
    )
    if args.only:
        try:
            report = verify.Report((verify.run_one(args.only, bounds),))
        except KeyError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return 2
    else:
        report = verify.run_all(bounds)
    sys.stdout.write(report.to_json() if args.json else report.to_table())
    return 0 if report.ok else 1


def _cmd_catalog(args: argparse.Namespace) -> int:
    cat = census.catalog()
    if args.name:
        if args.name not in cat:
            print(f"error: unknown catalog graph {args.name!r}", file=sys.stderr)
            return 2
        g = cat[args.name].graph
        edge_text = " ".join(f"{p}-{q}" for p, q in g.edges())
        print(f"{args.name}: n={g.n} edges: {edge_text}")
    else:
        for name in sorted(cat):
            g = cat[name].graph
            print(f"{name}: n={g.n} m={len(g.edges())}")
    return 0


def _add_spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", help="psl2, suzuki, psl3, psu3, sporadic or alt")
    p.add_argument("param", help="prime power q (suzuki: q^2), degree n, or name")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primegraphs",
        description="Degree graphs of simple group families and small "
        "regular-graph censuses",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cd", help="print the character degree set")
    _add_spec_args(p)
    p.set_defaults(fn=_cmd_cd)

    p = sub.add_parser("order", help="print the group order")
    _add_spec_args(p)
    p.set_defaults(fn=_cmd_order)

    p = sub.add_parser("graph", help="print the degree graph")
    _add_spec_args(p)
    p.add_argument("--format", choices=("dot", "json", "edgelist"), default="edgelist")
    p.add_argument(
        "--structural",
        action="store_true",
        help="use the family structure rule instead of the degree set",
    )
    p.set_defaults(fn=_cmd_graph)

    p = sub.add_parser("product", help="print the graph of a direct product")
    p.add_argument("family1")
    p.add_argument("param1")
    p.add_argument("family2")
    p.add_argument("param2")
    p.add_argument("--format", choices=("dot", "json", "edgelist"), default="edgelist")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("enum", help="census of k-regular graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--require-clique", type=int, metavar="C")
    p.add_argument("--free-of-clique", type=int, metavar="C")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(fn=_cmd_enum)

    p = sub.add_parser("verify", help="run the claim suite")
    p.add_argument("--only", metavar="ID")
    p.add_argument("--json", action="store_true")
    p.add_argument("--psl2-max", type=int, default=verify.Bounds().psl2_max)
    p.add_argument("--suzuki-max", type=int, default=verify.Bounds().suzuki_max)
    p.add_argument("--psl3-max", type=int, default=verify.Bounds().psl3_max)
    p.add_argument("--psu3-max", type=int, default=verify.Bounds().psu3_max)
    p.add_argument("--product-trials", type=int, default=verify.Bounds().product_trials)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("catalog", help="list or show the named graphs")
    p.add_argument("name", nargs="?")
    p.set_defaults(fn=_cmd_catalog)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; normalize other codes too.
        return 0 if exc.code in (0, None) else 2
    try:
        return args.fn(args)
    except SystemExit as exc:
        print(exc, file=sys.stderr)
        return 2
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
