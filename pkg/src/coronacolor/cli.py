"""Command line front end.

Exit codes: 0 success, 1 invalid input, 2 verification failure or internal
infeasibility (which for cubic inputs means a bug).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import UnsupportedOrder, all_cubic_entries, catalog_names, named
from .extension import color_corona_equitable, color_corona_type1
from .graph import CoronaInstance, GraphError, SemiGraph, build_corona
from .io import (DocumentError, coloring_document, dumps, graph_to_graph6, load_graph,
                 load_structure, read_document, structure_from_dict, to_dot)
from .semi_corona import color_semi_corona
from .verify import (MissingAssignment, NotFound, TooLarge, brute_force_equitable_total,
                     brute_force_total_chromatic, exhaustive_extension_check, verify)

INPUT_ERRORS = (GraphError, ValueError, KeyError, OSError, DocumentError)


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_catalog(args) -> int:
    if args.order is not None:
        try:
            entries = all_cubic_entries(args.order)
        except UnsupportedOrder as exc:
            return _fail(str(exc), 1)
        for e in entries:
            print(f"{e.name}\tn={e.order}\tg6={graph_to_graph6(e.graph)}\tedges={[list(x) for x in e.graph.edges]}")
        return 0
    for name in catalog_names():
        g = named(name)
        print(f"{name}\tn={g.order}\tm={g.n_edges}\tg6={graph_to_graph6(g)}")
    return 0


def cmd_color(args) -> int:
    try:
        center = load_graph(args.center, args.seed)
        if args.semi_h is not None:
            semi = color_semi_corona(center, args.semi_h)
            structure, coloring, mode, the_plan = SemiGraph(center, args.semi_h), semi.to_total(), "semi-corona", None
        else:
            if args.outer is None:
                return _fail("give --outer or --semi-h", 1)
            outer = load_graph(args.outer, args.seed)
            build_corona(center, outer)  # validates both factors
            fn = color_corona_equitable if args.mode == "equitable" else color_corona_type1
            res = fn(center, outer)
            structure, coloring, mode, the_plan = res.instance, res.coloring, res.mode, res.plan
    except INPUT_ERRORS as exc:
        return _fail(f"{type(exc).__name__}: {exc}", 1)
    except RuntimeError as exc:
        return _fail(f"{type(exc).__name__}: {exc}", 2)

    # re-certify independently before reporting success
    need_equitable = mode != "type1"
    rep = verify(structure, coloring, require_equitable=need_equitable)
    if args.out:
        text = to_dot(coloring, structure) if args.format == "dot" else dumps(coloring_document(coloring, structure, mode))
        if args.out == "-":
            sys.stdout.write(text)
        else:
            Path(args.out).write_text(text)
    if args.plan_out and the_plan is not None:
        Path(args.plan_out).write_text(dumps(the_plan.to_dict()))
    # keep stdout a clean document when it carries one
    report_to = sys.stderr if args.out == "-" else sys.stdout
    print(rep.summary(), file=report_to)
    if not rep.ok:
        for a, b, c in rep.violations:
            print(f"CONFLICT {a.address()} {b.address()} color={c}", file=report_to)
        return 2
    return 0


def _verify_structure(args, doc: dict):
    if args.center or args.outer:
        if not (args.center and args.outer):
            raise ValueError("--center and --outer go together")
        return build_corona(load_graph(args.center, args.seed), load_graph(args.outer, args.seed))
    if args.graph:
        return load_structure(args.graph, args.seed, args.semi_h)
    if "structure" in doc:
        return structure_from_dict(doc["structure"])
    raise ValueError("no structure: pass --graph/--center/--outer or embed one in the document")


def cmd_verify(args) -> int:
    try:
        doc, coloring = read_document(Path(args.coloring).read_text())
        structure = _verify_structure(args, doc)
        rep = verify(structure, coloring, require_equitable=args.equitable)
    except MissingAssignment as exc:
        return _fail(f"MissingAssignment {exc.element.address()}", 1)
    except INPUT_ERRORS as exc:
        return _fail(f"{type(exc).__name__}: {exc}", 1)
    for a, b, c in rep.violations:
        print(f"CONFLICT {a.address()} {b.address()} color={c}")
    print(rep.summary())
    if not rep.ok:
        return 2
    return 0


def cmd_oracle(args) -> int:
    try:
        structure = load_structure(args.graph, args.seed)
        g = structure.as_graph() if isinstance(structure, CoronaInstance) else structure
        if args.equitable:
            try:
                brute_force_equitable_total(g, args.max_colors)
                print(f"chi_total_eq<={args.max_colors}: found")
            except NotFound:
                print(f"chi_total_eq<={args.max_colors}: notfound")
            return 0
        try:
            print(f"chi_total={brute_force_total_chromatic(g, args.max_colors)}")
        except NotFound:
            print(f"chi_total>{args.max_colors}: notfound")
        return 0
    except TooLarge as exc:
        return _fail(f"TooLarge: {exc}", 1)
    except INPUT_ERRORS as exc:
        return _fail(f"{type(exc).__name__}: {exc}", 1)


def cmd_check(args) -> int:
    if args.n_outer not in (4, 6, 8):
        return _fail(f"UnsupportedOrder: {args.n_outer} (choose 4, 6 or 8)", 1)
    lines = []

    def progress(msg: str) -> None:
        lines.append(msg)
        print(msg, flush=True)

    ok = exhaustive_extension_check(args.n_outer, dump_dir=args.dump_dir, progress=progress)
    print(f"{len(lines)} pairs checked: {'all passed' if ok else 'FAILURES'}")
    if not ok:
        print(f"counterexamples written to {args.dump_dir}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coronacolor", description="Equitable total colorings of coronas of cubic graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list catalog graphs")
    c.add_argument("--order", type=int)
    c.set_defaults(func=cmd_catalog)

    c = sub.add_parser("color", help="color a corona or semi-corona")
    c.add_argument("--center", required=True, help="catalog name, random:<n>, JSON or graph6 file")
    c.add_argument("--outer")
    c.add_argument("--semi-h", type=int, help="color the semi-h-corona of --center instead")
    c.add_argument("--mode", choices=("equitable", "type1"), default="equitable")
    c.add_argument("--out", help="output path, '-' for stdout")
    c.add_argument("--format", choices=("json", "dot"), default="json")
    c.add_argument("--plan-out", help="write the per-copy sequence plan as JSON")
    c.add_argument("--seed", type=int, default=0, help="seed for random:<n> graphs")
    c.set_defaults(func=cmd_color)

    c = sub.add_parser("verify", help="verify a coloring document")
    c.add_argument("--coloring", required=True)
    c.add_argument("--graph", help="structure: graph spec or <center>-corona-<outer>")
    c.add_argument("--center")
    c.add_argument("--outer")
    c.add_argument("--semi-h", type=int)
    c.add_argument("--equitable", action="store_true")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("oracle", help="exact total chromatic search for tiny graphs")
    c.add_argument("--graph", required=True)
    c.add_argument("--max-colors", type=int, required=True)
    c.add_argument("--equitable", action="store_true")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_oracle)

    c = sub.add_parser("check", help="run the construction on every small outer graph")
    c.add_argument("--n-outer", type=int, required=True)
    c.add_argument("--dump-dir", default="counterexamples")
    c.set_defaults(func=cmd_check)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
