"""Colour and certify every (center, outer) pair of a small matrix, equitable and type-1.

    python3 scripts/run_check_matrix.py [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from coronacolor.catalog import all_cubic_entries, named, random_cubic
from coronacolor.extension import color_corona_equitable, color_corona_type1
from coronacolor.planner import se_bounds_check
from coronacolor.verify import verify


@dataclass
class MatrixConfig:
    centers: tuple[str, ...] = ("k4", "k33", "prism", "petersen")
    small_orders: tuple[int, ...] = (4, 6, 8)
    # (label, order, seed); seed None means the catalog graph of that name
    extra_outer: tuple[tuple[str, int, int | None], ...] = (
        ("petersen", 10, None), ("heawood", 14, None), ("random16", 16, 2),
        ("random18", 18, 3), ("random26", 26, 4), ("random40", 40, 5),
    )


@dataclass
class Row:
    center: str
    outer: str
    n_outer: int
    k: int
    spread: int
    proper: bool
    se_bounds: bool
    type1_proper: bool
    seconds: float
    class_sizes: list[int] = field(default_factory=list)


def outer_graphs(cfg: MatrixConfig):
    for n in cfg.small_orders:
        for e in all_cubic_entries(n):
            yield e.name, e.graph
    for label, n, seed in cfg.extra_outer:
        yield label, (named(label) if seed is None else random_cubic(n, seed))


def run(cfg: MatrixConfig) -> list[Row]:
    rows = []
    for hname, h in outer_graphs(cfg):
        for cname in cfg.centers:
            g = named(cname)
            t0 = time.perf_counter()
            res = color_corona_equitable(g, h)
            rep = verify(res.instance, res.coloring, require_equitable=True)
            dt = time.perf_counter() - t0
            t1 = color_corona_type1(g, h)
            rep1 = verify(t1.instance, t1.coloring)
            rows.append(Row(cname, hname, h.order, rep.colors_used, rep.spread, rep.proper,
                            se_bounds_check(res.plan, h.order), rep1.proper, round(dt, 4),
                            list(rep.class_sizes)))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="write rows as JSON")
    args = ap.parse_args()
    rows = run(MatrixConfig())
    print(f"{'center':10} {'outer':16} {'n_H':>4} {'k':>3} {'spr':>3} {'prop':>5} {'S_E':>5} {'t1':>5} {'sec':>7}")
    for r in rows:
        print(f"{r.center:10} {r.outer:16} {r.n_outer:4d} {r.k:3d} {r.spread:3d} {str(r.proper):>5} "
              f"{str(r.se_bounds):>5} {str(r.type1_proper):>5} {r.seconds:7.3f}")
    bad = [r for r in rows if not (r.proper and r.spread <= 1 and r.k == r.n_outer + 4 and r.se_bounds)]
    print(f"{len(rows)} pairs, {len(bad)} failures")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([asdict(r) for r in rows], fh, indent=1)


if __name__ == "__main__":
    main()
