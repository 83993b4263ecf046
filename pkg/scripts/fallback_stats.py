"""How often the construction needs anything beyond its first choices.

For every copy, walks the planner's candidate S_T sequences in order and the
vertex assignments in order, and records which combination first admits an
exact edge extension. Also records whether the matching rotation seed alone
succeeds when it applies. A run where every copy succeeds at (0, 0) never
touches the backtracking fallbacks.

    python3 scripts/fallback_stats.py --seeds 20
    python3 scripts/fallback_stats.py --every-st     # all equitable S_T, n_H in {4, 6, 8}
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from coronacolor import extension as ext
from coronacolor.catalog import all_cubic, named, random_cubic
from coronacolor.planner import candidate_sequences, edge_sequence
from coronacolor.semi_corona import color_semi_corona


@dataclass
class StatsConfig:
    seeds: int = 20
    max_order: int = 40
    vertex_alternatives: int = 24
    plan_alternatives: int = 16


def first_success(g, h, cfg: StatsConfig, stats: Counter) -> None:
    n = h.order
    semi = color_semi_corona(g, n)
    m = ext.perfect_matching(h) if n in (6, 8) else None
    counts = list(semi.class_sizes())
    for i in range(g.order):
        pal = semi.semi_edge_colors[i]
        chosen = None
        for t, st in enumerate(candidate_sequences(counts, n, prefer=sorted(semi.forbidden_sets[i]))):
            if t >= cfg.plan_alternatives:
                break
            se = edge_sequence(st, pal)
            ctx = ext.copy_context(semi, i, st, se)
            for vi, (vc, mm) in enumerate(ext.iter_copy_vertex_assignments(ctx, h, m)):
                if vi >= cfg.vertex_alternatives:
                    break
                if mm is not None and max(se.values()) <= 1:
                    seeded = ext._search_edges(ctx, h, vc, ext._rotation_seed(ctx, vc, mm), 50_000)
                    stats["rotation seed ok" if seeded else "rotation seed failed"] += 1
                if ext._search_edges(ctx, h, vc, {}, 50_000) is not None:
                    chosen = (t, vi, st)
                    break
            if chosen:
                break
        if chosen is None:
            stats[f"n={n} no extension found"] += 1
            return
        t, vi, st = chosen
        stats["first choice" if (t, vi) == (0, 0) else f"S_T #{t}, assignment #{vi}"] += 1
        counts = [counts[c - 1] + st[c] for c in range(1, n + 5)]


def every_st(stats: Counter) -> None:
    """Try every equitable S_T for every copy, not just the planner's choices."""
    for n in (4, 6, 8):
        for h in all_cubic(n):
            m = ext.perfect_matching(h) if n in (6, 8) else None
            for cname in ("k4", "k33", "prism"):
                g = named(cname)
                semi = color_semi_corona(g, n)
                k = n + 4
                low, n_high = divmod(5 * n // 2, k)
                for i in range(g.order):
                    for high in combinations(range(1, k + 1), n_high):
                        st = {c: low + (c in high) for c in range(1, k + 1)}
                        ctx = ext.copy_context(semi, i, st, edge_sequence(st, semi.semi_edge_colors[i]))
                        found = None
                        for vi, (vc, mm) in enumerate(ext.iter_copy_vertex_assignments(ctx, h, m)):
                            try:
                                ext.extend_copy_edges(ctx, h, vc, mm)
                            except ext.ExtensionInfeasible:
                                continue
                            found = vi
                            break
                        key = "no extension" if found is None else f"assignment #{found}"
                        stats[f"n={n} every S_T: {key}"] += 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=StatsConfig.seeds)
    ap.add_argument("--max-order", type=int, default=StatsConfig.max_order)
    ap.add_argument("--every-st", action="store_true")
    args = ap.parse_args()
    stats: Counter = Counter()
    if args.every_st:
        every_st(stats)
        for key, v in sorted(stats.items()):
            print(f"{key:40} {v}")
        return
    cfg = StatsConfig(seeds=args.seeds, max_order=args.max_order)
    for n in (4, 6, 8):
        for h in all_cubic(n):
            for c in ("k4", "k33", "prism", "cube", "petersen", "two_k4"):
                first_success(named(c), h, cfg, stats)
    for s in range(cfg.seeds):
        for n in range(10, cfg.max_order + 1, 2):
            first_success(random_cubic(4 + 2 * (s % 6), s), random_cubic(n, s), cfg, stats)
    for key, v in sorted(stats.items()):
        print(f"{key:32} {v}")


if __name__ == "__main__":
    main()
