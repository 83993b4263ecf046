"""Runtime and certification across outer orders, several random seeds per order.

    python3 scripts/scale_sweep.py --max-order 60 --seeds 3
"""

from __future__ import annotations

import argparse
import statistics
import time
from dataclasses import dataclass

from coronacolor.catalog import named, random_cubic
from coronacolor.extension import color_corona_equitable
from coronacolor.planner import se_profile
from coronacolor.verify import verify


@dataclass
class SweepConfig:
    center: str = "petersen"
    min_order: int = 4
    max_order: int = 40
    seeds: int = 3


def sweep(cfg: SweepConfig):
    g = named(cfg.center)
    for n in range(cfg.min_order, cfg.max_order + 1, 2):
        times, ok, max3 = [], 0, 0
        for seed in range(cfg.seeds):
            h = random_cubic(n, seed)
            t0 = time.perf_counter()
            res = color_corona_equitable(g, h)
            times.append(time.perf_counter() - t0)
            rep = verify(res.instance, res.coloring, require_equitable=True)
            ok += rep.ok and rep.colors_used == n + 4
            max3 = max(max3, max(se_profile(se)[3] for se in res.plan.per_copy_se))
        yield n, res.instance.n_elements, ok, cfg.seeds, statistics.median(times), max3


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--center", default=SweepConfig.center)
    ap.add_argument("--min-order", type=int, default=SweepConfig.min_order)
    ap.add_argument("--max-order", type=int, default=SweepConfig.max_order)
    ap.add_argument("--seeds", type=int, default=SweepConfig.seeds)
    cfg = SweepConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})
    print(f"center={cfg.center}")
    print(f"{'n_H':>4} {'elements':>9} {'certified':>10} {'median s':>9} {'max #3(S_E)':>12}")
    for n, elems, ok, total, med, max3 in sweep(cfg):
        print(f"{n:4d} {elems:9d} {ok:>5d}/{total:<4d} {med:9.4f} {max3:12d}")


if __name__ == "__main__":
    main()
