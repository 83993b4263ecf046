"""One test per acceptance criterion; each records a PASS/FAIL line for the terminal summary."""

import hashlib
import os
import random
import subprocess
import sys
import time

import pytest

from _oracles import flat_element, total_elements
from conftest import ACCEPTANCE, CENTERS, SMALL_CUBIC
from coronacolor.catalog import all_cubic, named, random_cubic
from coronacolor.coloring import TotalColoring
from coronacolor.extension import color_corona_equitable, color_corona_type1
from coronacolor.graph import ElementId
from coronacolor.io import coloring_document, dumps
from coronacolor.planner import se_bounds_check, se_profile, st_profile
from coronacolor.semi_corona import color_semi_corona
from coronacolor.verify import (brute_force_equitable_total, brute_force_total_chromatic,
                                exhaustive_extension_check, verify)

# time limits in seconds, pinned
LIMIT_1 = 10.0
LIMIT_2 = 30.0
LIMIT_6 = 60.0

LARGER_OUTER = [
    ("petersen", lambda: named("petersen")),
    ("random14_s1", lambda: random_cubic(14, 1)),
    ("random16_s2", lambda: random_cubic(16, 2)),
    ("random18_s3", lambda: random_cubic(18, 3)),
    ("random26_s4", lambda: random_cubic(26, 4)),
]

_plans = {}


def record(n, ok, detail):
    ACCEPTANCE[n] = (bool(ok), detail)
    assert ok, detail


def _certify(g, h):
    res = color_corona_equitable(g, h)
    rep = verify(res.instance, res.coloring, require_equitable=True)
    good = rep.proper and rep.colors_used == h.order + 4 and rep.spread <= 1
    return res, rep, good


def _pairs_1():
    for entry in SMALL_CUBIC:
        for cname in CENTERS:
            yield cname, entry


def _documents_1():
    out = []
    for cname, entry in _pairs_1():
        res = color_corona_equitable(named(cname), entry.graph)
        out.append(dumps(coloring_document(res.coloring, res.instance, "equitable")))
    return out


def test_criterion_1_small_coronas():
    assert len(SMALL_CUBIC) == 8
    t0 = time.perf_counter()
    bad = []
    for cname, entry in _pairs_1():
        res, rep, good = _certify(named(cname), entry.graph)
        _plans[(cname, entry.name)] = (res.plan, entry.order)
        if not good:
            bad.append(f"{cname} o {entry.name}: {rep.summary()}")
    dt = time.perf_counter() - t0
    n = len(_plans)
    record(1, not bad and n == 24 and dt < LIMIT_1, f"{n} pairs, {len(bad)} failed, {dt:.2f}s (limit {LIMIT_1}s) {bad[:2]}")


def test_criterion_2_larger_outer_graphs():
    t0 = time.perf_counter()
    bad, orders = [], set()
    for cname in ("k4", "petersen"):
        for hname, make in LARGER_OUTER:
            h = make()
            orders.add(h.order)
            res, rep, good = _certify(named(cname), h)
            _plans[(cname, hname)] = (res.plan, h.order)
            if not good:
                bad.append(f"{cname} o {hname}: {rep.summary()}")
    dt = time.perf_counter() - t0
    all_regimes = any(n < 16 for n in orders) and 16 in orders and any(n > 24 for n in orders)
    record(2, not bad and all_regimes and dt < LIMIT_2,
           f"10 pairs, orders {sorted(orders)}, {len(bad)} failed, {dt:.2f}s (limit {LIMIT_2}s) {bad[:2]}")


def test_criterion_3_semi_corona():
    bad = 0
    checked = 0
    for entry in SMALL_CUBIC:
        g = entry.graph
        for h in range(4, 13):
            sc = color_semi_corona(g, h)
            rep = verify(sc.structure(), sc.to_total(), require_equitable=True)
            identity = rep.class_sizes == tuple(g.order - le for le in sc.edge_target)
            if not (rep.ok and rep.colors_used == h + 4 and identity):
                bad += 1
            checked += 1
    record(3, bad == 0, f"{checked} (G, h) cases, {bad} failed, identity exact")


def test_criterion_4_st_profile_closed_form():
    bad = []
    for n in range(4, 41, 2):
        want = (8 - n // 2, 3 * n // 2 - 4, 0) if n <= 14 else (0, n // 2 + 12, n // 2 - 8)
        got = st_profile(n)
        if got != want or sum(got) != n + 4 or got[0] + 2 * got[1] + 3 * got[2] != 5 * n // 2:
            bad.append(n)
    record(4, not bad, f"n_H in 4..40, mismatches at {bad}")


def test_criterion_5_se_bounds():
    if len(_plans) < 34:
        # criteria 1 and 2 did not run in this session; rebuild their plans
        for cname, entry in _pairs_1():
            _plans[(cname, entry.name)] = (color_corona_equitable(named(cname), entry.graph).plan, entry.order)
        for cname in ("k4", "petersen"):
            for hname, make in LARGER_OUTER:
                h = make()
                _plans[(cname, hname)] = (color_corona_equitable(named(cname), h).plan, h.order)
    bad = [k for k, (p, n) in _plans.items() if not se_bounds_check(p, n)]
    max3 = max(se_profile(se)[3] for p, n in _plans.values() if n > 24 for se in p.per_copy_se)
    record(5, not bad and max3 <= 4, f"{len(_plans)} plans, {len(bad)} violate bounds, max #3(S_E) for n_H>24 = {max3}")


def _fault_inject(rng, inst, col, conflicts, by_flat):
    """Copy the colour of a conflicting element onto a random element."""
    a = dict(col.assignment)
    x = rng.choice(sorted(a, key=lambda e: e.address()))
    fx = flat_element(inst, x)
    y = by_flat[rng.choice(sorted(conflicts[fx], key=repr))]
    a[x] = a[y]
    return TotalColoring(col.palette_size, a)


def test_criterion_6_oracle_cross_checks():
    t0 = time.perf_counter()
    chi_k4 = brute_force_total_chromatic(named("k4"), 6)
    five_ok = 0
    for entry in SMALL_CUBIC:
        c = brute_force_equitable_total(entry.graph, 5)
        if verify(entry.graph, c, require_equitable=True).ok:
            five_ok += 1
    rng = random.Random(20261015)
    bases = [color_corona_equitable(named(g), named(h)) for g, h in
             [("k4", "k4"), ("k33", "prism"), ("prism", "cube"), ("k4", "petersen")]]
    prepared = []
    for res in bases:
        g = res.instance.as_graph()
        _, conflicts = total_elements(g.order, list(g.edges))
        by_flat = {flat_element(res.instance, e): e for e in res.coloring.assignment}
        prepared.append((res, conflicts, by_flat))
    rejected = 0
    for t in range(100):
        res, conflicts, by_flat = prepared[t % len(prepared)]
        bad = _fault_inject(rng, res.instance, res.coloring, conflicts, by_flat)
        if not verify(res.instance, bad).proper:
            rejected += 1
    dt = time.perf_counter() - t0
    record(6, chi_k4 == 5 and five_ok == 8 and rejected == 100 and dt < LIMIT_6,
           f"chi''(K4)={chi_k4}, equitable 5-colourings {five_ok}/8, faults rejected {rejected}/100, "
           f"{dt:.2f}s (limit {LIMIT_6}s)")


def test_criterion_7_type1():
    bad = []
    for cname, entry in _pairs_1():
        g, h = named(cname), entry.graph
        res = color_corona_type1(g, h)
        rep = verify(res.instance, res.coloring)
        inside = all(res.coloring.assignment[ElementId("he", (i, *e))] in res.semi.forbidden_sets[i]
                     for i in range(g.order) for e in h.edges)
        if not (rep.proper and rep.colors_used <= h.order + 4 and inside):
            bad.append(f"{cname} o {entry.name}")
    record(7, not bad, f"24 pairs, {len(bad)} failed {bad[:2]}")


def test_criterion_8_exhaustive_check(tmp_path):
    results = {n: exhaustive_extension_check(n, dump_dir=tmp_path) for n in (4, 6, 8)}
    counts = {n: len(all_cubic(n)) * 3 for n in (4, 6, 8)}
    record(8, all(results.values()), f"results {results}, pairs per order {counts}")


_HASH_SCRIPT = """
import hashlib, sys
sys.path.insert(0, {tests!r})
from test_acceptance import _documents_1
print(hashlib.sha256("".join(_documents_1()).encode()).hexdigest())
"""


def test_criterion_9_determinism():
    first, second = _documents_1(), _documents_1()
    same = first == second
    digest = hashlib.sha256("".join(first).encode()).hexdigest()
    # a fresh interpreter with a different hash seed must agree byte for byte
    env = dict(os.environ, PYTHONHASHSEED="12345")
    tests = os.path.dirname(os.path.abspath(__file__))
    r = subprocess.run([sys.executable, "-c", _HASH_SCRIPT.format(tests=tests)],
                       capture_output=True, text=True, env=env, check=False)
    other = r.stdout.strip()
    record(9, same and other == digest,
           f"24 documents identical in-process={same}, across processes={other == digest} ({digest[:12]})")


@pytest.mark.parametrize("n", [4, 6, 8])
def test_small_orders_cover_all_graphs(n):
    assert len(all_cubic(n)) == {4: 1, 6: 2, 8: 5}[n]
