"""Extending the semi-corona coloring of the center into every copy of the outer graph.

Copy ``i`` hangs off center vertex ``v_i``.  Its link edges carry the colours
outside f(v_i) (the copy's palette), copy vertex ``j`` getting palette entry
``j``.  The copy vertices take a permutation of the same palette subject to a
case-dependent condition on every relevant edge {x, y}:

* n_H = 4:      |{c(x), c(y), link(x), link(y)}| >= 3,
* n_H in {6,8}: c(x) = link(y) and c(y) = link(x) along a perfect matching,
* n_H >= 10:    c(x), c(y), link(x), link(y) pairwise distinct.

The copy edges are then coloured with the exact per-colour counts S_E chosen
by the planner.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice, permutations
from typing import Iterator, Sequence

from .coloring import TotalColoring
from .edge_coloring import vizing_color
from .graph import CoronaInstance, ElementId, Graph, build_corona
from .matching import Matching, iter_perfect_matchings, perfect_matching
from .planner import SequencePlan, plan
from .semi_corona import SemiColoring, color_semi_corona


class AssignmentInfeasible(RuntimeError):
    pass


class ExtensionInfeasible(RuntimeError):
    pass


class Type1Infeasible(RuntimeError):
    pass


Edge = tuple[int, int]


@dataclass(frozen=True)
class CopyContext:
    copy_index: int
    link_colors: tuple[int, ...]
    forbidden_f: frozenset[int]
    se_target: dict[int, int] = field(default_factory=dict)
    st_target: dict[int, int] = field(default_factory=dict)

    @property
    def palette(self) -> frozenset[int]:
        return frozenset(self.link_colors)


def copy_context(semi: SemiColoring, i: int, st: dict[int, int] | None = None,
                 se: dict[int, int] | None = None) -> CopyContext:
    return CopyContext(i, tuple(semi.semi_edge_colors[i]), semi.forbidden_sets[i],
                       dict(se or {}), dict(st or {}))


def union_size(ctx: CopyContext, vc: Sequence[int], x: int, y: int) -> int:
    return len({vc[x], vc[y], ctx.link_colors[x], ctx.link_colors[y]})


def vertex_condition_holds(ctx: CopyContext, h: Graph, vc: Sequence[int],
                           matching: Matching | None = None) -> bool:
    n = h.order
    link = ctx.link_colors
    if sorted(vc) != sorted(link):
        return False
    if any(vc[x] == link[x] for x in range(n)) or any(vc[x] == vc[y] for x, y in h.edges):
        return False
    if n == 4:
        return all(union_size(ctx, vc, x, y) >= 3 for x, y in h.edges)
    if n in (6, 8):
        return matching is not None and all(union_size(ctx, vc, x, y) == 2 for x, y in matching.edges)
    return all(union_size(ctx, vc, x, y) == 4 for x, y in h.edges)


def _four_cycles(n: int) -> Iterator[tuple[int, ...]]:
    """Successor maps of the cyclic permutations of range(4), the shift j -> j+1 first."""
    yield tuple((j + 1) % n for j in range(n))
    for perm in permutations(range(1, n)):
        order = (0,) + perm
        succ = [0] * n
        for a, b in zip(order, order[1:] + order[:1]):
            succ[a] = b
        if succ != [(j + 1) % n for j in range(n)]:
            yield tuple(succ)


def _distinct_assignments(ctx: CopyContext, h: Graph) -> Iterator[tuple[int, ...]]:
    """Backtracking over vertices, most constrained first, for the all-distinct condition."""
    n = h.order
    link = ctx.link_colors
    pal = sorted(ctx.link_colors)
    vc = [0] * n
    used: set[int] = set()
    # colours excluded statically: own link colour and the link colours of neighbours
    static = [{link[x]} | {link[y] for y in h.adjacency[x]} for x in range(n)]

    def options(x: int) -> list[int]:
        bad = set(static[x])
        for y in h.adjacency[x]:
            if vc[y]:
                if vc[y] == link[x]:
                    return []
                bad.add(vc[y])
        return [c for c in pal if c not in bad and c not in used]

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(vc)
            return
        best, best_opts = -1, None
        for x in range(n):
            if vc[x]:
                continue
            opts = options(x)
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = x, opts
                if not opts:
                    return
        for c in best_opts:
            vc[best] = c
            used.add(c)
            yield from rec(k + 1)
            used.discard(c)
            vc[best] = 0

    yield from rec(0)


def iter_copy_vertex_assignments(
    ctx: CopyContext, h: Graph, matching: Matching | None = None
) -> Iterator[tuple[tuple[int, ...], Matching | None]]:
    """Candidate vertex colorings of a copy satisfying the case condition.

    For n_H in {6, 8} the colouring is forced by the matching; ``matching``
    (the engine's choice) comes first, then the remaining perfect matchings.
    """
    n = h.order
    link = ctx.link_colors
    if n == 4:
        for succ in _four_cycles(n):
            vc = tuple(link[succ[x]] for x in range(n))
            if vertex_condition_holds(ctx, h, vc):
                yield vc, None
    elif n in (6, 8):
        first = matching or perfect_matching(h)
        others = (m for m in iter_perfect_matchings(h) if m != first)
        for m in [first, *others]:
            mate = m.mate()
            vc = tuple(link[mate[x]] for x in range(n))
            if vertex_condition_holds(ctx, h, vc, m):
                yield vc, m
    else:
        for vc in _distinct_assignments(ctx, h):
            yield vc, None


def assign_copy_vertices(ctx: CopyContext, h: Graph, matching: Matching | None = None) -> tuple[int, ...]:
    for vc, _ in iter_copy_vertex_assignments(ctx, h, matching):
        return vc
    raise AssignmentInfeasible(f"copy {ctx.copy_index}: no vertex assignment satisfies the case condition")


def _rotation_seed(ctx: CopyContext, vc: Sequence[int], matching: Matching) -> dict[Edge, int]:
    """Colour of one endpoint of matching edge m_j goes onto m_{j+1} (cyclically).

    The endpoint colour sits only on m_j's endpoints and their link edges, so
    m_{j+1} is always free for it and the seeded edges form a matching.
    """
    seed = {}
    ms = list(matching.edges)
    for j, (a, b) in enumerate(ms):
        c = next((vc[x] for x in (a, b) if ctx.se_target.get(vc[x], 0) >= 1), None)
        if c is not None:
            seed[ms[(j + 1) % len(ms)]] = c
    return seed


def _search_edges(ctx: CopyContext, h: Graph, vc: Sequence[int], seed: dict[Edge, int],
                  node_budget: int) -> dict[Edge, int] | None:
    edges = list(h.edges)
    link = ctx.link_colors
    quota = {c: q for c, q in ctx.se_target.items() if q > 0}
    allowed = []
    for x, y in edges:
        bad = {vc[x], vc[y], link[x], link[y]}
        allowed.append([c for c in sorted(quota) if c not in bad])
    at: list[set[int]] = [set() for _ in range(h.order)]
    color: list[int] = [0] * len(edges)
    idx = {e: k for k, e in enumerate(edges)}

    def place(k: int, c: int) -> None:
        x, y = edges[k]
        color[k] = c
        at[x].add(c)
        at[y].add(c)
        quota[c] -= 1

    def unplace(k: int) -> None:
        x, y = edges[k]
        c = color[k]
        color[k] = 0
        at[x].discard(c)
        at[y].discard(c)
        quota[c] += 1

    for e, c in seed.items():
        k = idx[e]
        x, y = e
        if c not in allowed[k] or quota.get(c, 0) <= 0 or c in at[x] or c in at[y]:
            return None
        place(k, c)

    def opts(k: int) -> list[int]:
        x, y = edges[k]
        return [c for c in allowed[k] if quota[c] > 0 and c not in at[x] and c not in at[y]]

    nodes = 0

    def feasible() -> bool:
        room = {c: 0 for c, q in quota.items() if q > 0}
        for k in range(len(edges)):
            if color[k]:
                continue
            o = opts(k)
            if not o:
                return False
            for c in o:
                room[c] += 1
        return all(room[c] >= quota[c] for c in room)

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise TimeoutError
        best, best_opts = -1, None
        for k in range(len(edges)):
            if color[k]:
                continue
            o = opts(k)
            if best_opts is None or len(o) < len(best_opts):
                best, best_opts = k, o
        if best_opts is None:
            return True
        # classes that must hold several edges go first
        best_opts.sort(key=lambda c: (-quota[c], c))
        for c in best_opts:
            place(best, c)
            if feasible() and rec():
                return True
            unplace(best)
        return False

    try:
        if feasible() and rec():
            return {e: color[k] for k, e in enumerate(edges)}
    except TimeoutError:
        pass
    return None


def extend_copy_edges(ctx: CopyContext, h: Graph, vertex_colors: Sequence[int],
                      matching: Matching | None = None, node_budget: int = 50_000) -> dict[Edge, int]:
    """Colour the copy's edges with exactly ``ctx.se_target[c]`` edges of colour c."""
    if sum(ctx.se_target.values()) != h.n_edges:
        raise ValueError(f"edge targets sum to {sum(ctx.se_target.values())}, copy has {h.n_edges} edges")
    attempts = []
    if matching is not None and h.order in (6, 8) and max(ctx.se_target.values()) <= 1:
        attempts.append(_rotation_seed(ctx, vertex_colors, matching))
    attempts.append({})
    for seed in attempts:
        out = _search_edges(ctx, h, vertex_colors, seed, node_budget)
        if out is not None:
            return out
    raise ExtensionInfeasible(f"copy {ctx.copy_index}: edge targets cannot be realised")


@dataclass(frozen=True)
class CoronaColoring:
    instance: CoronaInstance
    coloring: TotalColoring
    semi: SemiColoring
    mode: str
    plan: SequencePlan | None = None
    copy_vertex_colors: tuple[tuple[int, ...], ...] = ()
    copy_matchings: tuple[Matching | None, ...] = ()


def _assemble(inst: CoronaInstance, semi: SemiColoring, vcols, ecols) -> TotalColoring:
    g, h = inst.center, inst.outer
    a: dict[ElementId, int] = {}
    for v in range(g.order):
        a[ElementId("g", (v,))] = semi.vertex_colors[v]
    for e in g.edges:
        a[ElementId("ge", e)] = semi.edge_colors[e]
    for i in range(g.order):
        for j in range(h.order):
            a[ElementId("h", (i, j))] = vcols[i][j]
        for e in h.edges:
            a[ElementId("he", (i, *e))] = ecols[i][e]
        for j in range(h.order):
            a[ElementId("l", (i, j))] = semi.semi_edge_colors[i][j]
    return TotalColoring(h.order + 4, a)


def color_corona_equitable(g: Graph, h: Graph, *, max_vertex_alternatives: int = 24,
                           max_plan_alternatives: int = 64) -> CoronaColoring:
    """Equitable total (n_H+4)-coloring of g ∘ h for cubic g and h."""
    inst = build_corona(g, h)
    n = h.order
    semi = color_semi_corona(g, n)
    matching = perfect_matching(h) if n in (6, 8) else None
    found: dict[int, tuple] = {}

    def accept(i: int, st: dict[int, int], se: dict[int, int]) -> bool:
        ctx = copy_context(semi, i, st, se)
        candidates = iter_copy_vertex_assignments(ctx, h, matching)
        for vc, m in islice(candidates, max_vertex_alternatives):
            try:
                edges = extend_copy_edges(ctx, h, vc, m)
            except ExtensionInfeasible:
                continue
            found[i] = (vc, edges, m)
            return True
        return False

    p = plan(semi, n, semi.semi_edge_colors, accept=accept, max_alternatives=max_plan_alternatives)
    vcols = [found[i][0] for i in range(g.order)]
    ecols = [found[i][1] for i in range(g.order)]
    coloring = _assemble(inst, semi, vcols, ecols)
    return CoronaColoring(inst, coloring, semi, "equitable", p, tuple(vcols),
                          tuple(found[i][2] for i in range(g.order)))


def color_corona_type1(g: Graph, h: Graph) -> CoronaColoring:
    """Proper (not necessarily equitable) total (n_H+4)-coloring of g ∘ h.

    Copy edges reuse the 4 colours of f(v_i), which never appear on the link
    edges of copy i; copy vertices are then coloured greedily with backtracking.
    """
    inst = build_corona(g, h)
    n = h.order
    k = n + 4
    semi = color_semi_corona(g, n)
    base = vizing_color(h)
    if base.palette_size > 4:
        raise Type1Infeasible(f"outer graph needs {base.palette_size} edge colours")
    vcols, ecols = [], []
    for i in range(g.order):
        f = sorted(semi.forbidden_sets[i])
        edges = {e: f[c - 1] for e, c in base.assignment.items()}
        link = semi.semi_edge_colors[i]
        center = semi.vertex_colors[i]
        vc = [0] * n
        static = [{center, link[x]} | {edges[e] for e in h.incident_edges(x)} for x in range(n)]

        def rec(x: int) -> bool:
            if x == n:
                return True
            bad = static[x] | {vc[y] for y in h.adjacency[x]}
            for c in range(1, k + 1):
                if c not in bad:
                    vc[x] = c
                    if rec(x + 1):
                        return True
            vc[x] = 0
            return False

        if not rec(0):
            raise Type1Infeasible(f"copy {i}: no proper vertex colouring")
        vcols.append(tuple(vc))
        ecols.append(edges)
    coloring = _assemble(inst, semi, vcols, ecols)
    return CoronaColoring(inst, coloring, semi, "type1", None, tuple(vcols))
