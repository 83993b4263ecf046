"""Proper edge colorings: Vizing (Misra-Gries) and equitable k-colorings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


class TargetInfeasible(RuntimeError):
    pass


Edge = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeColoring:
    assignment: dict[Edge, int]
    palette_size: int

    @property
    def class_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.palette_size
        for c in self.assignment.values():
            sizes[c - 1] += 1
        return tuple(sizes)

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def is_proper(self, g: Graph) -> bool:
        if set(self.assignment) != set(g.edges):
            return False
        for v in range(g.order):
            cols = [self.assignment[e] for e in g.incident_edges(v)]
            if len(cols) != len(set(cols)):
                return False
        return all(1 <= c <= self.palette_size for c in self.assignment.values())


class _Partial:
    """Edge coloring under construction with per-vertex colour -> neighbour maps."""

    def __init__(self, g: Graph):
        self.g = g
        self.color: dict[Edge, int] = {}
        self.at: list[dict[int, int]] = [{} for _ in range(g.order)]

    def get(self, u: int, v: int) -> int | None:
        return self.color.get(_canon(u, v))

    def set(self, u: int, v: int, c: int) -> None:
        self.clear(u, v)
        self.color[_canon(u, v)] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def clear(self, u: int, v: int) -> None:
        old = self.color.pop(_canon(u, v), None)
        if old is not None:
            del self.at[u][old]
            del self.at[v][old]

    def is_free(self, v: int, c: int) -> bool:
        return c not in self.at[v]

    def free(self, v: int, palette: int) -> int:
        for c in range(1, palette + 1):
            if c not in self.at[v]:
                return c
        raise AssertionError(f"no free colour at {v}")

    def kempe_path(self, start: int, a: int, b: int) -> list[int]:
        """Vertices of the maximal path from ``start`` alternating colours a, b, a, ..."""
        path = [start]
        cur, col = start, a
        while col in self.at[cur]:
            nxt = self.at[cur][col]
            path.append(nxt)
            cur, col = nxt, (b if col == a else a)
            if cur == start:  # closed alternating cycle
                break
        return path

    def swap_path(self, path: list[int], a: int, b: int) -> None:
        pairs = list(zip(path, path[1:]))
        cols = [self.get(x, y) for x, y in pairs]
        for x, y in pairs:
            self.clear(x, y)
        for (x, y), c in zip(pairs, cols):
            self.set(x, y, b if c == a else a)


def _misra_gries(g: Graph) -> _Partial:
    palette = g.max_degree() + 1
    pc = _Partial(g)
    for u, v in g.edges:
        # maximal fan at u starting with v
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for w in g.adjacency[u]:
                if w in in_fan:
                    continue
                cw = pc.get(u, w)
                if cw is not None and pc.is_free(last, cw):
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        c = pc.free(u, palette)
        d = pc.free(fan[-1], palette)
        if c != d:
            path = pc.kempe_path(u, d, c)
            pc.swap_path(path, d, c)
        # shortest fan prefix ending at a vertex where d is free
        k = 0
        while True:
            w = fan[k]
            if pc.is_free(w, d):
                valid = all(
                    pc.get(u, fan[j + 1]) is not None and pc.is_free(fan[j], pc.get(u, fan[j + 1]))
                    for j in range(k)
                )
                if valid:
                    break
            k += 1
        for j in range(k):
            nxt_col = pc.get(u, fan[j + 1])
            pc.clear(u, fan[j + 1])
            pc.set(u, fan[j], nxt_col)
        pc.set(u, fan[k], d)
    return pc


def _drop_top_color(pc: _Partial, top: int) -> bool:
    """Try to recolour every edge of colour ``top`` into 1..top-1 by Kempe swaps."""
    changed = True
    while changed:
        changed = False
        for e in sorted(e for e, c in pc.color.items() if c == top):
            u, v = e
            pc.clear(u, v)
            fu = [c for c in range(1, top) if pc.is_free(u, c)]
            fv = [c for c in range(1, top) if pc.is_free(v, c)]
            common = [c for c in fu if c in fv]
            if common:
                pc.set(u, v, common[0])
                changed = True
                continue
            done = False
            for a in fu:
                for b in fv:
                    # a is used at v, b at u: swap the a/b chain leaving v
                    path = pc.kempe_path(v, a, b)
                    if u not in path:
                        pc.swap_path(path, a, b)
                        pc.set(u, v, a)
                        done = True
                        break
                    path = pc.kempe_path(u, b, a)
                    if v not in path:
                        pc.swap_path(path, b, a)
                        pc.set(u, v, b)
                        done = True
                        break
                if done:
                    break
            if done:
                changed = True
            else:
                pc.set(u, v, top)
    return all(c < top for c in pc.color.values())


def _exact_edge_coloring(g: Graph, k: int, node_budget: int) -> dict[Edge, int] | None:
    """Backtracking k-edge-coloring; None if none exists or the budget runs out."""
    edges = list(g.edges)
    idx = {e: i for i, e in enumerate(edges)}
    nbrs = [[idx[f] for x in e for f in g.incident_edges(x) if f != e] for e in edges]
    col = [0] * len(edges)
    nodes = 0

    def rec(done: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise TimeoutError
        if done == len(edges):
            return True
        # most constrained uncoloured edge
        best, best_opts = -1, None
        for i in range(len(edges)):
            if col[i]:
                continue
            used = {col[j] for j in nbrs[i]}
            opts = [c for c in range(1, k + 1) if c not in used]
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = i, opts
                if not opts:
                    return False
        max_used = max(col)
        for c in best_opts:
            if c > max_used + 1:
                break
            col[best] = c
            if rec(done + 1):
                return True
            col[best] = 0
        return False

    try:
        if rec(0):
            return {e: col[i] for i, e in enumerate(edges)}
    except TimeoutError:
        pass
    return None


def vizing_color(g: Graph, exact_budget: int = 20_000) -> EdgeColoring:
    """Proper edge coloring with at most Δ+1 colours.

    Misra-Gries fan rotation gives Δ+1 colours; we then try to empty the top
    colour class with Kempe swaps and, failing that, a bounded exact search
    for a Δ-coloring.  Class-1 graphs therefore usually come back with Δ colours.
    """
    if not g.edges:
        return EdgeColoring({}, 0)
    delta = g.max_degree()
    pc = _misra_gries(g)
    top = delta + 1
    if any(c == top for c in pc.color.values()) and not _drop_top_color(pc, top):
        exact = _exact_edge_coloring(g, delta, exact_budget)
        if exact is not None:
            return EdgeColoring(exact, delta)
    used = sorted(set(pc.color.values()))
    relabel = {c: k + 1 for k, c in enumerate(used)}
    return EdgeColoring({e: relabel[c] for e, c in sorted(pc.color.items())}, len(used))


def lemma1_target_sequence(edge_count: int, k: int) -> tuple[int, ...]:
    """Equitable class sizes for ``edge_count`` edges in ``k`` colours, largest first.

    Entry i (1-based) is ceil((edge_count - i + 1) / k).
    """
    if k < 1:
        raise ValueError("need at least one colour")
    return tuple(-(-(edge_count - i) // k) for i in range(k))


def _unbalanced_path(classes: dict[int, set[Edge]], a: int, b: int) -> list[Edge]:
    """An a/b alternating path component with one more a-edge than b-edges."""
    at: dict[int, list[Edge]] = {}
    for c in (a, b):
        for e in classes[c]:
            for x in e:
                at.setdefault(x, []).append(e)
    color = {e: a for e in classes[a]} | {e: b for e in classes[b]}
    seen: set[Edge] = set()
    for start in sorted(at):
        if len(at[start]) != 1 or at[start][0] in seen:
            continue
        # walk the path from this endpoint
        path, cur, prev = [], start, None
        while True:
            nxt = [e for e in at[cur] if e != prev]
            if not nxt:
                break
            e = nxt[0]
            path.append(e)
            seen.add(e)
            prev = e
            cur = e[0] if e[1] == cur else e[1]
        n_a = sum(1 for e in path if color[e] == a)
        if n_a > len(path) - n_a:
            return path
    raise AssertionError("no unbalanced alternating path; larger class must have one")


def equitable_edge_color(
    g: Graph, target: Sequence[int], *, base: EdgeColoring | None = None, check: bool = False
) -> EdgeColoring:
    """Proper edge coloring whose class sizes equal ``target`` exactly.

    ``target`` must be nonincreasing, equitable and sum to |E|.  Starting from a
    Vizing coloring, repeatedly take the largest and smallest classes; their
    union is a set of alternating paths and even cycles, and some path has
    more edges of the larger class, so swapping it moves one edge across.
    Colour 1 ends up with the largest class.
    """
    k = len(target)
    if sum(target) != g.n_edges:
        raise ValueError(f"target sums to {sum(target)}, graph has {g.n_edges} edges")
    if list(target) != sorted(target, reverse=True) or (target and target[0] - target[-1] > 1):
        raise ValueError(f"target {tuple(target)} is not a nonincreasing equitable sequence")
    base = base or vizing_color(g)
    if base.colors_used() > k:
        raise TargetInfeasible(f"need {base.colors_used()} colours, target offers {k}")
    classes: dict[int, set[Edge]] = {c: set() for c in range(1, k + 1)}
    for e, c in base.assignment.items():
        classes[c].add(e)
    while True:
        big = max(classes, key=lambda c: (len(classes[c]), -c))
        small = min(classes, key=lambda c: (len(classes[c]), c))
        if len(classes[big]) - len(classes[small]) <= 1:
            break
        for e in _unbalanced_path(classes, big, small):
            if e in classes[big]:
                classes[big].remove(e)
                classes[small].add(e)
            else:
                classes[small].remove(e)
                classes[big].add(e)
        if check:
            tmp = EdgeColoring({e: c for c, es in classes.items() for e in es}, k)
            assert tmp.is_proper(g), "rebalancing broke properness"
    order = sorted(classes, key=lambda c: (-len(classes[c]), c))
    assignment = {e: new for new, old in enumerate(order, start=1) for e in classes[old]}
    out = EdgeColoring(dict(sorted(assignment.items())), k)
    if out.class_sizes != tuple(target):
        raise TargetInfeasible(f"reached {out.class_sizes}, wanted {tuple(target)}")
    return out
