"""Independent certification of total colorings, and exact oracles for tiny graphs.

The verifier never looks at how a coloring was built.  It decodes each element
address into a vertex or an edge over a flat vertex numbering of its own and
checks every adjacency and incidence pair directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Union

from .coloring import TotalColoring
from .graph import CoronaInstance, ElementId, Graph, SemiGraph


class MissingAssignment(KeyError):
    def __init__(self, element: ElementId):
        super().__init__(element.address())
        self.element = element


class TooLarge(ValueError):
    pass


class NotFound(LookupError):
    pass


Structure = Union[Graph, SemiGraph, CoronaInstance]

# elements (vertices + edges) allowed in the exact oracles
ORACLE_CAP = 40


@dataclass(frozen=True)
class VerifyReport:
    proper: bool
    colors_used: int
    spread: int
    class_sizes: tuple[int, ...]
    violations: tuple[tuple[ElementId, ElementId, int], ...] = field(default=())
    require_equitable: bool = False

    @property
    def equitable(self) -> bool:
        return self.spread <= 1

    @property
    def ok(self) -> bool:
        return self.proper and (self.equitable or not self.require_equitable)

    def summary(self) -> str:
        return f"k={len(self.class_sizes)} spread={self.spread} proper={str(self.proper).lower()}"


def _endpoints(structure: Structure, elem: ElementId) -> tuple:
    """('V', x) for a vertex, ('E', x, y) for an edge, over a private vertex numbering."""
    k, idx = elem.kind, elem.idx
    if isinstance(structure, Graph):
        n = structure.order
        if k == "v" and 0 <= idx[0] < n:
            return ("V", idx[0])
        if k == "e" and structure.has_edge(*idx) and idx[0] < idx[1]:
            return ("E", idx[0], idx[1])
    elif isinstance(structure, SemiGraph):
        g = structure.base
        if k == "g" and 0 <= idx[0] < g.order:
            return ("V", idx[0])
        if k == "ge" and g.has_edge(*idx) and idx[0] < idx[1]:
            return ("E", idx[0], idx[1])
        if k == "s" and 0 <= idx[0] < g.order and 0 <= idx[1] < structure.semi_per_vertex:
            # dangling end gets a private vertex nobody else touches
            return ("E", idx[0], ("dangling", idx[0], idx[1]))
    else:
        g, h = structure.center, structure.outer
        ng, nh = g.order, h.order

        def copy_vertex(i: int, j: int) -> int:
            return ng + i * nh + j

        if k == "g" and 0 <= idx[0] < ng:
            return ("V", idx[0])
        if k == "ge" and g.has_edge(*idx) and idx[0] < idx[1]:
            return ("E", idx[0], idx[1])
        if k == "h" and 0 <= idx[0] < ng and 0 <= idx[1] < nh:
            return ("V", copy_vertex(*idx))
        if k == "he" and 0 <= idx[0] < ng and h.has_edge(idx[1], idx[2]) and idx[1] < idx[2]:
            return ("E", copy_vertex(idx[0], idx[1]), copy_vertex(idx[0], idx[2]))
        if k == "l" and 0 <= idx[0] < ng and 0 <= idx[1] < nh:
            return ("E", idx[0], copy_vertex(*idx))
    raise ValueError(f"{elem.address()} is not an element of this structure")


def structure_elements(structure: Structure) -> list[ElementId]:
    return structure.elements()


def verify(structure: Structure, coloring: TotalColoring, require_equitable: bool = False) -> VerifyReport:
    elements = structure_elements(structure)
    for e in elements:
        if e not in coloring.assignment:
            raise MissingAssignment(e)
    extra = set(coloring.assignment) - set(elements)
    if extra:
        raise ValueError(f"coloring assigns non-elements: {sorted(x.address() for x in extra)[:5]}")
    k = coloring.palette_size
    for e, c in coloring.assignment.items():
        if not 1 <= c <= k:
            raise ValueError(f"{e.address()} has colour {c} outside 1..{k}")

    # star of each vertex: the vertex itself plus every edge ending there
    star: dict[object, list[ElementId]] = {}
    vertex_elem: dict[object, ElementId] = {}
    adjacent_pairs = []
    for e in elements:
        ends = _endpoints(structure, e)
        if ends[0] == "V":
            vertex_elem[ends[1]] = e
            star.setdefault(ends[1], []).append(e)
        else:
            _, x, y = ends
            star.setdefault(x, []).append(e)
            star.setdefault(y, []).append(e)
            adjacent_pairs.append((x, y))

    col = coloring.assignment
    violations = []
    for members in star.values():
        for a, b in combinations(members, 2):
            if col[a] == col[b]:
                violations.append((a, b, col[a]))
    for x, y in adjacent_pairs:
        a, b = vertex_elem.get(x), vertex_elem.get(y)
        if a is not None and b is not None and col[a] == col[b]:
            violations.append((a, b, col[a]))
    violations.sort(key=lambda t: (t[0].address(), t[1].address()))

    sizes = [0] * k
    for c in col.values():
        sizes[c - 1] += 1
    return VerifyReport(
        proper=not violations,
        colors_used=len(set(col.values())),
        spread=max(sizes) - min(sizes) if sizes else 0,
        class_sizes=tuple(sizes),
        violations=tuple(violations),
        require_equitable=require_equitable,
    )


# -- exact oracles -----------------------------------------------------------

def _total_conflict_graph(g: Graph) -> tuple[list[ElementId], list[list[int]]]:
    elems = g.elements()
    if len(elems) > ORACLE_CAP:
        raise TooLarge(f"{len(elems)} elements exceed the oracle cap of {ORACLE_CAP}")
    nbr: list[set[int]] = [set() for _ in elems]
    pos = {e: i for i, e in enumerate(elems)}
    for u, v in g.edges:
        a, b = pos[ElementId("v", (u,))], pos[ElementId("v", (v,))]
        nbr[a].add(b)
        nbr[b].add(a)
    for x in range(g.order):
        members = [pos[ElementId("v", (x,))]] + [pos[ElementId("e", e)] for e in g.incident_edges(x)]
        for a, b in combinations(members, 2):
            nbr[a].add(b)
            nbr[b].add(a)
    # fail-first: degree in the total graph descending, then canonical order
    order = sorted(range(len(elems)), key=lambda i: (-len(nbr[i]), i))
    return [elems[i] for i in order], [sorted(order.index(j) for j in nbr[i]) for i in order]


def _search(elems, nbr, k: int, equitable: bool) -> dict[ElementId, int] | None:
    n = len(elems)
    col = [0] * n
    sizes = [0] * (k + 1)
    lo, n_big = divmod(n, k)
    cap = lo + (1 if n_big else 0)

    def size_ok(c: int) -> bool:
        if not equitable:
            return True
        if sizes[c] + 1 > cap:
            return False
        if n_big and sizes[c] + 1 == cap:
            return sum(1 for d in range(1, k + 1) if sizes[d] == cap) < n_big
        return True

    def rec(i: int, max_used: int) -> bool:
        if i == n:
            return True
        if equitable:
            # the remaining elements must be able to lift every class to the floor
            deficit = sum(max(0, lo - sizes[d]) for d in range(1, k + 1))
            if deficit > n - i:
                return False
        banned = {col[j] for j in nbr[i] if j < i}
        # colours are interchangeable: a fresh colour is only tried once
        for c in range(1, min(k, max_used + 1) + 1):
            if c in banned or not size_ok(c):
                continue
            col[i] = c
            sizes[c] += 1
            if rec(i + 1, max(max_used, c)):
                return True
            sizes[c] -= 1
            col[i] = 0
        return False

    if rec(0, 0):
        return {e: col[i] for i, e in enumerate(elems)}
    return None


def brute_force_total_chromatic(g: Graph, k_max: int) -> int:
    elems, nbr = _total_conflict_graph(g)
    lower = g.max_degree() + 1
    for k in range(max(1, lower), k_max + 1):
        if _search(elems, nbr, k, equitable=False) is not None:
            return k
    raise NotFound(f"no total coloring with at most {k_max} colours")


def brute_force_equitable_total(g: Graph, k: int) -> TotalColoring:
    elems, nbr = _total_conflict_graph(g)
    found = _search(elems, nbr, k, equitable=True)
    if found is None:
        raise NotFound(f"no equitable total {k}-coloring")
    return TotalColoring(k, {e: found[e] for e in g.elements()})


# -- the small-order computer check --------------------------------------------

CHECK_CENTERS = ("k4", "k33", "prism")


def exhaustive_extension_check(n_outer: int, dump_dir: str | Path | None = None,
                               progress=None) -> bool:
    """Run and certify the equitable construction for every cubic outer graph
    of order ``n_outer`` (4, 6 or 8) against the centers K4, K33 and the prism."""
    from .catalog import all_cubic_entries, named
    from .extension import color_corona_equitable
    from .io import coloring_document, dumps

    ok = True
    for entry in all_cubic_entries(n_outer):
        for cname in CHECK_CENTERS:
            g = named(cname)
            try:
                res = color_corona_equitable(g, entry.graph)
                rep = verify(res.instance, res.coloring, require_equitable=True)
                good = rep.ok and rep.colors_used == n_outer + 4
            except Exception as exc:  # any failure is a counterexample
                res, rep, good = None, None, False
                if progress:
                    progress(f"{cname} o {entry.name}: error {exc!r}")
            if progress and rep is not None:
                progress(f"{cname} o {entry.name}: {rep.summary()} {'ok' if good else 'FAIL'}")
            if not good:
                ok = False
                if dump_dir is not None and res is not None:
                    path = Path(dump_dir) / f"counterexample_{cname}_{entry.name}.json"
                    path.parent.mkdir(parents=True, exist_ok=True)
                    path.write_text(dumps(coloring_document(res.coloring, res.instance, "equitable")))
    return ok


def report_to_json(rep: VerifyReport) -> str:
    return json.dumps({
        "proper": rep.proper, "colors_used": rep.colors_used, "spread": rep.spread,
        "class_sizes": list(rep.class_sizes),
        "violations": [[a.address(), b.address(), c] for a, b, c in rep.violations],
    }, sort_keys=True)
