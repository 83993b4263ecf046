"""Named cubic graphs, the complete small-order table, and a random generator."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, GraphError, build_graph


class UnknownName(KeyError):
    pass


class UnsupportedOrder(ValueError):
    pass


class OrderOdd(ValueError):
    pass


class RetryLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph

    @property
    def order(self) -> int:
        return self.graph.order


def _cycle_plus(n: int, chords: list[tuple[int, int]]) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)] + chords)


def _lcf(n: int, shifts: list[int]) -> Graph:
    """Hamiltonian cubic graph from LCF notation (shift list repeated to length n)."""
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i in range(n):
        j = (i + shifts[i % len(shifts)]) % n
        edges.add(tuple(sorted((i, j))))
    return build_graph(n, sorted(edges))


def generalized_petersen(n: int, k: int) -> Graph:
    outer = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n + i) for i in range(n)]
    inner = {tuple(sorted((n + i, n + (i + k) % n))) for i in range(n)}
    return build_graph(2 * n, outer + spokes + sorted(inner))


def moebius_ladder(n: int) -> Graph:
    """Cycle C_n plus the n/2 long diagonals."""
    return _cycle_plus(n, [(i, i + n // 2) for i in range(n // 2)])


def _k4() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def _k33() -> Graph:
    return build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


_NAMED = {
    "k4": _k4,
    "k33": _k33,
    "prism": lambda: generalized_petersen(3, 1),
    "cube": lambda: generalized_petersen(4, 1),
    "wagner": lambda: moebius_ladder(8),
    "petersen": lambda: generalized_petersen(5, 2),
    "pentagonal_prism": lambda: generalized_petersen(5, 1),
    "heawood": lambda: _lcf(14, [5, -5]),
    "moebius_kantor": lambda: generalized_petersen(8, 3),
    "dodecahedron": lambda: generalized_petersen(10, 2),
    "desargues": lambda: generalized_petersen(10, 3),
    "two_k4": lambda: build_graph(
        8, [(a, b) for a in range(4) for b in range(a + 1, 4)]
        + [(a, b) for a in range(4, 8) for b in range(a + 1, 8)]
    ),
}

# Complete list of connected cubic graphs on 4, 6 and 8 vertices (1, 2 and 5
# of them).  Derived by exhaustive enumeration of labelled cubic graphs up to
# isomorphism; re-validated every time the table is loaded.
_SMALL_TABLE: dict[int, list[tuple[str, list[tuple[int, int]]]]] = {
    4: [("k4", [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])],
    6: [
        ("k33", [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
        ("prism", [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)]),
    ],
    8: [
        ("cube", [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (2, 6), (3, 5),
                  (3, 6), (4, 7), (5, 7), (6, 7)]),
        ("wagner", [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (2, 6), (3, 5),
                    (3, 7), (4, 7), (5, 6), (6, 7)]),
        ("cubic8_a", [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 6),
                      (4, 7), (5, 6), (5, 7), (6, 7)]),
        ("cubic8_b", [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 6),
                      (4, 7), (5, 6), (5, 7), (6, 7)]),
        ("cubic8_c", [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 6), (3, 7),
                      (4, 6), (4, 7), (5, 6), (5, 7)]),
    ],
}


def named(name: str) -> Graph:
    key = name.lower().replace("-", "_")
    if key not in _NAMED:
        raise UnknownName(f"unknown graph {name!r}; known: {', '.join(catalog_names())}")
    return _NAMED[key]()


def catalog_names() -> list[str]:
    return sorted(_NAMED)


# -- isomorphism at desk scale ---------------------------------------------

def _refine(g: Graph) -> list[int]:
    """Stable colour refinement (1-WL) starting from degrees."""
    colors = [g.degree(v) for v in range(g.order)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in g.adjacency[v]))) for v in range(g.order)]
        palette = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def fingerprint(g: Graph) -> tuple:
    """Isomorphism invariant: order, size, and the refined colour histogram."""
    cols = _refine(g)
    hist = sorted(cols.count(c) for c in set(cols))
    tri = sum(
        1 for u, v in g.edges for w in g.adjacency[u] if w > v and g.has_edge(v, w)
    )
    return (g.order, g.n_edges, tuple(hist), tri)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if fingerprint(a) != fingerprint(b):
        return False
    n = a.order
    ca, cb = _refine(a), _refine(b)
    # refinement labels depend only on signatures, so they are comparable
    # across the two graphs and restrict candidate images
    order = sorted(range(n), key=lambda v: -a.degree(v))
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or ca[v] != cb[w]:
                continue
            ok = True
            for u in order[:k]:
                if a.has_edge(u, v) != b.has_edge(image[u], w):
                    ok = False
                    break
            if not ok:
                continue
            image[v], used[w] = w, True
            if extend(k + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)


def _load_small(order: int) -> list[CatalogEntry]:
    entries = [CatalogEntry(name, build_graph(order, edges)) for name, edges in _SMALL_TABLE[order]]
    for e in entries:
        if not e.graph.is_cubic():
            raise GraphError(f"catalog entry {e.name} is not cubic")
    for i, x in enumerate(entries):
        for y in entries[i + 1:]:
            if is_isomorphic(x.graph, y.graph):
                raise GraphError(f"catalog entries {x.name} and {y.name} are isomorphic")
    return entries


def all_cubic_entries(order: int) -> list[CatalogEntry]:
    if order not in _SMALL_TABLE:
        raise UnsupportedOrder(f"cubic table covers orders 4, 6, 8; got {order}")
    return _load_small(order)


def all_cubic(order: int) -> list[Graph]:
    """Every connected cubic graph on ``order`` vertices, up to isomorphism."""
    return [e.graph for e in all_cubic_entries(order)]


def random_cubic(order: int, seed: int, max_rounds: int = 10_000) -> Graph:
    """Uniform-ish random simple cubic graph via the pairing model with rejection."""
    if order % 2:
        raise OrderOdd(f"cubic graphs need even order, got {order}")
    if order < 4:
        raise ValueError("cubic graphs need at least 4 vertices")
    rng = random.Random(seed)
    points = [v for v in range(order) for _ in range(3)]
    for _ in range(max_rounds):
        rng.shuffle(points)
        edges = set()
        for k in range(0, len(points), 2):
            u, v = points[k], points[k + 1]
            if u == v:
                break
            e = (min(u, v), max(u, v))
            if e in edges:
                break
            edges.add(e)
        else:
            return build_graph(order, sorted(edges))
    raise RetryLimitExceeded(f"no simple pairing after {max_rounds} rounds")
