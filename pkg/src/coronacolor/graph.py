"""Graphs, semi-graphs and corona products with stable element addressing.

Every structure exposes ``elements()``: the canonical ordered list of its
vertices and edges as :class:`ElementId` values.  Colorings are keyed by these
ids, so the order here is what makes serialized colorings deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for structural errors on input graphs."""


class DuplicateEdge(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


class NotCubic(GraphError):
    pass


# Address prefixes.  Plain graphs use v/e, the semi-corona adds s (semi-edge),
# coronas use g/ge for the center and h/he/l for copies and link edges.
VERTEX_KINDS = frozenset({"v", "g", "h"})
KIND_ARITY = {"v": 1, "e": 2, "g": 1, "ge": 2, "s": 2, "h": 2, "he": 3, "l": 2}


@dataclass(frozen=True, order=True)
class ElementId:
    kind: str
    idx: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KIND_ARITY:
            raise ValueError(f"unknown element kind {self.kind!r}")
        if len(self.idx) != KIND_ARITY[self.kind]:
            raise ValueError(f"{self.kind} expects {KIND_ARITY[self.kind]} indices, got {self.idx}")

    @property
    def is_vertex(self) -> bool:
        return self.kind in VERTEX_KINDS

    def address(self) -> str:
        k, idx = self.kind, self.idx
        if k in ("v", "g"):
            return f"{k}:{idx[0]}"
        if k in ("e", "ge"):
            return f"{k}:{idx[0]}-{idx[1]}"
        if k == "he":
            return f"he:{idx[0]}:{idx[1]}-{idx[2]}"
        return f"{k}:{idx[0]}:{idx[1]}"

    @classmethod
    def parse(cls, text: str) -> "ElementId":
        try:
            kind, rest = text.split(":", 1)
            if kind in ("e", "ge"):
                a, b = rest.split("-")
                idx: tuple[int, ...] = (int(a), int(b))
            elif kind == "he":
                i, pair = rest.split(":")
                a, b = pair.split("-")
                idx = (int(i), int(a), int(b))
            else:
                idx = tuple(int(p) for p in rest.split(":"))
            return cls(kind, idx)
        except ValueError as exc:
            raise ValueError(f"bad element address {text!r}") from exc

    def __str__(self) -> str:
        return self.address()


def _canon(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    Use :func:`build_graph` rather than the constructor; it validates and
    canonicalizes the edge list.
    """

    order: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def is_cubic(self) -> bool:
        return all(len(a) == 3 for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def incident_edges(self, v: int) -> list[tuple[int, int]]:
        return [_canon(v, w) for w in self.adjacency[v]]

    def elements(self) -> list[ElementId]:
        return [ElementId("v", (v,)) for v in range(self.order)] + [
            ElementId("e", e) for e in self.edges
        ]

    def components(self) -> list[list[int]]:
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def to_dict(self) -> dict:
        return {"n": self.order, "edges": [list(e) for e in self.edges]}


def build_graph(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    if order < 0:
        raise IndexOutOfRange(f"negative order {order}")
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < order and 0 <= v < order):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{order - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        e = _canon(u, v)
        if e in seen:
            raise DuplicateEdge(f"edge {e} given twice")
        seen.add(e)
    canon = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(order)]
    for u, v in canon:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(order, canon, tuple(tuple(sorted(a)) for a in adj))


def require_cubic(g: Graph, role: str = "graph") -> None:
    if g.order == 0 or not g.is_cubic():
        bad = [v for v in range(g.order) if g.degree(v) != 3]
        raise NotCubic(f"{role} is not cubic (vertices of wrong degree: {bad[:8]})")


def is_bridgeless(g: Graph) -> bool:
    """True iff no edge is a cut edge.

    Works per connected component, so disconnected inputs are fine.  Uses the
    iterative DFS low-link method; parallel edges cannot occur.
    """
    disc = [-1] * g.order
    low = [0] * g.order
    t = 0
    for root in range(g.order):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        # (vertex, parent, neighbor iterator)
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(g.adjacency[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    return False
    return True


@dataclass(frozen=True)
class SemiGraph:
    """A graph with ``semi_per_vertex`` dangling semi-edges at every vertex."""

    base: Graph
    semi_per_vertex: int

    @property
    def n_semi_edges(self) -> int:
        return self.base.order * self.semi_per_vertex

    def degree(self, v: int) -> int:
        return self.base.degree(v) + self.semi_per_vertex

    def elements(self) -> list[ElementId]:
        g = self.base
        out = [ElementId("g", (v,)) for v in range(g.order)]
        out += [ElementId("ge", e) for e in g.edges]
        out += [
            ElementId("s", (v, slot))
            for v in range(g.order)
            for slot in range(self.semi_per_vertex)
        ]
        return out


def semi_corona(g: Graph, h: int) -> SemiGraph:
    require_cubic(g)
    if h < 0:
        raise ValueError("semi-edge count must be nonnegative")
    return SemiGraph(g, h)


@dataclass(frozen=True)
class CoronaInstance:
    """The corona ``center ∘ outer``: copy ``i`` of ``outer`` hangs off center vertex ``i``."""

    center: Graph
    outer: Graph

    @property
    def n_vertices(self) -> int:
        return self.center.order * (1 + self.outer.order)

    @property
    def n_edges(self) -> int:
        return self.center.n_edges + self.center.order * (self.outer.n_edges + self.outer.order)

    @property
    def n_elements(self) -> int:
        return self.n_vertices + self.n_edges

    def max_degree(self) -> int:
        return self.outer.order + 3

    def degree(self, elem: ElementId) -> int:
        if elem.kind == "g":
            return self.center.degree(elem.idx[0]) + self.outer.order
        if elem.kind == "h":
            return self.outer.degree(elem.idx[1]) + 1
        raise ValueError(f"{elem} is not a vertex")

    @cached_property
    def _elements(self) -> tuple[ElementId, ...]:
        g, h = self.center, self.outer
        out = [ElementId("g", (v,)) for v in range(g.order)]
        out += [ElementId("ge", e) for e in g.edges]
        for i in range(g.order):
            out += [ElementId("h", (i, j)) for j in range(h.order)]
            out += [ElementId("he", (i, a, b)) for a, b in h.edges]
            out += [ElementId("l", (i, j)) for j in range(h.order)]
        return tuple(out)

    @cached_property
    def _index(self) -> dict[ElementId, int]:
        return {e: k for k, e in enumerate(self._elements)}

    def elements(self) -> list[ElementId]:
        return list(self._elements)

    def index_of(self, elem: ElementId) -> int:
        return self._index[elem]

    def element_at(self, k: int) -> ElementId:
        return self._elements[k]

    def vertex_number(self, elem: ElementId) -> int:
        """Flat vertex number: center vertices first, then copies in order."""
        if elem.kind == "g":
            return elem.idx[0]
        i, j = elem.idx
        return self.center.order + i * self.outer.order + j

    def as_graph(self) -> Graph:
        g, h = self.center, self.outer
        ng, nh = g.order, h.order
        edges = list(g.edges)
        for i in range(ng):
            base = ng + i * nh
            edges += [(base + a, base + b) for a, b in h.edges]
            edges += [(i, base + j) for j in range(nh)]
        return build_graph(self.n_vertices, edges)


def build_corona(center: Graph, outer: Graph) -> CoronaInstance:
    require_cubic(center, "center")
    require_cubic(outer, "outer")
    return CoronaInstance(center, outer)
