"""Equitable total (h+4)-coloring of the semi-h-corona of a cubic graph.

Three steps: equitable edge coloring of G with the prescribed sequence,
greedy proper vertex coloring, then the forced completion of the semi-edges
at each vertex with every colour not already present there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import TotalColoring
from .edge_coloring import equitable_edge_color, lemma1_target_sequence
from .graph import ElementId, Graph, SemiGraph, semi_corona


class HTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class SemiColoring:
    graph: Graph
    h: int
    vertex_colors: tuple[int, ...]
    edge_colors: dict[tuple[int, int], int]
    semi_edge_colors: tuple[tuple[int, ...], ...]
    edge_target: tuple[int, ...]

    @property
    def palette_size(self) -> int:
        return self.h + 4

    @property
    def forbidden_sets(self) -> tuple[frozenset[int], ...]:
        g = self.graph
        return tuple(
            frozenset([self.vertex_colors[v]] + [self.edge_colors[e] for e in g.incident_edges(v)])
            for v in range(g.order)
        )

    def structure(self) -> SemiGraph:
        return SemiGraph(self.graph, self.h)

    def class_sizes(self) -> tuple[int, ...]:
        return self.to_total().class_sizes

    def to_total(self) -> TotalColoring:
        a: dict[ElementId, int] = {}
        for v, c in enumerate(self.vertex_colors):
            a[ElementId("g", (v,))] = c
        for e, c in self.edge_colors.items():
            a[ElementId("ge", e)] = c
        for v, cols in enumerate(self.semi_edge_colors):
            for slot, c in enumerate(cols):
                a[ElementId("s", (v, slot))] = c
        return TotalColoring(self.palette_size, a)


def color_semi_corona(g: Graph, h: int) -> SemiColoring:
    if h < 4:
        raise HTooSmall(f"need at least 4 semi-edges per vertex, got {h}")
    semi_corona(g, h)  # validates cubicity
    k = h + 4
    target = lemma1_target_sequence(g.n_edges, k)
    edges = equitable_edge_color(g, target).assignment

    vcol = [0] * g.order
    for v in range(g.order):
        banned = {edges[e] for e in g.incident_edges(v)} | {vcol[w] for w in g.adjacency[v]}
        allowed = [c for c in range(1, k + 1) if c not in banned]
        # at most 3 edge colours and 3 neighbour colours are banned out of >= 8
        assert len(allowed) >= 2, f"greedy stalled at vertex {v}"
        vcol[v] = allowed[0]

    semi = []
    for v in range(g.order):
        f = {vcol[v]} | {edges[e] for e in g.incident_edges(v)}
        assert len(f) == 4
        semi.append(tuple(c for c in range(1, k + 1) if c not in f))
    return SemiColoring(g, h, tuple(vcol), dict(edges), tuple(semi), target)
