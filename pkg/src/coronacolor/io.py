"""File formats: JSON graphs, graph6, coloring documents and DOT export."""

from __future__ import annotations

import json
import re
from pathlib import Path

import networkx as nx

from .catalog import UnknownName, named, random_cubic
from .coloring import TotalColoring
from .graph import CoronaInstance, ElementId, Graph, SemiGraph, build_corona, build_graph

SCHEMA_VERSION = "1"
MODES = ("equitable", "type1", "semi-corona", "total")


def graph_from_dict(d: dict) -> Graph:
    return build_graph(int(d["n"]), [tuple(e) for e in d["edges"]])


def graph_from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    g = nx.from_graph6_bytes(s.encode("ascii"))
    return build_graph(g.number_of_nodes(), sorted(tuple(sorted(e)) for e in g.edges()))


def graph_to_graph6(g: Graph) -> str:
    x = nx.Graph()
    x.add_nodes_from(range(g.order))
    x.add_edges_from(g.edges)
    return nx.to_graph6_bytes(x, header=False).decode("ascii").strip()


_RANDOM = re.compile(r"^random:?(\d+)$")


def load_graph(spec: str, seed: int = 0) -> Graph:
    """Resolve a graph argument: catalog name, ``random:<n>``, a JSON file or a graph6 file/string."""
    m = _RANDOM.match(spec)
    if m:
        return random_cubic(int(m.group(1)), seed)
    path = Path(spec)
    if path.is_file():
        text = path.read_text()
        if text.lstrip().startswith("{"):
            return graph_from_dict(json.loads(text))
        return graph_from_graph6(text.splitlines()[0])
    try:
        return named(spec)
    except UnknownName:
        pass
    try:
        return graph_from_graph6(spec)
    except Exception as exc:
        raise ValueError(f"cannot resolve graph {spec!r}: not a catalog name, file or graph6 string") from exc


def load_structure(spec: str, seed: int = 0, semi_h: int | None = None):
    """Like :func:`load_graph` but also accepts ``<center>-corona-<outer>``."""
    if "-corona-" in spec and not Path(spec).is_file():
        a, b = spec.split("-corona-", 1)
        return build_corona(load_graph(a, seed), load_graph(b, seed))
    g = load_graph(spec, seed)
    if semi_h is not None:
        return SemiGraph(g, semi_h)
    return g


def structure_to_dict(structure) -> dict:
    if isinstance(structure, CoronaInstance):
        return {"center": structure.center.to_dict(), "outer": structure.outer.to_dict()}
    if isinstance(structure, SemiGraph):
        return {"graph": structure.base.to_dict(), "semi_h": structure.semi_per_vertex}
    return {"graph": structure.to_dict()}


def structure_from_dict(d: dict):
    if "center" in d:
        return build_corona(graph_from_dict(d["center"]), graph_from_dict(d["outer"]))
    g = graph_from_dict(d["graph"])
    if "semi_h" in d:
        return SemiGraph(g, int(d["semi_h"]))
    return g


def coloring_document(coloring: TotalColoring, structure, mode: str) -> dict:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    sizes = coloring.class_sizes
    return {
        "schema_version": SCHEMA_VERSION,
        "mode": mode,
        "palette_size": coloring.palette_size,
        "structure": structure_to_dict(structure),
        "entries": [[e.address(), coloring.assignment[e]] for e in structure.elements()
                    if e in coloring.assignment],
        "summary": {"class_sizes": list(sizes), "spread": coloring.spread},
    }


_LEAF_ARRAY = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def dumps(doc: dict) -> str:
    """Deterministic JSON: sorted keys, one entry per line."""
    text = json.dumps(doc, indent=1, sort_keys=True)
    text = _LEAF_ARRAY.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    return text + "\n"


class DocumentError(ValueError):
    pass


def read_document(text: str) -> tuple[dict, TotalColoring]:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc.get('schema_version')!r}")
    assignment = {}
    for addr, c in doc["entries"]:
        e = ElementId.parse(addr)
        if e in assignment:
            raise DocumentError(f"duplicate entry for {addr}")
        assignment[e] = int(c)
    return doc, TotalColoring(int(doc["palette_size"]), assignment)


# fixed palette cycled by colour index
DOT_PALETTE = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
    "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8",
    "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080",
)


def to_dot(coloring: TotalColoring, structure) -> str:
    def hexcol(c: int) -> str:
        return DOT_PALETTE[(c - 1) % len(DOT_PALETTE)]

    lines = ["graph coloring {", "  node [style=filled];"]
    for e in structure.elements():
        c = coloring.assignment[e]
        if e.is_vertex:
            name = e.address().replace(":", "_")
            lines.append(f'  {name} [label="{e.address()}\\n{c}", fillcolor="{hexcol(c)}"];')
    for e in structure.elements():
        if e.is_vertex:
            continue
        c = coloring.assignment[e]
        k, idx = e.kind, e.idx
        if k in ("e", "ge"):
            pre = "v" if k == "e" else "g"
            a, b = f"{pre}_{idx[0]}", f"{pre}_{idx[1]}"
        elif k == "he":
            a, b = f"h_{idx[0]}_{idx[1]}", f"h_{idx[0]}_{idx[2]}"
        elif k == "l":
            a, b = f"g_{idx[0]}", f"h_{idx[0]}_{idx[1]}"
        else:  # semi-edge: draw to an invisible stub
            stub = f"s_{idx[0]}_{idx[1]}"
            lines.append(f"  {stub} [shape=point, style=invis];")
            a, b = f"g_{idx[0]}", stub
        lines.append(f'  {a} -- {b} [color="{hexcol(c)}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
