"""Perfect matchings in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph


class NoPerfectMatching(ValueError):
    pass


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)

    def covers(self, g: Graph) -> bool:
        return len(self.edges) * 2 == g.order and len({v for e in self.edges for v in e}) == g.order

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u], out[v] = v, u
        return out


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching; exposed roots and neighbours scanned in index order."""
    n = g.order
    adj = g.adjacency
    match = [-1] * n

    def find_path(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the alternating path ending at `to`
                        while to != -1:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to], match[pv] = pv, to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return Matching(tuple(sorted((u, w) for u, w in enumerate(match) if u < w)))


def perfect_matching(g: Graph) -> Matching:
    if g.order % 2:
        raise NoPerfectMatching(f"odd order {g.order}")
    m = maximum_matching(g)
    if not m.covers(g):
        raise NoPerfectMatching(f"maximum matching has size {len(m)} < {g.order // 2}")
    return m


def iter_perfect_matchings(g: Graph) -> Iterator[Matching]:
    """All perfect matchings, lexicographic in edge order.  Exponential; small graphs only."""
    mate = [-1] * g.order
    chosen: list[tuple[int, int]] = []

    def rec() -> Iterator[Matching]:
        v = next((u for u in range(g.order) if mate[u] == -1), None)
        if v is None:
            yield Matching(tuple(sorted(chosen)))
            return
        for w in g.adjacency[v]:
            if mate[w] == -1:
                mate[v], mate[w] = w, v
                chosen.append((v, w))
                yield from rec()
                chosen.pop()
                mate[v] = mate[w] = -1

    if g.order % 2 == 0:
        yield from rec()
