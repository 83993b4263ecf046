"""Deliberately naive reference checks, independent of the package's algorithms."""

from __future__ import annotations

from collections import deque
from itertools import combinations


def connected_without(n, edges, skip=None):
    adj = {v: [] for v in range(n)}
    for e in edges:
        if e == skip:
            continue
        u, v = e
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    todo = [0]
    while todo:
        u = todo.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == n


def bridgeless_by_deletion(n, edges):
    return all(connected_without(n, edges, skip=e) for e in edges)


def girth(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    best = None
    for s in range(n):
        dist, par = {s: 0}, {s: -1}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w], par[w] = dist[u] + 1, u
                    q.append(w)
                elif par[u] != w:
                    cyc = dist[u] + dist[w] + 1
                    best = cyc if best is None else min(best, cyc)
    return best


def edge_colorable(n, edges, k):
    """Plain DFS over edges in the given order; no heuristics."""
    col = {}

    def rec(i):
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in range(k):
            if all(col.get(f) != c for f in col if u in f or v in f):
                col[edges[i]] = c
                if rec(i + 1):
                    return True
                del col[edges[i]]
        return False

    return rec(0)


def total_elements(n, edges):
    elems = [("v", v) for v in range(n)] + [("e", e) for e in edges]
    conflicts = set()
    for u, v in edges:
        conflicts.add((("v", u), ("v", v)))
    for a, b in combinations(elems, 2):
        if a[0] == "v" and b[0] == "e" and a[1] in b[1]:
            conflicts.add((a, b))
        if a[0] == "e" and b[0] == "e" and set(a[1]) & set(b[1]):
            conflicts.add((a, b))
    nbr = {x: set() for x in elems}
    for a, b in conflicts:
        nbr[a].add(b)
        nbr[b].add(a)
    return elems, nbr


def total_colorable(n, edges, k):
    """Naive DFS in canonical element order, every colour tried at every step."""
    elems, nbr = total_elements(n, edges)
    col = {}

    def rec(i):
        if i == len(elems):
            return True
        x = elems[i]
        for c in range(k):
            if all(col.get(y) != c for y in nbr[x]):
                col[x] = c
                if rec(i + 1):
                    return True
                del col[x]
        return False

    return rec(0)


def dealt_sizes(total, k):
    """Equitable class sizes by dealing ``total`` items round-robin into k piles."""
    sizes = [0] * k
    for j in range(total):
        sizes[j % k] += 1
    return tuple(sizes)


def flat_element(inst, x):
    """A corona element as ("v", u) or ("e", (u, w)) over the flattened vertex numbering."""
    ng, nh = inst.center.order, inst.outer.order
    if x.kind == "g":
        return ("v", x.idx[0])
    if x.kind == "h":
        return ("v", ng + x.idx[0] * nh + x.idx[1])
    if x.kind == "ge":
        return ("e", x.idx)
    if x.kind == "he":
        i, a, b = x.idx
        return ("e", (ng + i * nh + a, ng + i * nh + b))
    i, j = x.idx
    return ("e", (i, ng + i * nh + j))
