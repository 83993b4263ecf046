"""Per-copy colour sequences that keep the running global coloring equitable.

Copy ``i`` of the outer graph holds ``n_H`` vertices and ``3 n_H / 2`` edges,
so its total sequence S_T is the equitable split of ``5 n_H / 2`` elements
over ``n_H + 4`` colours.  The edge sequence S_E drops one from every colour
that is used on a copy vertex (the link palette of the copy).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .semi_corona import SemiColoring


class OddOrder(ValueError):
    pass


class PlanInfeasible(RuntimeError):
    pass


def st_profile(n_outer: int) -> tuple[int, int, int]:
    """Number of colours with per-copy total 1, 2 and 3."""
    if n_outer % 2:
        raise OddOrder(f"outer graph order must be even, got {n_outer}")
    if n_outer < 4:
        raise ValueError(f"outer cubic graph needs at least 4 vertices, got {n_outer}")
    k = n_outer + 4
    total = 5 * n_outer // 2
    low, n_high = divmod(total, k)
    counts = [0, 0, 0, 0]
    counts[low] += k - n_high
    counts[low + 1] += n_high
    return counts[1], counts[2], counts[3]


def _profile_values(n_outer: int) -> tuple[int, int]:
    """(low value, number of colours taking low + 1)."""
    k = n_outer + 4
    low, n_high = divmod(5 * n_outer // 2, k)
    return low, n_high


@dataclass(frozen=True)
class SequencePlan:
    n_outer: int
    palette_size: int
    initial_counts: tuple[int, ...]
    per_copy_st: tuple[dict[int, int], ...]
    per_copy_se: tuple[dict[int, int], ...]
    history: tuple[tuple[int, ...], ...]

    @property
    def global_counts(self) -> tuple[int, ...]:
        return self.history[-1] if self.history else self.initial_counts

    def to_dict(self) -> dict:
        return {
            "n_outer": self.n_outer,
            "palette_size": self.palette_size,
            "initial_counts": list(self.initial_counts),
            "copies": [
                {str(c): [st[c], se[c]] for c in sorted(st)}
                for st, se in zip(self.per_copy_st, self.per_copy_se)
            ],
            "global_counts": list(self.global_counts),
        }


def candidate_sequences(
    counts: Sequence[int], n_outer: int, prefer: Sequence[int] = ()
) -> Iterator[dict[int, int]]:
    """Every S_T that keeps ``counts`` (colour c at index c-1) equitable.

    Larger values must go to colours with the smallest running count; only the
    choice among tied colours is free.  Colours in ``prefer`` are offered the
    larger values first, then lower colour index.
    """
    k = len(counts)
    low, n_high = _profile_values(n_outer)
    lo = min(counts)
    mins = [c for c in range(1, k + 1) if counts[c - 1] == lo]
    rest = [c for c in range(1, k + 1) if counts[c - 1] != lo]
    pref = set(prefer)

    def ranked(cols: list[int]) -> list[int]:
        return sorted(cols, key=lambda c: (c not in pref, c))

    if not rest or n_high <= len(mins):
        fixed, pool, need = [], ranked(mins), n_high
    else:
        fixed, pool, need = mins, ranked(rest), n_high - len(mins)
    for chosen in combinations(pool, need):
        high = set(fixed) | set(chosen)
        yield {c: low + 1 if c in high else low for c in range(1, k + 1)}


def edge_sequence(st: dict[int, int], vertex_palette: Sequence[int]) -> dict[int, int]:
    pal = set(vertex_palette)
    return {c: v - (1 if c in pal else 0) for c, v in st.items()}


AcceptFn = Callable[[int, dict[int, int], dict[int, int]], bool]


def plan(
    semi: SemiColoring,
    n_outer: int,
    copy_vertex_palettes: Sequence[Sequence[int]] | None = None,
    accept: AcceptFn | None = None,
    max_alternatives: int = 64,
) -> SequencePlan:
    """Choose S_T / S_E for each copy in order, keeping the global spread <= 1.

    ``accept(i, st, se)`` may reject a choice (e.g. when the copy cannot be
    extended with it); the next tie-broken alternative is then tried.
    """
    k = n_outer + 4
    if semi.palette_size != k:
        raise ValueError(f"semi-corona has {semi.palette_size} colours, corona needs {k}")
    palettes = copy_vertex_palettes if copy_vertex_palettes is not None else semi.semi_edge_colors
    forbidden = semi.forbidden_sets
    counts = list(semi.class_sizes())
    initial = tuple(counts)
    sts, ses, history = [], [], []
    for i, pal in enumerate(palettes):
        if len(pal) != n_outer or set(pal) & forbidden[i]:
            raise ValueError(f"copy {i}: palette must be the {n_outer} colours outside f(v_{i})")
        chosen = None
        for n_tried, st in enumerate(candidate_sequences(counts, n_outer, prefer=sorted(forbidden[i]))):
            if n_tried >= max_alternatives:
                break
            se = edge_sequence(st, pal)
            if accept is None or accept(i, st, se):
                chosen = st, se
                break
        if chosen is None:
            raise PlanInfeasible(f"no acceptable colour sequence for copy {i}")
        st, se = chosen
        counts = [counts[c - 1] + st[c] for c in range(1, k + 1)]
        assert max(counts) - min(counts) <= 1, "running coloring lost equitability"
        sts.append(st)
        ses.append(se)
        history.append(tuple(counts))
    return SequencePlan(n_outer, k, initial, tuple(sts), tuple(ses), tuple(history))


def se_profile(se: dict[int, int]) -> tuple[int, int, int, int]:
    """Number of colours with per-copy edge count 0, 1, 2, 3."""
    out = [0, 0, 0, 0]
    for v in se.values():
        out[v] += 1
    return out[0], out[1], out[2], out[3]


def se_bounds_check(p: SequencePlan, n_outer: int) -> bool:
    """Counting bounds on S_E used by the edge-extension arguments."""
    for se in p.per_copy_se:
        if sum(se.values()) != 3 * n_outer // 2 or min(se.values()) < 0:
            return False
        _, n1, n2, n3 = se_profile(se)
        if n_outer >= 16:
            if n1 < n_outer // 2 + 8 or n2 + n3 > n_outer // 2 - 4:
                return False
            cap3 = n_outer // 2 - 8 if n_outer <= 24 else 4
            if n3 > cap3:
                return False
        elif n_outer >= 10:
            if n2 > 4 or n3:
                return False
    return True
