"""Total colorings keyed by element id."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import ElementId


@dataclass(frozen=True)
class TotalColoring:
    palette_size: int
    assignment: dict[ElementId, int]

    @property
    def class_sizes(self) -> tuple[int, ...]:
        counts = Counter(self.assignment.values())
        return tuple(counts.get(c, 0) for c in range(1, self.palette_size + 1))

    @property
    def spread(self) -> int:
        sizes = self.class_sizes
        return max(sizes) - min(sizes) if sizes else 0

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def __getitem__(self, elem: ElementId) -> int:
        return self.assignment[elem]

    def __len__(self) -> int:
        return len(self.assignment)
