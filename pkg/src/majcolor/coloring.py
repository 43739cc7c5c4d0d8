from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ColorOutOfRange, PartialColoring
from .graph import _BaseGraph


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from edge id to a color in ``1..k``."""

    colors: tuple[int, ...]
    k: int

    @classmethod
    def of(cls, colors: Sequence[int], k: int) -> EdgeColoring:
        return cls(tuple(colors), k)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, eid: int) -> int:
        return self.colors[eid]

    def check(self, g: _BaseGraph) -> None:
        if len(self.colors) != g.m:
            raise PartialColoring(f"{len(self.colors)} colors for {g.m} edges")
        for eid, c in enumerate(self.colors):
            if c is None:
                raise PartialColoring(f"edge {eid} is uncolored")
            if not 1 <= c <= self.k:
                raise ColorOutOfRange(f"edge {eid} has color {c} outside 1..{self.k}")

    def tallies(self, g: _BaseGraph) -> list[list[int]]:
        """``tallies[u][c - 1]`` is the number of edges at ``u`` colored ``c``."""
        counts = [[0] * self.k for _ in range(g.n)]
        for eid, (u, v) in enumerate(g.edges):
            c = self.colors[eid] - 1
            counts[u][c] += 1
            counts[v][c] += 1
        return counts

    def num_colors_used(self) -> int:
        return len(set(self.colors))
