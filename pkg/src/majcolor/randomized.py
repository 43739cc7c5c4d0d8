"""Random ``(k+1)``-edge-colorings repaired by local resampling.

A vertex is bad when some color covers more than a ``1/k`` fraction of its
edges. The smallest bad vertex has all its incident edges recolored at
random, Moser-Tardos style, until no bad vertex remains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .coloring import EdgeColoring
from .errors import Timeout
from .graph import Graph

ROUNDS_PER_VERTEX = 1000


@dataclass(frozen=True)
class ResampleConfig:
    k: int
    max_rounds: int | None = None
    rng_seed: int = 0

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.max_rounds is not None and self.max_rounds < 1:
            raise ValueError("max_rounds must be positive")

    def rounds_for(self, g: Graph) -> int:
        return self.max_rounds if self.max_rounds is not None else ROUNDS_PER_VERTEX * max(g.n, 1)


def _draw(rng: random.Random, m: int, k: int) -> list[int]:
    return [rng.randint(1, k + 1) for _ in range(m)]


def random_coloring(g: Graph, k: int, seed: int) -> EdgeColoring:
    """Each edge gets an independent uniform color in ``1..k+1``."""
    return EdgeColoring(tuple(_draw(random.Random(seed), g.m, k)), k + 1)


def resample_until_valid(g: Graph, cfg: ResampleConfig, trajectory: list[int] | None = None) -> EdgeColoring:
    """Search for a ``1/k``-majority ``(k+1)``-edge-coloring.

    Starts from ``random_coloring(g, k, seed)`` and continues the same random
    stream. Resampled vertices are appended to ``trajectory`` if given.
    Raises ``Timeout`` after ``cfg.max_rounds`` resamplings (default ``1000 n``).
    """
    k = cfg.k
    rng = random.Random(cfg.rng_seed)
    colors = _draw(rng, g.m, k)
    counts = [[0] * (k + 2) for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        counts[u][colors[e]] += 1
        counts[v][colors[e]] += 1
    deg = g.degrees()

    def bad(u: int) -> bool:
        return k * max(counts[u]) > deg[u]

    violated = {u for u in range(g.n) if bad(u)}
    limit = cfg.rounds_for(g)
    rounds = 0
    while violated:
        if rounds >= limit:
            raise Timeout(limit)
        rounds += 1
        u = min(violated)
        if trajectory is not None:
            trajectory.append(u)
        touched = {u}
        for w, e in g.adj[u]:
            old = colors[e]
            new = rng.randint(1, k + 1)
            colors[e] = new
            counts[u][old] -= 1
            counts[w][old] -= 1
            counts[u][new] += 1
            counts[w][new] += 1
            touched.add(w)
        for w in touched:
            if bad(w):
                violated.add(w)
            else:
                violated.discard(w)
    return EdgeColoring(tuple(colors), k + 1)
