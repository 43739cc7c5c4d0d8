"""Executable checks for majority colorings and an exhaustive oracle.

All comparisons are done in integers: a color at vertex ``u`` is fine for the
fraction ``p/q`` iff ``q * count <= p * deg(u)``.
"""

from __future__ import annotations

import sys
import warnings
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

from .coloring import EdgeColoring
from .errors import TooLargeWarning
from .graph import _BaseGraph

ORACLE_SOFT_LIMIT = 20


@dataclass(frozen=True)
class Violation:
    vertex: int
    color: int
    count: int
    degree: int

    def as_dict(self) -> dict:
        return asdict(self)


def _violations(g: _BaseGraph, c: EdgeColoring, too_many: Callable[[int, int, int], bool]) -> list[Violation]:
    c.check(g)
    out = []
    for u, row in enumerate(c.tallies(g)):
        d = g.degree(u)
        for color, count in enumerate(row, start=1):
            if count and too_many(u, count, d):
                out.append(Violation(u, color, count, d))
    return out


def verify_majority(g: _BaseGraph, c: EdgeColoring, k: int | None = None) -> list[Violation]:
    """Violations of the majority condition; an empty list means the coloring is valid.

    ``k`` defaults to ``c.k``; a different value re-checks the color range.
    """
    if k is not None and k != c.k:
        c = EdgeColoring(c.colors, k)
    return _violations(g, c, lambda u, count, d: 2 * count > d)


def parse_alpha(alpha) -> Fraction:
    """Accept ``Fraction``, ``"p/q"`` or a ``(p, q)`` pair; require ``0 < alpha < 1``."""
    if isinstance(alpha, tuple):
        frac = Fraction(*alpha)
    elif isinstance(alpha, float):
        raise ValueError("alpha must be rational (use 'p/q' or Fraction), not float")
    else:
        frac = Fraction(alpha)
    if not 0 < frac < 1:
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {frac}")
    return frac


def verify_alpha(g: _BaseGraph, c: EdgeColoring, alpha) -> list[Violation]:
    frac = parse_alpha(alpha)
    p, q = frac.numerator, frac.denominator
    return _violations(g, c, lambda u, count, d: q * count > p * d)


def verify_balanced2(g: _BaseGraph, c: EdgeColoring, pin: int | None = None) -> list[Violation]:
    """Check the 2-coloring bound ``count <= ceil(d/2)``.

    At ``pin`` the looser bound ``d/2 + 1`` applies instead.
    """

    def too_many(u, count, d):
        cap = d // 2 + 1 if u == pin else (d + 1) // 2
        return count > cap

    return _violations(g, c, too_many)


def _edge_order(g: _BaseGraph) -> list[int]:
    # descending endpoint-degree sum; among ties prefer edges touching placed vertices
    deg = g.degrees()
    left = set(range(g.m))
    placed = [False] * g.n
    order = []
    while left:
        best = max(
            left,
            key=lambda e: (
                deg[g.edges[e][0]] + deg[g.edges[e][1]],
                placed[g.edges[e][0]] + placed[g.edges[e][1]],
                -e,
            ),
        )
        left.remove(best)
        order.append(best)
        for w in g.edges[best]:
            placed[w] = True
    return order


def has_majority_coloring(g: _BaseGraph, k: int) -> EdgeColoring | None:
    """Exhaustive search for a majority ``k``-edge-coloring; ``None`` if none exists."""
    if k < 1:
        return None
    caps = [d // 2 for d in g.degrees()]
    for u in range(g.n):
        d = g.degree(u)
        if d and k * caps[u] < d:
            return None
    if g.m == 0:
        return EdgeColoring((), k)

    order = _edge_order(g)
    ends = [g.edges[e] for e in order]
    counts = [[0] * k for _ in range(g.n)]
    assign = [0] * len(order)
    limit = sys.getrecursionlimit()
    if len(order) + 100 > limit:
        sys.setrecursionlimit(len(order) + 100)

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        u, v = ends[i]
        cu, cv = counts[u], counts[v]
        # colors are interchangeable: only one fresh color needs trying
        for col in range(min(k, used + 1)):
            if cu[col] < caps[u] and cv[col] < caps[v]:
                cu[col] += 1
                cv[col] += 1
                assign[i] = col
                if rec(i + 1, max(used, col + 1)):
                    return True
                cu[col] -= 1
                cv[col] -= 1
        return False

    if not rec(0, 0):
        return None
    colors = [0] * g.m
    for i, e in enumerate(order):
        colors[e] = assign[i] + 1
    return EdgeColoring(tuple(colors), k)


def brute_min_colors(g: _BaseGraph, k_max: int) -> int | None:
    """Smallest ``k <= k_max`` admitting a majority ``k``-edge-coloring, else ``None``."""
    if g.m > ORACLE_SOFT_LIMIT:
        warnings.warn(
            f"exhaustive search on {g.m} edges may take very long", TooLargeWarning, stacklevel=2
        )
    for k in range(1, k_max + 1):
        if has_majority_coloring(g, k) is not None:
            return k
    return None


def count_profile(g: _BaseGraph, c: EdgeColoring) -> list[tuple[int, ...]]:
    """Per-vertex color counts sorted in descending order."""
    return [tuple(sorted(row, reverse=True)) for row in c.tallies(g)]

