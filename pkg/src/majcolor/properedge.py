"""Proper edge coloring with at most Delta+1 colors, and the splitting pipelines.

A vertex whose edges are spread over several split copies receives at most
one edge of each color per copy once the split graph is properly colored.
Bounding the number of copies therefore bounds every color class.
"""

from __future__ import annotations

from .coloring import EdgeColoring
from .errors import DegreeBelowThreshold, DegreeTooSmall, InternalStructureViolation, MinDegreeTooLow
from .graph import Graph, SplitMap, split_graph


class _MisraGries:
    """Working state of the Misra-Gries algorithm.

    ``at[v]`` maps a color to the edge of that color at ``v``.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.palette = range(1, g.max_degree() + 2)
        self.color = [0] * g.m
        self.at: list[dict[int, int]] = [{} for _ in range(g.n)]

    def is_free(self, v: int, c: int) -> bool:
        return c not in self.at[v]

    def free_color(self, v: int) -> int:
        at = self.at[v]
        for c in self.palette:
            if c not in at:
                return c
        raise InternalStructureViolation(f"no free color at vertex {v}")

    def set_color(self, e: int, c: int) -> None:
        u, v = self.g.edges[e]
        old = self.color[e]
        if old:
            del self.at[u][old]
            del self.at[v][old]
        self.color[e] = c
        if c:
            self.at[u][c] = e
            self.at[v][c] = e

    def maximal_fan(self, u: int, v: int) -> list[int]:
        g = self.g
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for w, e in g.adj[u]:
                c = self.color[e]
                if w not in in_fan and c and self.is_free(last, c):
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        return fan

    def invert_path(self, u: int, c: int, d: int) -> None:
        """Swap colors ``c`` and ``d`` along the maximal c/d path leaving ``u``.

        ``c`` is free at ``u``, so the path starts with a ``d`` edge.
        """
        path = []
        x, want = u, d
        while want in self.at[x]:
            e = self.at[x][want]
            path.append(e)
            x = self.g.other(e, x)
            want = c if want == d else d
        # clear first so intermediate states never hold two edges of one color at a vertex
        for e in path:
            self.set_color(e, 0)
        for i, e in enumerate(path):
            self.set_color(e, c if i % 2 == 0 else d)

    def color_edge(self, e: int) -> None:
        g = self.g
        u, v = g.edges[e]
        fan = self.maximal_fan(u, v)
        c = self.free_color(u)
        d = self.free_color(fan[-1])
        if c != d:
            self.invert_path(u, c, d)
        # after inversion d is free at u; find the first fan vertex where d is free
        w = None
        for i, x in enumerate(fan):
            if self.is_free(x, d):
                w = i
                break
            nxt = fan[i + 1] if i + 1 < len(fan) else None
            if nxt is None or not self.is_free(x, self.color[g.edge_id(u, nxt)]):
                break
        if w is None:
            raise InternalStructureViolation(f"fan rotation failed at edge {e}")
        # rotate fan[0..w]: each edge (u, fan[i]) takes the color of (u, fan[i+1])
        for i in range(w):
            e_i = g.edge_id(u, fan[i])
            e_next = g.edge_id(u, fan[i + 1])
            shifted = self.color[e_next]
            self.set_color(e_next, 0)
            self.set_color(e_i, shifted)
        self.set_color(g.edge_id(u, fan[w]), d)

    def run(self) -> list[int]:
        for e in range(self.g.m):
            self.color_edge(e)
        return self.color


def proper_edge_coloring(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most ``max_degree + 1`` colors (Misra-Gries)."""
    colors = _MisraGries(g).run()
    return EdgeColoring(tuple(colors), g.max_degree() + 1 if g.m else 1)


def is_proper(g: Graph, c: EdgeColoring) -> bool:
    for u in range(g.n):
        seen = set()
        for _, e in g.adj[u]:
            if c.colors[e] in seen:
                return False
            seen.add(c.colors[e])
    return True


def mod3_parts(d: int) -> list[int]:
    """Split degree ``d`` into parts of size 2 and 3; degrees up to 3 stay whole."""
    if d < 2:
        raise DegreeTooSmall(f"degree {d} < 2")
    if d <= 3:
        return [d]
    r = d % 3
    if r == 0:
        return [3] * (d // 3)
    if r == 1:
        return [2, 2] + [3] * ((d - 4) // 3)
    return [2] + [3] * ((d - 2) // 3)


def kk_parts(d: int, k: int) -> list[int]:
    """Write ``d`` as a sum of parts ``k`` and ``k+1``, using as many ``k`` parts as possible."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if d < k * (k - 1):
        raise DegreeBelowThreshold(f"degree {d} < k(k-1) = {k * (k - 1)}")
    big = d % k
    small = (d - big * (k + 1)) // k
    if small < 0:
        raise DegreeBelowThreshold(f"degree {d} is not a combination of {k} and {k + 1}")
    return [k] * small + [k + 1] * big


def _split_and_color(g: Graph, parts_of: dict[int, list[int]], k: int) -> EdgeColoring:
    sm: SplitMap = split_graph(g, parts_of)
    proper = proper_edge_coloring(sm.graph)
    if any(c > k for c in proper.colors):
        raise InternalStructureViolation(
            f"split graph of max degree {sm.graph.max_degree()} needed more than {k} colors"
        )
    return EdgeColoring(tuple(sm.pull_back(proper.colors)), k)


def majority4_split(g: Graph) -> SplitMap:
    return split_graph(g, {u: mod3_parts(g.degree(u)) for u in range(g.n) if g.degree(u) > 3})


def majority4(g: Graph) -> EdgeColoring:
    """Majority 4-edge-coloring of a graph with minimum degree at least 2.

    Vertices of degree ``d >= 4`` additionally see at most ``(d+2)//3`` edges
    of each color. Isolated vertices are allowed.
    """
    for u in range(g.n):
        if g.degree(u) == 1:
            raise MinDegreeTooLow(u, 1, 2)
    parts = {u: mod3_parts(g.degree(u)) for u in range(g.n) if g.degree(u) > 3}
    return _split_and_color(g, parts, 4)


def alpha_majority_k2(g: Graph, k: int) -> EdgeColoring:
    """``1/k``-majority ``(k+2)``-edge-coloring for minimum degree at least ``k(k-1)``."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    need = k * (k - 1)
    for u in range(g.n):
        d = g.degree(u)
        if 0 < d < need:
            raise MinDegreeTooLow(u, d, need)
    parts = {u: kk_parts(g.degree(u), k) for u in range(g.n) if g.degree(u) > 0}
    return _split_and_color(g, parts, k + 2)
