"""Balanced 2-edge-colorings from Euler tours.

Coloring the edges of a closed tour alternately gives every vertex one edge of
each color per visit; the only imbalance can come from the wrap-around at the
start vertex or from an odd degree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring
from .errors import (
    Disconnected,
    OddDegreeVertex,
    PreconditionError,
    PreconditionNotEulerOdd,
    PreconditionOddEvenAll,
    UnknownVertex,
)
from .graph import Graph, Multigraph, _BaseGraph, is_connected


@dataclass(frozen=True)
class EulerTour:
    edges: tuple[int, ...]
    start: int

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self, g: _BaseGraph) -> list[int]:
        """Vertex sequence ``start, v1, ..., start`` traced by the tour."""
        walk = [self.start]
        for e in self.edges:
            walk.append(g.other(e, walk[-1]))
        return walk

    def is_valid_for(self, g: _BaseGraph) -> bool:
        if sorted(self.edges) != list(range(g.m)):
            return False
        cur = self.start
        for e in self.edges:
            a, b = g.edges[e]
            if cur not in (a, b):
                return False
            cur = b if cur == a else a
        return cur == self.start

    def rotated(self, g: _BaseGraph, shift: int) -> EulerTour:
        """The same closed tour started at position ``shift``."""
        if not self.edges:
            return self
        shift %= len(self.edges)
        start = self.vertices(g)[shift]
        return EulerTour(self.edges[shift:] + self.edges[:shift], start)


def euler_tour(g: _BaseGraph, start: int) -> EulerTour:
    """Hierholzer's algorithm on a connected graph or multigraph with even degrees."""
    if not 0 <= start < g.n:
        raise UnknownVertex(start)
    for v in range(g.n):
        if g.degree(v) % 2:
            raise OddDegreeVertex(v, g.degree(v))
    if g.degree(start) == 0:
        raise PreconditionError(f"start vertex {start} has no incident edge")
    if not is_connected(g, ignore_isolated=True):
        raise Disconnected("edges do not form a single connected component")

    used = [False] * g.m
    ptr = [0] * g.n
    # stack of (vertex, edge used to enter it)
    stack: list[tuple[int, int]] = [(start, -1)]
    out: list[int] = []
    while stack:
        v, via = stack[-1]
        adj = g.adj[v]
        i = ptr[v]
        while i < len(adj) and used[adj[i][1]]:
            i += 1
        ptr[v] = i
        if i == len(adj):
            stack.pop()
            if via >= 0:
                out.append(via)
        else:
            w, e = adj[i]
            used[e] = True
            stack.append((w, e))
    out.reverse()
    return EulerTour(tuple(out), start)


def _color_by_parity(tour: EulerTour, m: int) -> list[int]:
    colors = [0] * m
    for i, e in enumerate(tour.edges):
        if e < m:
            colors[e] = i % 2 + 1
    return colors


def _first_vertex_with_edges(g: _BaseGraph) -> int:
    return next(v for v in range(g.n) if g.degree(v) > 0)


def balanced_2coloring(g: Graph) -> EdgeColoring:
    """2-color a connected graph so each color has at most ``ceil(d/2)`` edges at every vertex.

    Requires an even number of edges or at least one odd-degree vertex.
    Isolated vertices are ignored when testing connectivity.
    """
    if g.m == 0:
        raise PreconditionError("graph has no edges")
    if not is_connected(g, ignore_isolated=True):
        raise Disconnected()
    odd = [v for v in range(g.n) if g.degree(v) % 2]
    if not odd and g.m % 2:
        raise PreconditionOddEvenAll(g.m)

    pairs = list(zip(odd[0::2], odd[1::2]))
    mg = Multigraph.from_graph(g, pairs)
    tour = euler_tour(mg, _first_vertex_with_edges(mg))
    if pairs:
        # an added edge in the last slot absorbs the wrap-around pair
        last_added = max(i for i, e in enumerate(tour.edges) if mg.added[e])
        tour = tour.rotated(mg, last_added + 1)
    return EdgeColoring(tuple(_color_by_parity(tour, g.m)), 2)


def balanced_2coloring_pinned(g: Graph, pin: int) -> EdgeColoring:
    """2-coloring of a connected Eulerian graph with an odd number of edges.

    Every vertex except ``pin`` sees exactly ``d/2`` edges of each color;
    ``pin`` sees ``d/2 + 1`` edges of color 1 and ``d/2 - 1`` of color 2.
    """
    if not 0 <= pin < g.n:
        raise UnknownVertex(pin)
    if g.m % 2 == 0:
        raise PreconditionNotEulerOdd(f"graph has an even number of edges ({g.m})")
    odd = [v for v in range(g.n) if g.degree(v) % 2]
    if odd:
        raise PreconditionNotEulerOdd(f"vertex {odd[0]} has odd degree {g.degree(odd[0])}")
    if g.degree(pin) < 2:
        raise PreconditionNotEulerOdd(f"pin vertex {pin} has degree {g.degree(pin)} < 2")
    if not is_connected(g, ignore_isolated=True):
        raise Disconnected()
    tour = euler_tour(g, pin)
    return EdgeColoring(tuple(_color_by_parity(tour, g.m)), 2)
