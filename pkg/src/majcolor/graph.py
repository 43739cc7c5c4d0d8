"""Graph and multigraph containers, subgraphs and vertex splitting.

Vertices are dense integers ``0..n-1`` and edges carry stable ids ``0..m-1``
(their position in ``edges``). Adjacency lists hold ``(neighbor, edge_id)``
pairs in edge-id order, so every traversal below is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DuplicateEdge, PartsSumMismatch, SelfLoop, UnknownVertex

Edge = tuple[int, int]


class _BaseGraph:
    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        edge_list = []
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            for w in (u, v):
                if not 0 <= w < n:
                    raise UnknownVertex(w)
            if u == v:
                raise SelfLoop(u)
            edge_list.append((u, v))
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.edges: tuple[Edge, ...] = tuple(edge_list)
        self.adj: tuple[tuple[tuple[int, int], ...], ...] = tuple(map(tuple, adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def neighbors(self, u: int) -> list[int]:
        return [v for v, _ in self.adj[u]]

    def incident(self, u: int) -> list[int]:
        return [e for _, e in self.adj[u]]

    def other(self, eid: int, u: int) -> int:
        a, b = self.edges[eid]
        return b if a == u else a

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self, ignore_isolated: bool = False) -> int:
        degs = (len(a) for a in self.adj)
        if ignore_isolated:
            degs = (d for d in degs if d > 0)
        return min(degs, default=0)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class Graph(_BaseGraph):
    """Simple undirected graph; self-loops and parallel edges are rejected."""

    __slots__ = ("_index",)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        super().__init__(n, edges)
        index: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(self.edges):
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise DuplicateEdge(u, v)
            index[key] = eid
        self._index = index

    def edge_id(self, u: int, v: int) -> int | None:
        return self._index.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) is not None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


class Multigraph(_BaseGraph):
    """Undirected multigraph without loops.

    ``added[e]`` marks edges introduced by an algorithm rather than read from
    the input graph.
    """

    __slots__ = ("added",)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), added: Iterable[bool] | None = None):
        super().__init__(n, edges)
        flags = tuple(bool(x) for x in added) if added is not None else (False,) * self.m
        if len(flags) != self.m:
            raise ValueError("one origin tag per edge is required")
        self.added: tuple[bool, ...] = flags

    @classmethod
    def from_graph(cls, g: _BaseGraph, extra: Iterable[Edge] = ()) -> Multigraph:
        extra = list(extra)
        return cls(g.n, list(g.edges) + extra, [False] * g.m + [True] * len(extra))


def from_edge_list(pairs: Iterable[Sequence[int]], n: int | None = None) -> Graph:
    """Build a simple graph on ``max id + 1`` vertices (or ``n`` if given)."""
    pairs = [(int(u), int(v)) for u, v in pairs]
    for u, v in pairs:
        if u < 0 or v < 0:
            raise UnknownVertex(min(u, v))
    top = max((max(u, v) for u, v in pairs), default=-1) + 1
    if n is None:
        n = top
    elif n < top:
        raise UnknownVertex(top - 1)
    return Graph(n, pairs)


def connected_components(g: _BaseGraph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for v, _ in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
                    comp.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: _BaseGraph, ignore_isolated: bool = False) -> bool:
    comps = connected_components(g)
    if ignore_isolated:
        comps = [c for c in comps if len(c) > 1 or g.degree(c[0]) > 0]
    return len(comps) <= 1


@dataclass(frozen=True)
class Subgraph:
    """A subgraph together with maps back into its parent.

    ``vertices[i]`` is the parent id of local vertex ``i`` and ``edges[j]``
    the parent id of local edge ``j``.
    """

    graph: Graph
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def local(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Subgraph:
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise UnknownVertex(v)
    pos = {v: i for i, v in enumerate(keep)}
    sub_edges, eids = [], []
    for eid, (u, v) in enumerate(g.edges):
        if u in pos and v in pos:
            sub_edges.append((pos[u], pos[v]))
            eids.append(eid)
    return Subgraph(Graph(len(keep), sub_edges), tuple(keep), tuple(eids))


def edge_subgraph(g: Graph, edge_ids: Iterable[int]) -> Subgraph:
    """Subgraph formed by the given edges and their endpoints (edge ids sorted)."""
    eids = sorted(set(edge_ids))
    keep = sorted({w for e in eids for w in g.edges[e]})
    pos = {v: i for i, v in enumerate(keep)}
    sub = Graph(len(keep), [(pos[g.edges[e][0]], pos[g.edges[e][1]]) for e in eids])
    return Subgraph(sub, tuple(keep), tuple(eids))


@dataclass(frozen=True)
class SplitMap:
    """Result of splitting vertices of a graph.

    Split-graph vertices are numbered by original vertex, the parts of one
    original vertex receiving consecutive ids. Edge ``e`` of the original
    graph becomes edge ``forward[e]`` of ``graph``.
    """

    graph: Graph
    forward: tuple[int, ...]
    origin: tuple[int, ...]
    parts: Mapping[int, tuple[int, ...]]

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.forward)
        for e, f in enumerate(self.forward):
            inv[f] = e
        return tuple(inv)

    def pull_back(self, split_colors: Sequence[int]) -> list[int]:
        """Colors of the original edges from colors of the split edges."""
        return [split_colors[f] for f in self.forward]


def split_graph(g: Graph, parts_of: Mapping[int, Sequence[int]]) -> SplitMap:
    """Split each vertex ``u`` in ``parts_of`` into vertices of the given degrees.

    The neighborhood of ``u`` is cut into consecutive blocks of its adjacency
    list (edge-id order). Vertices absent from ``parts_of`` are kept whole.
    """
    parts: dict[int, tuple[int, ...]] = {}
    for u in range(g.n):
        d = g.degree(u)
        if u in parts_of:
            p = tuple(int(x) for x in parts_of[u])
            if sum(p) != d or any(x < 1 for x in p):
                raise PartsSumMismatch(u, p, d)
        else:
            p = (d,)
        parts[u] = p
    for u in parts_of:
        if not 0 <= u < g.n:
            raise UnknownVertex(u)

    origin: list[int] = []
    first: list[int] = []
    for u in range(g.n):
        first.append(len(origin))
        # an isolated vertex still needs one representative
        origin.extend([u] * max(1, len(parts[u])))

    # endpoint of edge e at u -> split vertex
    end_at: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        block, used = 0, 0
        for _, eid in g.adj[u]:
            if used == parts[u][block]:
                block, used = block + 1, 0
            end_at[(eid, u)] = first[u] + block
            used += 1

    new_edges = [(end_at[(e, u)], end_at[(e, v)]) for e, (u, v) in enumerate(g.edges)]
    sg = Graph(len(origin), new_edges)
    return SplitMap(sg, tuple(range(g.m)), tuple(origin), parts)


def split_vertex(g: Graph, u: int, parts: Sequence[int]) -> SplitMap:
    if not 0 <= u < g.n:
        raise UnknownVertex(u)
    return split_graph(g, {u: parts})
