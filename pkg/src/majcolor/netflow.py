"""Integral maximum flow (Dinic) and the degree-capped edge selection network."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import SelectionInfeasible
from .graph import Graph
from .matching import GEDecomposition


@dataclass
class FlowNetwork:
    """Capacitated digraph on nodes ``0..n-1``; arcs are kept in insertion order."""

    n: int
    source: int
    sink: int
    arcs: list[tuple[int, int, int]] = field(default_factory=list)
    labels: dict[int, object] = field(default_factory=dict)

    def add_arc(self, tail: int, head: int, cap: int) -> int:
        if cap < 0 or int(cap) != cap:
            raise ValueError(f"capacity must be a non-negative integer, got {cap}")
        self.arcs.append((tail, head, int(cap)))
        return len(self.arcs) - 1


@dataclass(frozen=True)
class IntegralFlow:
    flow: tuple[int, ...]
    value: int

    def is_feasible(self, net: FlowNetwork) -> bool:
        balance = [0] * net.n
        for (t, h, cap), f in zip(net.arcs, self.flow):
            if not 0 <= f <= cap:
                return False
            balance[t] -= f
            balance[h] += f
        return all(
            b == 0 for v, b in enumerate(balance) if v not in (net.source, net.sink)
        ) and balance[net.sink] == self.value


def max_flow(net: FlowNetwork) -> IntegralFlow:
    """Dinic's algorithm; arcs are explored in insertion order."""
    n, s, t = net.n, net.source, net.sink
    # residual arcs: forward 2i, backward 2i+1
    head, cap = [], []
    out: list[list[int]] = [[] for _ in range(n)]
    for a, (u, v, c) in enumerate(net.arcs):
        out[u].append(2 * a)
        out[v].append(2 * a + 1)
        head += [v, u]
        cap += [c, 0]

    value = 0
    while True:
        level = [-1] * n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for r in out[u]:
                if cap[r] and level[head[r]] < 0:
                    level[head[r]] = level[u] + 1
                    q.append(head[r])
        if level[t] < 0:
            break
        it = [0] * n

        def push(u: int, limit: int) -> int:
            if u == t:
                return limit
            while it[u] < len(out[u]):
                r = out[u][it[u]]
                v = head[r]
                if cap[r] and level[v] == level[u] + 1:
                    got = push(v, min(limit, cap[r]))
                    if got:
                        cap[r] -= got
                        cap[r ^ 1] += got
                        return got
                it[u] += 1
            return 0

        while True:
            got = push(s, float("inf"))
            if not got:
                break
            value += got
    flow = tuple(cap[2 * a + 1] for a in range(len(net.arcs)))
    return IntegralFlow(flow, int(value))


@dataclass(frozen=True)
class SelectionNetwork:
    net: FlowNetwork
    arc_edge: dict[int, int]
    """arc index -> graph edge id, for the unit arcs between D' and A"""
    d_prime: tuple[int, ...]


def selection_network(g: Graph, ge: GEDecomposition) -> SelectionNetwork:
    """Source -> each D' vertex (cap 1) -> its A-neighbors (cap 1) -> sink (cap floor(d/2)).

    D' vertices without edges are left out; they impose no constraint.
    """
    d_prime = tuple(sorted(u for u in ge.D_prime if g.degree(u) > 0))
    a_side = sorted({v for u in d_prime for v, _ in g.adj[u]})
    node = {}
    for u in d_prime:
        node[u] = len(node) + 2
    for v in a_side:
        node[v] = len(node) + 2
    net = FlowNetwork(len(node) + 2, 0, 1, labels={i: v for v, i in node.items()})
    for u in d_prime:
        net.add_arc(0, node[u], 1)
    arc_edge = {}
    for u in d_prime:
        for v, e in g.adj[u]:
            arc_edge[net.add_arc(node[u], node[v], 1)] = e
    for v in a_side:
        net.add_arc(node[v], 1, g.degree(v) // 2)
    return SelectionNetwork(net, arc_edge, d_prime)


def select_edges(g: Graph, ge: GEDecomposition) -> dict[int, int]:
    """Choose one edge at every D' vertex so that each A-vertex ``v`` receives
    at most ``floor(d(v)/2)`` chosen edges.

    Guaranteed to exist when the minimum degree is at least 3.
    """
    sn = selection_network(g, ge)
    if not sn.d_prime:
        return {}
    flow = max_flow(sn.net)
    if flow.value < len(sn.d_prime):
        raise SelectionInfeasible(flow.value, len(sn.d_prime))
    chosen = {}
    for arc, e in sn.arc_edge.items():
        if flow.flow[arc]:
            u = sn.net.labels[sn.net.arcs[arc][0]]
            chosen[u] = e
    return chosen
