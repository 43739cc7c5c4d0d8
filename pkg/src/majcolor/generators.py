"""Named graph families, all deterministic for a given seed."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, is_connected


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def cycle_power(n: int, r: int) -> Graph:
    """Vertices ``i`` and ``j`` adjacent when their cyclic distance is at most ``r``."""
    edges = {tuple(sorted((i, (i + s) % n))) for i in range(n) for s in range(1, r + 1)}
    return Graph(n, sorted(edges))


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.n
    return Graph(offset, edges)


def random_regular(n: int, d: int, seed: int, connected: bool = True, tries: int = 1000) -> Graph:
    """Random ``d``-regular simple graph (Steger-Wormald pairing).

    Stubs are paired at random, rejecting only pairs that would form a loop or
    a repeated edge; a dead end restarts the attempt.
    """
    if (n * d) % 2 or not 0 <= d < n:
        raise ValueError(f"no {d}-regular simple graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        adj: list[set[int]] = [set() for _ in range(n)]
        misses = 0
        while stubs:
            i, j = rng.sample(range(len(stubs)), 2)
            u, v = stubs[i], stubs[j]
            if u != v and v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                for k in sorted((i, j), reverse=True):
                    stubs[k] = stubs[-1]
                    stubs.pop()
                misses = 0
                continue
            misses += 1
            if misses > 50:
                left = sorted(set(stubs))
                if not any(b not in adj[a] for a, b in combinations(left, 2)):
                    break
                misses = 0
        if stubs:
            continue
        g = Graph(n, sorted((u, v) for u in range(n) for v in adj[u] if u < v))
        if not connected or is_connected(g):
            return g
    raise RuntimeError(f"pairing failed {tries} times for n={n}, d={d}")


def random_mindeg(n: int, delta: int, seed: int, extra: float = 0.0) -> Graph:
    """Connected random graph with minimum degree at least ``delta``.

    A random spanning tree is grown first, then low-degree vertices receive
    edges to random non-neighbors; ``extra`` adds each remaining pair with
    that probability.
    """
    if not 0 <= delta < n:
        raise ValueError(f"minimum degree {delta} impossible on {n} vertices")
    rng = random.Random(seed)
    adj = [set() for _ in range(n)]

    def link(u, v):
        adj[u].add(v)
        adj[v].add(u)

    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        link(order[i], order[rng.randrange(i)])
    if extra > 0:
        for u, v in combinations(range(n), 2):
            if v not in adj[u] and rng.random() < extra:
                link(u, v)
    for u in range(n):
        while len(adj[u]) < delta:
            cands = [v for v in range(n) if v != u and v not in adj[u]]
            low = min(len(adj[v]) for v in cands)
            # prefer partners that also need edges
            pool = [v for v in cands if len(adj[v]) < delta] or [v for v in cands if len(adj[v]) == low]
            link(u, rng.choice(pool))
    return Graph(n, sorted((u, v) for u in range(n) for v in adj[u] if u < v))


def random_barrier(a: int, b: int, delta: int, seed: int, p_inner: float = 0.3) -> Graph:
    """Graph whose Gallai-Edmonds decomposition tends to have many isolated D-vertices.

    ``b`` independent vertices each join ``delta`` random vertices of a core
    of ``a < b`` vertices; the core is densified with probability
    ``p_inner`` and topped up so every core vertex has degree ``>= delta``.
    """
    if a < delta:
        raise ValueError("core must have at least delta vertices")
    rng = random.Random(seed)
    edges = set()
    for j in range(b):
        for i in rng.sample(range(a), delta):
            edges.add((i, a + j))
    deg = [0] * (a + b)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for u, v in combinations(range(a), 2):
        if rng.random() < p_inner:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    for u in range(a):
        while deg[u] < delta:
            v = a + rng.randrange(b)
            if (u, v) not in edges:
                edges.add((u, v))
                deg[u] += 1
                deg[v] += 1
    return Graph(a + b, sorted(edges))


def random_eulerian(n: int, seed: int, p: float = 0.4, odd_edges: bool = True, tries: int = 1000) -> Graph:
    """Connected graph with all degrees even, no isolated vertex, and edge-count parity as requested.

    Odd-degree vertices are paired and each pair's adjacency toggled; a
    triangle toggle then fixes the parity of the edge count.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = random.Random(seed)
    for _ in range(tries):
        es = {(u, v) for u, v in combinations(range(n), 2) if rng.random() < p}

        def toggle(u, v):
            key = (min(u, v), max(u, v))
            es.symmetric_difference_update({key})

        deg = [0] * n
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        odd = [v for v in range(n) if deg[v] % 2]
        rng.shuffle(odd)
        for u, v in zip(odd[0::2], odd[1::2]):
            toggle(u, v)
        if (len(es) % 2 == 1) != odd_edges:
            x, y, z = rng.sample(range(n), 3)
            toggle(x, y)
            toggle(y, z)
            toggle(x, z)
        g = Graph(n, sorted(es))
        if g.m and g.min_degree() >= 2 and is_connected(g) and all(d % 2 == 0 for d in g.degrees()):
            return g
    raise RuntimeError("could not produce an Eulerian graph with the requested parity")


FAMILIES = {
    "cycle": (cycle, (int,)),
    "path": (path, (int,)),
    "complete": (complete, (int,)),
    "complete-bipartite": (complete_bipartite, (int, int)),
    "petersen": (petersen, ()),
    "random-regular": (random_regular, (int, int, int)),
    "random-mindeg": (random_mindeg, (int, int, int)),
    "random-barrier": (random_barrier, (int, int, int, int)),
    "random-eulerian": (random_eulerian, (int, int)),
}


def generate(family: str, *args: str | int) -> Graph:
    try:
        fn, types = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if len(args) != len(types):
        raise ValueError(f"{family} takes {len(types)} argument(s), got {len(args)}")
    return fn(*(t(a) for t, a in zip(types, args)))
