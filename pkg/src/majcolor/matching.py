"""Maximum matching in general graphs and the Gallai-Edmonds decomposition.

The blossom search is the classical single-root BFS with base contraction,
``O(n^3)`` for a full maximum matching. Adjacency is scanned in edge-id order
and the initial greedy matching takes edges by increasing id, so all results
are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InternalStructureViolation, NotFactorCritical, UnknownVertex
from .graph import Graph, connected_components, induced_subgraph


@dataclass(frozen=True)
class Matching:
    """Pairwise non-adjacent edges of a graph, plus a vertex -> edge index."""

    edges: tuple[int, ...]
    cover: dict[int, int] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, g: Graph, edge_ids: Iterable[int]) -> Matching:
        eids = tuple(sorted(set(edge_ids)))
        cover: dict[int, int] = {}
        for e in eids:
            for w in g.edges[e]:
                if w in cover:
                    raise InternalStructureViolation(
                        f"edges {cover[w]} and {e} of a matching share vertex {w}"
                    )
                cover[w] = e
        return cls(eids, cover)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def covers(self, v: int) -> bool:
        return v in self.cover

    def mate(self, g: Graph, v: int) -> int | None:
        e = self.cover.get(v)
        return None if e is None else g.other(e, v)


def _augment(nbrs: Sequence[Sequence[int]], mate: list[int], root: int, banned: Sequence[bool] | None = None) -> bool:
    """Search for an augmenting path from the exposed vertex ``root``; apply it if found."""
    n = len(nbrs)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if banned is not None and banned[to]:
                continue
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                # odd cycle through two outer vertices: contract the blossom
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    x = to
                    while x != -1:
                        pv = parent[x]
                        nxt = mate[pv]
                        mate[x] = pv
                        mate[pv] = x
                        x = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def _neighbor_lists(g: Graph) -> list[list[int]]:
    return [[v for v, _ in g.adj[u]] for u in range(g.n)]


def _max_mate(g: Graph) -> list[int]:
    mate = [-1] * g.n
    for u, v in g.edges:
        if mate[u] == -1 and mate[v] == -1:
            mate[u], mate[v] = v, u
    nbrs = _neighbor_lists(g)
    for v in range(g.n):
        if mate[v] == -1 and nbrs[v]:
            _augment(nbrs, mate, v)
    return mate


def _mate_to_matching(g: Graph, mate: Sequence[int]) -> Matching:
    eids = [g.edge_id(u, mate[u]) for u in range(g.n) if mate[u] > u]
    return Matching.from_edges(g, eids)


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching (Edmonds' blossom algorithm)."""
    return _mate_to_matching(g, _max_mate(g))


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


def near_perfect_matching(k: Graph, x: int) -> Matching:
    """Perfect matching of ``k - x``, as edge ids of ``k``."""
    if not 0 <= x < k.n:
        raise UnknownVertex(x)
    sub = induced_subgraph(k, [v for v in range(k.n) if v != x])
    m = max_matching(sub.graph)
    if 2 * len(m) != sub.graph.n:
        raise NotFactorCritical(f"graph minus vertex {x} has no perfect matching")
    return Matching.from_edges(k, [sub.edges[e] for e in m.edges])


def is_factor_critical(k: Graph) -> bool:
    if k.n % 2 == 0:
        return False
    for x in range(k.n):
        try:
            near_perfect_matching(k, x)
        except NotFactorCritical:
            return False
    return True


@dataclass(frozen=True)
class GEDecomposition:
    D: frozenset[int]
    A: frozenset[int]
    C: frozenset[int]
    D_components: tuple[tuple[int, ...], ...]
    D_prime: frozenset[int]
    M_C: Matching
    M_A: Matching
    matching: Matching

    def component_of(self) -> dict[int, int]:
        return {v: i for i, comp in enumerate(self.D_components) for v in comp}


def inessential_vertices(g: Graph, mate: Sequence[int] | None = None) -> list[int]:
    """Vertices ``v`` with ``nu(g - v) == nu(g)``.

    Starting from a maximum matching ``M``: an exposed ``v`` qualifies at once;
    otherwise ``M`` minus the edge at ``v`` is maximum in ``g - v`` unless an
    augmenting path exists, and any such path must start at the former mate of
    ``v``. One blossom search per matched vertex decides the test.
    """
    if mate is None:
        mate = _max_mate(g)
    nbrs = _neighbor_lists(g)
    banned = [False] * g.n
    out = []
    for v in range(g.n):
        w = mate[v]
        if w == -1:
            out.append(v)
            continue
        trial = list(mate)
        trial[v] = trial[w] = -1
        banned[v] = True
        if _augment(nbrs, trial, w, banned):
            out.append(v)
        banned[v] = False
    return out


def gallai_edmonds(g: Graph, strict: bool = False) -> GEDecomposition:
    """Gallai-Edmonds decomposition ``V = D | A | C`` with the matchings ``M_C`` and ``M_A``.

    With ``strict=True`` every component of ``G[D]`` is additionally checked to
    be factor-critical (one matching per vertex of the component).
    """
    mate = _max_mate(g)
    matching = _mate_to_matching(g, mate)
    D = frozenset(inessential_vertices(g, mate))
    A = frozenset(u for u in range(g.n) if u not in D and any(v in D for v, _ in g.adj[u]))
    C = frozenset(range(g.n)) - D - A

    sub = induced_subgraph(g, D)
    comps = tuple(
        tuple(sub.vertices[i] for i in comp) for comp in connected_components(sub.graph)
    )
    D_prime = frozenset(c[0] for c in comps if len(c) == 1)
    comp_of = {v: i for i, comp in enumerate(comps) for v in comp}

    M_C = Matching.from_edges(g, [e for e in matching if all(w in C for w in g.edges[e])])
    M_A = Matching.from_edges(g, [e for e in matching if any(w in A for w in g.edges[e])])

    for comp in comps:
        if len(comp) % 2 == 0:
            raise InternalStructureViolation(f"component {comp} of G[D] has even order")
    if 2 * len(M_C) != len(C):
        raise InternalStructureViolation("M_C is not a perfect matching of G[C]")
    hit = set()
    for a in A:
        e = M_A.cover.get(a)
        if e is None:
            raise InternalStructureViolation(f"vertex {a} of A is not matched into D")
        d = g.other(e, a)
        if d not in D:
            raise InternalStructureViolation(f"vertex {a} of A is matched outside D")
        if comp_of[d] in hit:
            raise InternalStructureViolation(f"two A-vertices are matched into component {comps[comp_of[d]]}")
        hit.add(comp_of[d])
    for u in D_prime:
        if any(v not in A for v, _ in g.adj[u]):
            raise InternalStructureViolation(f"isolated D-vertex {u} has a neighbor outside A")
    if strict:
        for comp in comps:
            if not is_factor_critical(induced_subgraph(g, comp).graph):
                raise InternalStructureViolation(f"component {comp} of G[D] is not factor-critical")

    return GEDecomposition(D, A, C, comps, D_prime, M_C, M_A, matching)


def match_A_to_components(g: Graph, ge: GEDecomposition) -> Matching:
    """Match every vertex of ``A`` into a distinct component of ``G[D]``.

    Bipartite augmenting-path matching between ``A`` and the components,
    independent of the matching stored in ``ge``.
    """
    comp_of = ge.component_of()
    left = sorted(ge.A)
    # for each A-vertex: component -> smallest edge id reaching it
    options: dict[int, dict[int, int]] = {}
    for a in left:
        opts: dict[int, int] = {}
        for v, e in g.adj[a]:
            if v in comp_of:
                opts.setdefault(comp_of[v], e)
        options[a] = opts
    owner: dict[int, int] = {}

    def try_assign(a: int, seen: set[int]) -> bool:
        for comp in sorted(options[a]):
            if comp in seen:
                continue
            seen.add(comp)
            if comp not in owner or try_assign(owner[comp], seen):
                owner[comp] = a
                return True
        return False

    for a in left:
        if not try_assign(a, set()):
            raise InternalStructureViolation(f"vertex {a} of A cannot be matched to a free D-component")
    return Matching.from_edges(g, [options[a][comp] for comp, a in owner.items()])
