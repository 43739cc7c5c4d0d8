"""Majority 3-edge-coloring for graphs of minimum degree at least 4.

A sparse spanning subgraph ``G1`` (every vertex keeps between 1 and
``floor(d/2)`` of its edges) receives color 3. The remaining edges ``G2``
are 2-colored component by component with Euler tours; components whose
tour would leave an imbalance are pinned at a vertex that already has two
color-3 edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .coloring import EdgeColoring
from .errors import InternalStructureViolation, MinDegreeTooLow
from .euler2 import balanced_2coloring, balanced_2coloring_pinned
from .graph import Graph, connected_components, edge_subgraph, induced_subgraph
from .matching import GEDecomposition, gallai_edmonds, near_perfect_matching
from .netflow import select_edges

MIN_DEGREE = 4


@dataclass(frozen=True)
class EOnePartition:
    """Split of ``E(G)`` into the color-3 set ``E1`` and its complement."""

    g: Graph
    E1: frozenset[int]
    moved_edges: tuple[int, ...] = ()
    pins: dict[int, int] = field(default_factory=dict, compare=False)

    @property
    def E2(self) -> frozenset[int]:
        return frozenset(range(self.g.m)) - self.E1

    def g1_degrees(self) -> list[int]:
        deg = [0] * self.g.n
        for e in self.E1:
            u, v = self.g.edges[e]
            deg[u] += 1
            deg[v] += 1
        return deg

    def g2_degrees(self) -> list[int]:
        g1 = self.g1_degrees()
        return [self.g.degree(u) - g1[u] for u in range(self.g.n)]

    def g2_components(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Components of ``G2`` having at least one edge, as ``(vertices, edge ids)``."""
        g = self.g
        e2 = self.E2
        h = Graph(g.n, [g.edges[e] for e in sorted(e2)])
        eids = sorted(e2)
        out = []
        for comp in connected_components(h):
            if len(comp) == 1:
                continue
            members = set(comp)
            out.append((tuple(comp), tuple(eids[i] for i, (u, _) in enumerate(h.edges) if u in members)))
        return out

    def e3_violations(self) -> list[int]:
        """Non-isolated vertices with ``d_G1`` outside ``[1, floor(d_G/2)]``."""
        g1 = self.g1_degrees()
        return [
            u for u in range(self.g.n)
            if self.g.degree(u) and not 1 <= g1[u] <= self.g.degree(u) // 2
        ]

    def check_e3(self, stage: str) -> None:
        bad = self.e3_violations()
        if bad:
            u = bad[0]
            raise InternalStructureViolation(
                f"{stage}: vertex {u} has {self.g1_degrees()[u]} color-3 edges, degree {self.g.degree(u)}"
            )


@dataclass(frozen=True)
class G2Component:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    type: int
    pin: int | None = None


def _require_min_degree(g: Graph, need: int = MIN_DEGREE) -> None:
    for u in range(g.n):
        d = g.degree(u)
        if 0 < d < need:
            raise MinDegreeTooLow(u, d, need)


def build_E1(g: Graph, ge: GEDecomposition, selection: dict[int, int]) -> EOnePartition:
    _require_min_degree(g)
    E1: set[int] = set(selection.values())
    if set(selection) != {u for u in ge.D_prime if g.degree(u)}:
        raise InternalStructureViolation("selection does not cover exactly the non-isolated D' vertices")
    E1 |= set(ge.M_C.edges)

    selected_at_A = {w for e in selection.values() for w in g.edges[e] if w in ge.A}
    m_a_prime = []
    for v in sorted(ge.A - selected_at_A):
        e = ge.M_A.cover.get(v)
        if e is None:
            raise InternalStructureViolation(f"vertex {v} of A has no M_A edge")
        m_a_prime.append(e)
    E1 |= set(m_a_prime)

    touched = {}
    for e in m_a_prime:
        for w in g.edges[e]:
            if w in ge.D:
                touched.setdefault(w, e)
    for comp in ge.D_components:
        if len(comp) < 3:
            continue
        hits = [x for x in comp if x in touched]
        if len(hits) > 1:
            raise InternalStructureViolation(f"component {comp} carries {len(hits)} M_A' edges")
        sub = induced_subgraph(g, comp)
        if hits:
            x = hits[0]
            extra = []
        else:
            x = comp[0]
            local_x = sub.local()[x]
            # smallest-id edge of the component at x
            extra = [min(sub.edges[e] for _, e in sub.graph.adj[local_x])]
        npm = near_perfect_matching(sub.graph, sub.local()[x])
        E1 |= {sub.edges[e] for e in npm.edges}
        E1 |= set(extra)

    part = EOnePartition(g, frozenset(E1))
    part.check_e3("after building E1")
    return part


def _all_even_odd_size(vertices, edges, g2deg) -> bool:
    return all(g2deg[v] % 2 == 0 for v in vertices) and len(edges) % 2 == 1


def fixup(part: EOnePartition) -> EOnePartition:
    """Move one edge into ``E1`` from each all-even, odd-size ``G2`` component
    whose vertices all have exactly one ``E1`` edge.
    """
    g1 = part.g1_degrees()
    g2 = part.g2_degrees()
    moved = []
    for vertices, edges in part.g2_components():
        if _all_even_odd_size(vertices, edges, g2) and all(g1[v] == 1 for v in vertices):
            moved.append(edges[0])
    if not moved:
        return part
    out = replace(part, E1=part.E1 | frozenset(moved), moved_edges=part.moved_edges + tuple(moved))
    out.check_e3("after fixup")
    return out


def classify(part: EOnePartition) -> list[G2Component]:
    g1 = part.g1_degrees()
    g2 = part.g2_degrees()
    out = []
    for vertices, edges in part.g2_components():
        if not _all_even_odd_size(vertices, edges, g2):
            out.append(G2Component(vertices, edges, 1))
            continue
        pin = next((v for v in vertices if g1[v] >= 2), None)
        if pin is None:
            raise InternalStructureViolation(
                f"G2 component on {vertices} is all-even with odd size but has no vertex with two E1 edges"
            )
        out.append(G2Component(vertices, edges, 2, pin))
    return out


@dataclass(frozen=True)
class Majority3Result:
    coloring: EdgeColoring
    decomposition: GEDecomposition
    selection: dict[int, int]
    initial: EOnePartition
    final: EOnePartition
    components: list[G2Component]


def majority3_pipeline(g: Graph) -> Majority3Result:
    """Run every stage and keep the intermediate objects for inspection."""
    _require_min_degree(g)
    ge = gallai_edmonds(g)
    selection = select_edges(g, ge)
    initial = build_E1(g, ge, selection)
    final = fixup(initial)
    components = classify(final)
    pins = {i: c.pin for i, c in enumerate(components) if c.type == 2}
    final = replace(final, pins=pins)

    colors = [0] * g.m
    for e in final.E1:
        colors[e] = 3
    for comp in components:
        sub = edge_subgraph(g, comp.edges)
        if comp.type == 1:
            local = balanced_2coloring(sub.graph)
        else:
            local = balanced_2coloring_pinned(sub.graph, sub.local()[comp.pin])
        for i, e in enumerate(sub.edges):
            colors[e] = local.colors[i]
    if any(c == 0 for c in colors):
        raise InternalStructureViolation("some edge was left uncolored")
    return Majority3Result(EdgeColoring(tuple(colors), 3), ge, selection, initial, final, components)


def majority3(g: Graph) -> EdgeColoring:
    """Majority 3-edge-coloring of a graph whose non-isolated vertices have degree at least 4."""
    return majority3_pipeline(g).coloring
