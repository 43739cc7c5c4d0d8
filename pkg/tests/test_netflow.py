import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majcolor import FlowNetwork, gallai_edmonds, max_flow, select_edges, selection_network
from majcolor.errors import SelectionInfeasible
from majcolor.generators import complete, complete_bipartite, star
from majcolor.graph import Graph
from oracles import brute_min_cut


def test_single_path():
    net = FlowNetwork(3, 0, 2)
    net.add_arc(0, 1, 1)
    net.add_arc(1, 2, 1)
    f = max_flow(net)
    assert f.value == 1 and f.is_feasible(net)


def test_two_parallel_routes():
    net = FlowNetwork(4, 0, 3)
    for mid in (1, 2):
        net.add_arc(0, mid, 1)
        net.add_arc(mid, 3, 1)
    assert max_flow(net).value == 2


def test_star_negative_control():
    g = star(3)
    ge = gallai_edmonds(g)
    sn = selection_network(g, ge)
    assert len(sn.d_prime) == 3
    # only arc into the sink has capacity floor(3/2) = 1
    assert max_flow(sn.net).value == 1
    assert brute_min_cut(sn.net.n, 0, 1, sn.net.arcs) == 1
    with pytest.raises(SelectionInfeasible):
        select_edges(g, ge)


def test_negative_capacity_rejected():
    net = FlowNetwork(2, 0, 1)
    with pytest.raises(ValueError):
        net.add_arc(0, 1, -1)


@st.composite
def networks(draw):
    n = draw(st.integers(2, 8))
    arcs = []
    for _ in range(draw(st.integers(0, 20))):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if u != v:
            arcs.append((u, v, draw(st.integers(0, 4))))
    return n, arcs


@settings(max_examples=300)
@given(networks())
def test_max_flow_equals_min_cut(data):
    n, arcs = data
    net = FlowNetwork(n, 0, n - 1)
    for a in arcs:
        net.add_arc(*a)
    f = max_flow(net)
    assert f.is_feasible(net)
    assert all(isinstance(x, int) for x in f.flow)
    assert f.value == brute_min_cut(n, 0, n - 1, arcs)


def test_empty_selection_when_perfect_matching():
    g = complete(6)
    assert select_edges(g, gallai_edmonds(g)) == {}
    g = complete(5)
    assert select_edges(g, gallai_edmonds(g)) == {}


def test_selection_two_apexes():
    # apexes a1=0, a2=1 plus b1=2, b2=3; six D'-vertices 4..9 each adjacent to all four
    # (|D'| must exceed |A| for the D'-vertices to be missed by some maximum matching)
    edges = [(a, u) for u in range(4, 10) for a in range(4)]
    edges += [(0, 1), (2, 3)]
    g = Graph(10, edges)
    assert g.min_degree() == 4
    ge = gallai_edmonds(g)
    assert ge.D_prime == set(range(4, 10))
    sel = select_edges(g, ge)
    assert set(sel) == set(range(4, 10))
    load = [0] * g.n
    for u, e in sel.items():
        assert u in g.edges[e]
        load[g.other(e, u)] += 1
    for v in ge.A:
        assert load[v] <= g.degree(v) // 2


@pytest.mark.parametrize("a, b", [(4, 5), (4, 9), (5, 7), (6, 13)])
def test_selection_complete_bipartite(a, b):
    g = complete_bipartite(a, b)
    ge = gallai_edmonds(g)
    assert len(ge.D_prime) == b
    sel = select_edges(g, ge)
    load = {v: 0 for v in ge.A}
    for u, e in sel.items():
        load[g.other(e, u)] += 1
    assert all(load[v] <= g.degree(v) // 2 for v in ge.A)
    assert len(sel) == b
