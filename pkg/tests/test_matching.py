import pytest
from hypothesis import given, settings

from conftest import graphs
from majcolor import Graph, gallai_edmonds, match_A_to_components, max_matching, near_perfect_matching
from majcolor.errors import NotFactorCritical
from majcolor.generators import complete, cycle, path, petersen, star
from majcolor.graph import induced_subgraph
from majcolor.matching import is_factor_critical
from oracles import brute_D, brute_factor_critical, brute_nu


def test_max_matching_examples():
    assert len(max_matching(complete(4))) == 2
    assert len(max_matching(cycle(5))) == 2
    assert len(max_matching(Graph(3))) == 0


def test_petersen_has_perfect_matching():
    g = petersen()
    assert brute_nu(g.n, g.edges) == 5
    assert len(max_matching(g)) == 5


def test_blossom_needed():
    # triangle with a pendant path: greedy by id picks (0,1) and blocks the rest
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (1, 5)])
    assert len(max_matching(g)) == 3


@settings(max_examples=300)
@given(graphs(max_n=10))
def test_matching_is_maximum(g):
    m = max_matching(g)
    touched = [w for e in m.edges for w in g.edges[e]]
    assert len(touched) == len(set(touched))
    assert len(m) == brute_nu(g.n, g.edges)


def test_ge_triangle():
    ge = gallai_edmonds(cycle(3), strict=True)
    assert ge.D == {0, 1, 2} and not ge.A and not ge.C
    assert ge.D_components == ((0, 1, 2),)


def test_ge_k4():
    ge = gallai_edmonds(complete(4))
    assert not ge.D and not ge.A and ge.C == {0, 1, 2, 3}
    assert len(ge.M_C) == 2


def test_ge_star():
    g = star(3)
    assert brute_D(g.n, g.edges) == {1, 2, 3}
    ge = gallai_edmonds(g)
    assert ge.D == {1, 2, 3} and ge.D_prime == {1, 2, 3}
    assert ge.A == {0} and not ge.C
    assert len(ge.M_A) == 1


def test_near_perfect_examples():
    c3 = cycle(3)
    for x in range(3):
        m = near_perfect_matching(c3, x)
        assert len(m) == 1 and x not in c3.edges[m.edges[0]]
    c5 = cycle(5)
    m = near_perfect_matching(c5, 0)
    assert sorted(c5.edges[e] for e in m.edges) == [(1, 2), (3, 4)]
    with pytest.raises(NotFactorCritical):
        near_perfect_matching(path(3), 1)


def test_match_A_examples():
    g = star(3)
    ge = gallai_edmonds(g)
    ma = match_A_to_components(g, ge)
    assert len(ma) == 1 and ma.covers(0)
    ge4 = gallai_edmonds(complete(4))
    assert len(match_A_to_components(complete(4), ge4)) == 0


def test_match_A_two_triangles_with_apex():
    # triangles {0,1,2} and {3,4,5}; apex 6 adjacent to 0 and 3
    g = Graph(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 0), (6, 3)])
    ge = gallai_edmonds(g, strict=True)
    assert ge.A == {6}
    ma = match_A_to_components(g, ge)
    comp = ge.component_of()
    (e,) = ma.edges
    assert 6 in g.edges[e]
    assert g.other(e, 6) in comp


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_ge_invariants(g):
    ge = gallai_edmonds(g, strict=True)
    assert ge.D | ge.A | ge.C == set(range(g.n))
    assert not (ge.D & ge.A) and not (ge.D & ge.C) and not (ge.A & ge.C)
    assert ge.D == brute_D(g.n, g.edges)
    for comp in ge.D_components:
        assert brute_factor_critical(comp, g.edges)
    assert {w for e in ge.M_C for w in g.edges[e]} == ge.C
    comp_of = ge.component_of()
    for ma in (ge.M_A, match_A_to_components(g, ge)):
        hit = []
        for a in ge.A:
            e = ma.cover[a]
            d = g.other(e, a)
            assert d in ge.D
            hit.append(comp_of[d])
        assert len(hit) == len(set(hit))
    for u in ge.D_prime:
        assert all(v in ge.A for v in g.neighbors(u))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_factor_critical_agrees_with_brute(g):
    for comp in gallai_edmonds(g).D_components:
        sub = induced_subgraph(g, comp).graph
        assert is_factor_critical(sub) == brute_factor_critical(range(sub.n), sub.edges)
