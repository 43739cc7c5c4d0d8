import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, graphs_min_degree
from majcolor import Graph, alpha_majority_k2, kk_parts, majority4, mod3_parts, proper_edge_coloring
from majcolor.errors import DegreeBelowThreshold, DegreeTooSmall, MinDegreeTooLow
from majcolor.generators import complete, cycle, path, petersen, random_mindeg
from majcolor.properedge import is_proper
from majcolor.verify import verify_alpha, verify_majority


def test_proper_c5_needs_three():
    g = cycle(5)
    c = proper_edge_coloring(g)
    assert is_proper(g, c)
    assert c.num_colors_used() == 3


def test_proper_perfect_matching():
    g = Graph(6, [(0, 1), (2, 3), (4, 5)])
    c = proper_edge_coloring(g)
    assert is_proper(g, c) and max(c.colors) <= 2
    assert c.num_colors_used() == 1


def test_proper_petersen():
    g = petersen()
    c = proper_edge_coloring(g)
    assert is_proper(g, c)
    assert max(c.colors) <= 4


@settings(max_examples=300)
@given(graphs(max_n=11))
def test_proper_property(g):
    c = proper_edge_coloring(g)
    assert is_proper(g, c)
    assert all(1 <= x <= g.max_degree() + 1 for x in c.colors)


@pytest.mark.parametrize("seed", range(15))
def test_proper_random_dense(seed):
    g = random_mindeg(30, 5 + seed % 10, seed, extra=0.2)
    c = proper_edge_coloring(g)
    assert is_proper(g, c)
    assert max(c.colors) <= g.max_degree() + 1


@pytest.mark.parametrize(
    "d, parts",
    [(2, [2]), (3, [3]), (4, [2, 2]), (5, [2, 3]), (6, [3, 3]), (7, [2, 2, 3]), (9, [3, 3, 3]), (10, [2, 2, 3, 3])],
)
def test_mod3_parts(d, parts):
    assert mod3_parts(d) == parts


def test_mod3_parts_too_small():
    with pytest.raises(DegreeTooSmall):
        mod3_parts(1)


@given(st.integers(2, 500))
def test_mod3_parts_property(d):
    p = mod3_parts(d)
    assert sum(p) == d
    assert set(p) <= {2, 3} or p == [d]


def test_kk_parts_examples():
    assert kk_parts(6, 2) == [2, 2, 2]
    assert kk_parts(7, 3) == [3, 4]
    with pytest.raises(DegreeBelowThreshold):
        kk_parts(5, 3)


def test_kk_parts_matches_enumeration():
    # independent: all (a, b) with a*k + b*(k+1) == d, choose max a
    for k in range(2, 7):
        for d in range(k * (k - 1), 80):
            reps = [(a, b) for b in range(d // (k + 1) + 1) for a in range(d // k + 1) if a * k + b * (k + 1) == d]
            a, b = max(reps)
            assert kk_parts(d, k) == [k] * a + [k + 1] * b
            assert len(kk_parts(d, k)) <= d // k


def test_majority4_k5():
    g = complete(5)
    c = majority4(g)
    assert not verify_majority(g, c)
    assert all(max(row) <= 2 for row in c.tallies(g))


def test_majority4_c4():
    g = cycle(4)
    c = majority4(g)
    assert not verify_majority(g, c)
    assert all(max(row) <= 1 for row in c.tallies(g))


def test_majority4_rejects_leaf():
    with pytest.raises(MinDegreeTooLow):
        majority4(path(3))


@settings(max_examples=150)
@given(graphs_min_degree(2, max_n=12))
def test_majority4_property(g):
    c = majority4(g)
    assert not verify_majority(g, c, 4)
    for u, row in enumerate(c.tallies(g)):
        d = g.degree(u)
        if d >= 4:
            assert max(row) <= (d + 2) // 3


def test_alpha_k2_k5():
    g = complete(5)
    c = alpha_majority_k2(g, 2)
    assert c.k == 4
    assert all(max(row) <= 2 for row in c.tallies(g))


def test_alpha_k3_k7():
    g = complete(7)
    c = alpha_majority_k2(g, 3)
    assert max(c.colors) <= 5
    assert all(max(row) <= 2 for row in c.tallies(g))
    assert not verify_alpha(g, c, "1/3")


def test_alpha_k3_rejects_k5():
    with pytest.raises(MinDegreeTooLow):
        alpha_majority_k2(complete(5), 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10**6))
def test_alpha_property(k, seed):
    need = k * (k - 1)
    g = random_mindeg(need + 6, need, seed, extra=0.1)
    c = alpha_majority_k2(g, k)
    tallies = c.tallies(g)
    for u in range(g.n):
        assert all(k * x <= g.degree(u) for x in tallies[u])
    assert max(c.colors) <= k + 2


def test_empty_graph():
    g = Graph(3)
    assert majority4(g).colors == ()
