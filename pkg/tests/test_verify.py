import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from majcolor import EdgeColoring, Graph, brute_min_colors, verify_alpha, verify_majority
from majcolor.errors import ColorOutOfRange, PartialColoring, TooLargeWarning
from majcolor.generators import complete, complete_bipartite, cycle, petersen, star
from majcolor.properedge import proper_edge_coloring
from majcolor.verify import has_majority_coloring
from oracles import brute_majority_ok, brute_min_colors_naive


def test_c4_alternating_ok():
    g = cycle(4)
    assert verify_majority(g, EdgeColoring((1, 2, 1, 2), 2)) == []


def test_c3_monochrome_violates_everywhere():
    g = cycle(3)
    viol = verify_majority(g, EdgeColoring((1, 1, 1), 1))
    assert sorted(v.vertex for v in viol) == [0, 1, 2]
    assert all(v.count == 2 and v.degree == 2 for v in viol)


def test_k4_proper_three_coloring_ok():
    g = complete(4)
    # perfect matchings {01,23}, {02,13}, {03,12}
    colors = tuple({(0, 1): 1, (2, 3): 1, (0, 2): 2, (1, 3): 2, (0, 3): 3, (1, 2): 3}[e] for e in g.edges)
    assert verify_majority(g, EdgeColoring(colors, 3)) == []
    c = proper_edge_coloring(g)
    assert c.k == 4 and verify_majority(g, c) == []


def test_partial_and_out_of_range():
    g = cycle(4)
    with pytest.raises(PartialColoring):
        verify_majority(g, EdgeColoring((1, 2, 1), 2))
    with pytest.raises(ColorOutOfRange):
        verify_majority(g, EdgeColoring((1, 2, 1, 3), 2))
    with pytest.raises(ColorOutOfRange):
        verify_majority(g, EdgeColoring((1, 2, 1, 2), 2), k=1)


def test_alpha_k7_violation():
    g = complete(7)
    # vertex 0 gets three edges of color 1
    colors = [1 if e < 3 else 2 + e % 4 for e in range(g.m)]
    viol = verify_alpha(g, EdgeColoring(tuple(colors), 5), "1/3")
    assert any(v.vertex == 0 and v.count == 3 for v in viol)


@pytest.mark.parametrize("alpha", [1, 0, "3/2", Fraction(-1, 2)])
def test_alpha_parameter_rejected(alpha):
    with pytest.raises(ValueError):
        verify_alpha(cycle(4), EdgeColoring((1, 2, 1, 2), 2), alpha)


def test_alpha_float_rejected():
    with pytest.raises(ValueError):
        verify_alpha(cycle(4), EdgeColoring((1, 2, 1, 2), 2), 0.5)


@st.composite
def colored_graphs(draw):
    g = draw(graphs(max_n=8))
    k = draw(st.integers(1, 4))
    colors = tuple(draw(st.integers(1, k)) for _ in range(g.m))
    return g, EdgeColoring(colors, k)


@given(colored_graphs())
def test_majority_equals_alpha_half(gc):
    g, c = gc
    assert verify_majority(g, c) == verify_alpha(g, c, "1/2") == verify_alpha(g, c, (2, 4))
    assert (verify_majority(g, c) == []) == brute_majority_ok(g.n, g.edges, c.colors)


def test_oracle_fixtures():
    assert brute_min_colors(cycle(4), 4) == 2
    assert brute_min_colors(cycle(3), 4) == 3
    assert brute_min_colors(complete(4), 4) == 3
    assert brute_min_colors(petersen(), 4) == 4


def test_oracle_three_colorable_cubic():
    assert brute_min_colors(complete_bipartite(3, 3), 4) == 3


def test_oracle_leaf_means_none():
    assert brute_min_colors(star(3), 6) is None
    assert brute_min_colors(Graph(2, [(0, 1)]), 6) is None


def test_oracle_empty_graph():
    assert brute_min_colors(Graph(3), 2) == 1


def test_oracle_witness_is_valid():
    g = petersen()
    c = has_majority_coloring(g, 4)
    assert c is not None and verify_majority(g, c) == []
    assert has_majority_coloring(g, 3) is None


def test_oracle_warns_on_large_input():
    g = complete(7)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert brute_min_colors(g, 3) == 3
    assert any(issubclass(w.category, TooLargeWarning) for w in caught)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7).filter(lambda g: g.m <= 9))
def test_oracle_matches_naive_enumeration(g):
    assert brute_min_colors(g, 4) == brute_min_colors_naive(g.n, g.edges, 4)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8).filter(lambda g: g.m <= 14))
def test_oracle_obstructions(g):
    result = brute_min_colors(g, 4)
    degs = [d for d in g.degrees() if d]
    if 1 in degs:
        assert result is None
    elif any(d % 2 and d >= 3 for d in degs):
        assert result is None or result >= 3
