import itertools

import numpy as np
import pytest
from hypothesis import given

from conftest import graphs
from signedchrom.chromatic import (chromatic_from_whitney, chromatic_polynomial, coloring_grid,
                                   count_colorings_bruteforce, is_proper, proper_mask,
                                   whitney_numbers)
from signedchrom.core import SignedGraph, free, half, link, loop
from signedchrom.corpus import exhaustive_small
from signedchrom.errors import CapacityError, DimensionError, UnsupportedEdgeError
from signedchrom.polynomial import ExactPolynomial, evaluate

K2 = SignedGraph.build(2, [link(1, 2, 1)])
NEG_LOOP = SignedGraph.build(1, [loop(1, -1)])


def naive_count(graph, k):
    """Pure-Python count, sharing nothing with the numpy grid."""
    return sum(is_proper(graph, x) for x in itertools.product(range(-k, k + 1), repeat=graph.n))


def test_is_proper_examples():
    assert is_proper(K2, (1, 2))
    assert not is_proper(SignedGraph.build(2, [link(1, 2, -1)]), (1, -1))
    only_free = SignedGraph.build(2, [free()])
    assert not any(is_proper(only_free, x) for x in itertools.product(range(-2, 3), repeat=2))


def test_is_proper_length():
    with pytest.raises(DimensionError):
        is_proper(K2, (1,))


def test_bruteforce_examples():
    assert count_colorings_bruteforce(NEG_LOOP, 1) == 2
    assert count_colorings_bruteforce(K2, 1) == 6
    assert count_colorings_bruteforce(SignedGraph.build(3, [half(2, 1)]), 0) == 0


def test_budget():
    with pytest.raises(CapacityError):
        count_colorings_bruteforce(SignedGraph(8), 3, budget=10**6)


def test_grid_shape():
    assert coloring_grid(0, 3).shape == (1, 0)
    grid = coloring_grid(2, 1)
    assert grid.shape == (9, 2)
    assert {tuple(r) for r in grid.tolist()} == set(itertools.product((-1, 0, 1), repeat=2))


@given(graphs(max_n=3))
def test_vectorised_mask_matches_is_proper(g):
    pts = coloring_grid(g.n, 2)
    mask = proper_mask(g, pts)
    assert mask.tolist() == [is_proper(g, tuple(x)) for x in pts.tolist()]


def test_chromatic_examples():
    assert chromatic_polynomial(NEG_LOOP) == ExactPolynomial((0, 2))
    assert chromatic_polynomial(K2) == ExactPolynomial((0, 2, 4))
    assert chromatic_polynomial(SignedGraph.build(1, [free()])).is_zero()
    assert chromatic_polynomial(SignedGraph(1)) == ExactPolynomial((1, 2))


def test_whitney_examples():
    assert whitney_numbers(SignedGraph(1)) == [1, 1]
    assert whitney_numbers(K2) == [1, 3, 0]
    assert whitney_numbers(NEG_LOOP) == [1, 0]
    with pytest.raises(UnsupportedEdgeError):
        whitney_numbers(SignedGraph.build(1, [loop(1, 1)]))


def test_exhaustive_small_against_naive_count():
    for g in exhaustive_small():
        poly = chromatic_polynomial(g)
        for k in range(5):
            assert evaluate(poly, k) == naive_count(g, k)


@given(graphs())
def test_formula_matches_bruteforce(g):
    poly = chromatic_polynomial(g)
    for k in range(5):
        assert evaluate(poly, k) == count_colorings_bruteforce(g, k)


@given(graphs())
def test_degree_and_leading_term(g):
    poly = chromatic_polynomial(g)
    if g.has_forbidding_edge():
        assert poly.is_zero()
        assert all(count_colorings_bruteforce(g, k) == 0 for k in range(4))
    else:
        assert poly.degree == g.n
        assert poly.coefficients[-1] == 2 ** g.n


@given(graphs(allow_forbidding=False))
def test_two_expressions_agree(g):
    assert chromatic_polynomial(g) == chromatic_from_whitney(whitney_numbers(g))


def test_grid_is_integer():
    assert coloring_grid(3, 2).dtype == np.int64
