import itertools

import pytest
from hypothesis import given

from conftest import graph_and_perm
from signedchrom.chromatic import chromatic_polynomial, is_proper
from signedchrom.core import (FREE, HALF, LINK, LOOP, SignedGraph, SignedPermutation,
                              cycle_decomposition, half, identity, link, loop, signed_permutations)
from signedchrom.corpus import square_diagonal, square_diagonal_perm
from signedchrom.errors import DimensionError
from signedchrom.lattice import beta_hat
from signedchrom.polynomial import evaluate
from signedchrom.quotient import quotient


def colorings_on_flat(graph, flat, k):
    return sum(1 for x in itertools.product(range(-k, k + 1), repeat=graph.n)
               if flat.contains(x) and is_proper(graph, x))


def by_id(result):
    return {e.id: e for e in result.graph.edges}


def test_square_diagonal_structure():
    res = quotient(square_diagonal(), square_diagonal_perm())
    assert res.graph.n == 2
    assert res.vertex_map == ((1, 1), (2, 2))
    e = by_id(res)
    # ids follow file order: {1,2}+, {2,4}-, {3,4}+, {1,3}-, {2,3}-
    assert (e[1].kind, e[1].ends, e[1].sign) == (LINK, (1, 2), 1)
    assert (e[2].kind, e[2].ends, e[2].sign) == (HALF, (2,), -1)
    assert (e[3].kind, e[3].ends, e[3].sign) == (HALF, (2,), -1)
    assert (e[4].kind, e[4].ends) == (LINK, (1, 2))
    assert (e[5].kind, e[5].ends) == (LOOP, (2,))


def test_square_diagonal_derived_signs():
    e = by_id(quotient(square_diagonal(), square_diagonal_perm()))
    assert e[4].sign == 1
    assert e[5].sign == 1


def test_square_diagonal_literal_signs():
    e = by_id(quotient(square_diagonal(), square_diagonal_perm(), rule="literal"))
    assert e[4].sign == -1
    assert e[5].sign == -1


def test_square_diagonal_brute_force_decides():
    g, beta = square_diagonal(), square_diagonal_perm()
    flat = beta_hat(beta)
    derived = chromatic_polynomial(quotient(g, beta).graph)
    literal = chromatic_polynomial(quotient(g, beta, "literal").graph)
    counts = [colorings_on_flat(g, flat, k) for k in range(4)]
    assert counts == [0, 0, 0, 0]
    assert [evaluate(derived, k) for k in range(4)] == counts
    assert [evaluate(literal, k) for k in range(4)] != counts


def test_identity_quotient_is_isomorphic():
    g = square_diagonal()
    res = quotient(g, identity(4))
    assert res.graph.same_edges(g)
    assert res.vertex_map == tuple((i, i) for i in range(1, 5))


def test_odd_cycle_kills_everything():
    g = SignedGraph.build(2, [link(1, 2, 1), half(1, 1), loop(2, -1)])
    res = quotient(g, SignedPermutation((1, 2), frozenset({1, 2})))
    assert res.graph.n == 0
    assert all(e.kind == FREE for e in res.graph.edges)


def test_one_surviving_endpoint_gives_negative_half_edge():
    g = SignedGraph.build(2, [link(1, 2, 1)])
    e = quotient(g, SignedPermutation((1, 2), frozenset({2}))).graph.edges[0]
    assert (e.kind, e.ends, e.sign) == (HALF, (1,), -1)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        quotient(square_diagonal(), identity(3))


def test_edge_map_bijection():
    res = quotient(square_diagonal(), square_diagonal_perm())
    assert sorted(a for a, _ in res.edge_map) == [e.id for e in square_diagonal().edges]
    assert sorted(b for _, b in res.edge_map) == sorted(e.id for e in res.graph.edges)


def test_vertex_count_exhaustive():
    for n in range(1, 6):
        for beta in signed_permutations(n):
            even = sum(len(beta.switch.intersection(c)) % 2 == 0
                       for c in cycle_decomposition(beta))
            assert quotient(SignedGraph(n), beta).graph.n == even


@given(graph_and_perm())
def test_endpoint_count_never_grows(pair):
    g, beta = pair
    res = quotient(g, beta)
    old = {e.id: len(e.ends) for e in g.edges}
    for e in res.graph.edges:
        assert len(e.ends) <= old[e.id]


@given(graph_and_perm(max_n=3))
def test_colorings_on_fixed_flat(pair):
    g, beta = pair
    flat = beta_hat(beta)
    poly = chromatic_polynomial(quotient(g, beta).graph)
    for k in range(4):
        assert evaluate(poly, k) == colorings_on_flat(g, flat, k)
