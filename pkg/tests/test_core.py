import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from conftest import graphs, signed_perms
from signedchrom.core import (SignedGraph, SignedPermutation, act_on_graph, apply_to_point,
                              automorphism_group, beta_sub, compose, cycle_decomposition, free,
                              half, identity, invert, is_automorphism, link, loop,
                              signed_permutations)
from signedchrom.corpus import square_diagonal
from signedchrom.errors import CapacityError, DimensionError, ValidationError


def perm(*signed):
    return SignedPermutation.from_signed_images(signed)


def matrix(beta):
    """Signed permutation matrix: column i is beta(e_i)."""
    n = beta.n
    cols = [apply_to_point(beta, tuple(int(r == i) for r in range(n))) for i in range(n)]
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def matmul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


# -- apply_to_point --------------------------------------------------------

def test_reflection_example():
    # b = (1 3), switching set {1}
    beta = SignedPermutation((3, 2, 1), frozenset({1}))
    assert apply_to_point(beta, (1, 2, -3)) == (3, 2, 1)


def test_identity_point():
    assert apply_to_point(identity(3), (4, -1, 0)) == (4, -1, 0)


def test_pure_switch():
    assert apply_to_point(SignedPermutation((1, 2), frozenset({1, 2})), (5, 7)) == (-5, -7)


def test_point_dimension_error():
    with pytest.raises(DimensionError):
        apply_to_point(identity(2), (1, 2, 3))


def test_perm_line_convention():
    beta = perm(3, -1, 2)
    assert beta.images == (3, 1, 2)
    assert beta.switch == {1}


# -- action on graphs ------------------------------------------------------

def test_square_diagonal_edge_image():
    beta = SignedPermutation((1, 3, 2, 4), frozenset({2, 3, 4}))
    image = act_on_graph(beta, square_diagonal())
    e = next(e for e in image.edges if e.id == 1)  # originally link {1,2} +
    assert e.ends == (1, 3) and e.sign == -1


def test_square_diagonal_whole_image():
    beta = SignedPermutation((1, 3, 2, 4), frozenset({2, 3, 4}))
    image = act_on_graph(beta, square_diagonal())
    # the right-hand drawing: bottom -, right -, top +, left +, diagonal -
    expected = SignedGraph.build(4, [link(1, 3, -1), link(3, 4, -1), link(2, 4, 1),
                                     link(1, 2, 1), link(2, 3, -1)])
    assert image.same_edges(expected)


def test_identity_action():
    g = square_diagonal()
    assert act_on_graph(identity(4), g) == g


def test_switched_negative_loop_keeps_sign():
    # x_1 != -x_1 is invariant under x_1 -> -x_1
    g = SignedGraph.build(1, [loop(1, -1)])
    image = act_on_graph(SignedPermutation((1,), frozenset({1})), g)
    assert image.edges[0].sign == -1


def test_switched_half_edge_flips_sign():
    g = SignedGraph.build(1, [half(1, 1)])
    image = act_on_graph(SignedPermutation((1,), frozenset({1})), g)
    assert image.edges[0].sign == -1


def test_free_loop_maps_to_free_loop():
    g = SignedGraph.build(2, [free()])
    assert act_on_graph(perm(-2, 1), g).edges[0].kind == "free"


@pytest.mark.parametrize("beta,expected", [
    (perm(2, 1), True),
    (perm(-1, 2), False),
    (perm(1, 2), True),
    (perm(-1, -2), True),
])
def test_is_automorphism_link(beta, expected):
    g = SignedGraph.build(2, [link(1, 2, 1)])
    assert is_automorphism(beta, g) is expected


# -- group enumeration -----------------------------------------------------

def test_group_of_positive_link():
    g = SignedGraph.build(2, [link(1, 2, 1)])
    group = automorphism_group(g)
    assert {b.signed_images() for b in group} == {(1, 2), (-1, -2), (2, 1), (-2, -1)}


def test_group_of_bare_vertex():
    assert len(automorphism_group(SignedGraph(1))) == 2


def test_group_of_negative_loop():
    assert len(automorphism_group(SignedGraph.build(1, [loop(1, -1)]))) == 2


def test_group_of_empty_graph_is_hyperoctahedral():
    assert len(automorphism_group(SignedGraph(3))) == 48


def test_group_bound():
    with pytest.raises(CapacityError):
        automorphism_group(SignedGraph(3), n_max=2)


def test_signed_permutation_count():
    assert len(list(signed_permutations(3))) == 48
    assert len(set(signed_permutations(3))) == 48


@given(graphs(max_n=3))
def test_group_closure(g):
    group = automorphism_group(g)
    members = set(group)
    assert identity(g.n) in members
    for a in group:
        assert invert(a) in members
        for b in group:
            assert compose(a, b) in members


# -- composition ------------------------------------------------------------

def test_compose_with_inverse():
    beta = perm(3, -1, 2)
    assert compose(beta, invert(beta)) == identity(3)
    assert compose(invert(beta), beta) == identity(3)


def test_transposition_is_involution():
    assert invert(perm(2, 1)) == perm(2, 1)


def test_compose_matrix_check():
    swap, flip = perm(2, 1), perm(-1, 2)
    assert apply_to_point(compose(swap, flip), (1, 0)) == apply_to_point(swap, (-1, 0))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(signed_perms(n), signed_perms(n))))
def test_compose_matches_matrix_product(pair):
    a, b = pair
    assert matrix(compose(a, b)) == matmul(matrix(a), matrix(b))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(signed_perms(n), signed_perms(n), graphs(min_n=n, max_n=n))))
def test_action_respects_composition(triple):
    a, b, g = triple
    assert act_on_graph(a, act_on_graph(b, g)).same_edges(act_on_graph(compose(a, b), g))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    signed_perms(n), signed_perms(n), st.lists(st.integers(-5, 5), min_size=n, max_size=n))))
def test_point_action_respects_composition(triple):
    a, b, x = triple
    assert apply_to_point(a, apply_to_point(b, x)) == apply_to_point(compose(a, b), x)
    assert apply_to_point(invert(a), apply_to_point(a, x)) == tuple(x)


def test_dimension_mismatch_compose():
    with pytest.raises(DimensionError):
        compose(identity(2), identity(3))


# -- cycles and beta_sub ----------------------------------------------------

def test_cycles_of_example():
    assert cycle_decomposition(perm(1, 3, 2, 4)) == [[1], [2, 3], [4]]


def test_cycles_identity():
    assert cycle_decomposition(identity(3)) == [[1], [2], [3]]


def test_cycles_three_cycle():
    # 1 -> 3 -> 2 -> 1
    assert cycle_decomposition(perm(3, 1, 2)) == [[1, 3, 2]]


def test_beta_sub_examples():
    beta = SignedPermutation((1, 3, 2, 4), frozenset({2, 3, 4}))
    assert beta_sub(beta, 2) == 2
    assert beta_sub(beta, 3) == 1
    assert all(beta_sub(identity(4), i) == 0 for i in range(1, 5))


def test_beta_sub_at_cycle_minimum_counts_whole_cycle():
    for n in range(1, 6):
        for beta in signed_permutations(n):
            for cycle in cycle_decomposition(beta):
                assert beta_sub(beta, cycle[0]) == len(beta.switch.intersection(cycle))


# -- validation -------------------------------------------------------------

@pytest.mark.parametrize("build", [
    lambda: link(1, 1, 1),
    lambda: loop(1, 0),
    lambda: SignedGraph.build(2, [link(1, 3, 1)]),
    lambda: SignedPermutation((1, 1)),
    lambda: SignedPermutation((1, 2), frozenset({3})),
])
def test_invalid_objects(build):
    with pytest.raises(ValidationError):
        build()


def test_free_loop_rejects_sign():
    from signedchrom.core import Edge
    with pytest.raises(ValidationError):
        Edge("free", (), 1)


def test_parallel_edges_kept():
    g = SignedGraph.build(2, [link(1, 2, 1), link(2, 1, 1)])
    assert len(g.edges) == 2
    assert not g.same_edges(SignedGraph.build(2, [link(1, 2, 1)]))


def test_same_edges_ignores_ids_and_order():
    a = SignedGraph.build(2, [link(1, 2, 1), half(1, -1)])
    b = SignedGraph.build(2, [half(1, -1), link(2, 1, 1)])
    assert a.same_edges(b)
    assert list(itertools.chain(a.edge_multiset())) == list(b.edge_multiset())
