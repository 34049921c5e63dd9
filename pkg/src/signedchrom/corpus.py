"""Bundled test corpus: every small graph, the four-vertex square-with-diagonal
example, and a seeded batch of random graphs with n <= 4."""
from __future__ import annotations

import itertools
import random

from .core import SignedGraph, SignedPermutation, free, half, link, loop, signed_permutations

DEFAULT_SEED = 20131
RANDOM_COUNT = 200
MAX_RANDOM_N = 4
MAX_RANDOM_EDGES = 5


def edge_types(n):
    """Every distinct edge (up to id) on vertices 1..n."""
    out = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        out += [link(i, j, 1), link(i, j, -1)]
    for i in range(1, n + 1):
        out += [loop(i, 1), loop(i, -1), half(i, 1), half(i, -1)]
    out.append(free())
    return out


def exhaustive_small(max_n=2, max_edges=2):
    """All graphs with 1 <= n <= max_n and at most max_edges edges, edge
    multisets taken up to order."""
    graphs = []
    for n in range(1, max_n + 1):
        types = edge_types(n)
        for m in range(max_edges + 1):
            for combo in itertools.combinations_with_replacement(types, m):
                graphs.append(SignedGraph.build(n, combo))
    return graphs


def square_diagonal():
    """The four-vertex example: square 1-2-4-3 with diagonal 2-3."""
    return SignedGraph.build(4, [
        link(1, 2, 1), link(2, 4, -1), link(3, 4, 1), link(1, 3, -1), link(2, 3, -1)])


def square_diagonal_perm():
    """b = (1)(23)(4) with switching set {2, 3, 4}."""
    return SignedPermutation((1, 3, 2, 4), frozenset({2, 3, 4}))


def random_edge(rng, n):
    r = rng.random()
    if r < 0.04:
        return free()
    sign = rng.choice((1, -1))
    if n >= 2 and r < 0.72:
        i, j = rng.sample(range(1, n + 1), 2)
        return link(i, j, sign)
    if r < 0.86:
        return half(rng.randint(1, n), sign)
    return loop(rng.randint(1, n), sign)


def random_graphs(count=RANDOM_COUNT, seed=DEFAULT_SEED, max_n=MAX_RANDOM_N,
                  max_edges=MAX_RANDOM_EDGES):
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        m = rng.randint(0, max_edges)
        graphs.append(SignedGraph.build(n, [random_edge(rng, n) for _ in range(m)]))
    return graphs


def random_signed_permutation(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return SignedPermutation(tuple(images), frozenset(v for v in range(1, n + 1) if rng.random() < 0.5))


def bundled_corpus(seed=DEFAULT_SEED):
    return exhaustive_small() + [square_diagonal()] + random_graphs(seed=seed)


def quotient_pairs(graphs=None, per_graph=4, seed=DEFAULT_SEED):
    """(graph, beta) pairs with beta an arbitrary signed permutation: all of
    them when n <= 2, otherwise ``per_graph`` seeded random draws. The
    four-vertex example pair always comes first."""
    graphs = bundled_corpus(seed) if graphs is None else graphs
    rng = random.Random(seed + 1)
    pairs = [(square_diagonal(), square_diagonal_perm())]
    for g in graphs:
        if g.n <= 2:
            pairs += [(g, beta) for beta in signed_permutations(g.n)]
        else:
            pairs += [(g, random_signed_permutation(rng, g.n)) for _ in range(per_graph)]
    return pairs

