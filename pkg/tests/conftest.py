import hypothesis.strategies as st
from hypothesis import settings

from signedchrom.core import SignedGraph, SignedPermutation, free, half, link, loop

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def edges(draw, n):
    kinds = ["half", "loop", "free"] + (["link"] * 4 if n >= 2 else [])
    kind = draw(st.sampled_from(kinds))
    sign = draw(st.sampled_from((1, -1)))
    if kind == "free":
        return free()
    if kind == "link":
        i, j = draw(st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True))
        return link(i, j, sign)
    v = draw(st.integers(1, n))
    return half(v, sign) if kind == "half" else loop(v, sign)


@st.composite
def graphs(draw, min_n=1, max_n=4, max_edges=5, allow_forbidding=True):
    n = draw(st.integers(min_n, max_n))
    es = draw(st.lists(edges(n), max_size=max_edges))
    if not allow_forbidding:
        es = [e for e in es if not e.forbids_everything()]
    return SignedGraph.build(n, es)


@st.composite
def signed_perms(draw, n):
    images = draw(st.permutations(range(1, n + 1)))
    switch = draw(st.sets(st.integers(1, n))) if n else set()
    return SignedPermutation(tuple(images), frozenset(switch))


@st.composite
def graph_and_perm(draw, max_n=4, allow_forbidding=True):
    g = draw(graphs(max_n=max_n, allow_forbidding=allow_forbidding))
    return g, draw(signed_perms(g.n))
