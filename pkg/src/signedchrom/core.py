"""Signed graphs, signed permutations and the action of one on the other.

Vertices are 1..n throughout. A signed permutation is stored as the pair
(b, delta): ``images[i-1] == b(i)`` and ``switch`` is the switching set.
It acts on the standard basis by ``e_i -> (-1)^[b(i) in delta] e_{b(i)}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import N_MAX
from .errors import CapacityError, DimensionError, ValidationError

LINK = "link"
LOOP = "loop"
HALF = "half"
FREE = "free"
KINDS = (LINK, LOOP, HALF, FREE)


@dataclass(frozen=True)
class Edge:
    """One edge record. ``ends`` is ``(i, j)`` with ``i < j`` for a link,
    ``(i,)`` for a loop or half-edge and ``()`` for a free loop."""
    kind: str
    ends: tuple
    sign: int | None = None
    id: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown edge kind {self.kind!r}")
        ends = tuple(int(v) for v in self.ends)
        if self.kind == LINK:
            if len(ends) != 2 or ends[0] == ends[1]:
                raise ValidationError(f"link needs two distinct endpoints, got {ends}")
            ends = tuple(sorted(ends))
        elif self.kind in (LOOP, HALF):
            if len(ends) != 1:
                raise ValidationError(f"{self.kind} needs one endpoint, got {ends}")
        elif ends:
            raise ValidationError("free loop has no endpoints")
        object.__setattr__(self, "ends", ends)
        if self.kind == FREE:
            if self.sign is not None:
                raise ValidationError("free loops carry no sign")
        elif self.sign not in (1, -1):
            raise ValidationError(f"edge sign must be +1 or -1, got {self.sign!r}")

    @property
    def key(self):
        """Identity of the edge with its id disregarded."""
        return (KINDS.index(self.kind), self.ends, self.sign or 0)

    def forbids_everything(self):
        return self.kind == FREE or (self.kind == LOOP and self.sign == 1)


def link(i, j, sign, id=0):
    return Edge(LINK, (i, j), sign, id)


def loop(i, sign, id=0):
    return Edge(LOOP, (i,), sign, id)


def half(i, sign, id=0):
    return Edge(HALF, (i,), sign, id)


def free(id=0):
    return Edge(FREE, (), None, id)


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("vertex count must be nonnegative")
        edges = tuple(self.edges)
        seen = set()
        for e in edges:
            for v in e.ends:
                if not 1 <= v <= self.n:
                    raise ValidationError(f"endpoint {v} outside 1..{self.n}")
            if e.id in seen:
                raise ValidationError(f"duplicate edge id {e.id}")
            seen.add(e.id)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def build(cls, n, edges: Iterable[Edge]):
        """Construct with ids reassigned 1, 2, ... in the given order."""
        return cls(n, tuple(Edge(e.kind, e.ends, e.sign, i)
                            for i, e in enumerate(edges, start=1)))

    def edge_multiset(self):
        return tuple(sorted(e.key for e in self.edges))

    def same_edges(self, other: SignedGraph):
        return self.n == other.n and self.edge_multiset() == other.edge_multiset()

    def has_forbidding_edge(self):
        """True iff a free loop or positive loop rules out every coloring."""
        return any(e.forbids_everything() for e in self.edges)


@dataclass(frozen=True)
class SignedPermutation:
    images: tuple
    switch: frozenset = frozenset()

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValidationError(f"{images} is not a permutation of 1..{n}")
        switch = frozenset(int(v) for v in self.switch)
        if any(not 1 <= v <= n for v in switch):
            raise ValidationError(f"switching set {sorted(switch)} outside 1..{n}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "switch", switch)

    @property
    def n(self):
        return len(self.images)

    def b(self, i):
        return self.images[i - 1]

    def flips(self, i):
        """-1 if i lies in the switching set, else +1."""
        return -1 if i in self.switch else 1

    def sort_key(self):
        return (self.images, tuple(sorted(self.switch)))

    def signed_images(self):
        """The ``perm`` line form: b(i), negated when b(i) is switched."""
        return tuple(self.flips(v) * v for v in self.images)

    @classmethod
    def from_signed_images(cls, values: Sequence[int]):
        values = [int(v) for v in values]
        if 0 in values:
            raise ValidationError("signed images must be nonzero")
        return cls(tuple(abs(v) for v in values),
                   frozenset(abs(v) for v in values if v < 0))

    def __repr__(self):
        return f"SignedPermutation{self.signed_images()}"


def identity(n) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def _check_dim(beta, n):
    if beta.n != n:
        raise DimensionError(f"signed permutation on {beta.n} points, object has dimension {n}")


def apply_to_point(beta: SignedPermutation, x: Sequence):
    """Image of the point x: coordinate b(i) of the result is
    ``(-1)^[b(i) in delta] * x_i``."""
    _check_dim(beta, len(x))
    out = [0] * len(x)
    for i, xi in enumerate(x, start=1):
        t = beta.b(i)
        out[t - 1] = beta.flips(t) * xi
    return tuple(out)


def compose(beta1: SignedPermutation, beta2: SignedPermutation) -> SignedPermutation:
    """beta1 after beta2."""
    _check_dim(beta1, beta2.n)
    images = tuple(beta1.b(beta2.b(i)) for i in range(1, beta2.n + 1))
    switch = {beta1.b(j) for j in beta2.switch} ^ set(beta1.switch)
    return SignedPermutation(images, frozenset(switch))


def invert(beta: SignedPermutation) -> SignedPermutation:
    images = [0] * beta.n
    for i in range(1, beta.n + 1):
        images[beta.b(i) - 1] = i
    switch = frozenset(i for i in range(1, beta.n + 1) if beta.b(i) in beta.switch)
    return SignedPermutation(tuple(images), switch)


def act_on_graph(beta: SignedPermutation, graph: SignedGraph) -> SignedGraph:
    """Push every edge forward along b, twisting its sign by the switches
    it meets. A loop meets its vertex at both ends, so its sign is never
    changed; a half-edge meets it once."""
    _check_dim(beta, graph.n)
    edges = []
    for e in graph.edges:
        ends = tuple(beta.b(v) for v in e.ends)
        sign = e.sign
        if e.kind == LINK:
            sign *= beta.flips(ends[0]) * beta.flips(ends[1])
        elif e.kind == HALF:
            sign *= beta.flips(ends[0])
        edges.append(Edge(e.kind, ends, sign, e.id))
    return SignedGraph(graph.n, tuple(edges))


def is_automorphism(beta: SignedPermutation, graph: SignedGraph) -> bool:
    return act_on_graph(beta, graph).same_edges(graph)


def signed_permutations(n, n_max=N_MAX):
    """All 2^n n! signed permutations of rank n."""
    if n > n_max:
        raise CapacityError(f"n={n} exceeds the enumeration bound {n_max}")
    for images in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            yield SignedPermutation(images, frozenset(i + 1 for i in range(n) if mask >> i & 1))


def automorphism_group(graph: SignedGraph, n_max=N_MAX):
    target = graph.edge_multiset()
    group = [beta for beta in signed_permutations(graph.n, n_max)
             if act_on_graph(beta, graph).edge_multiset() == target]
    group.sort(key=SignedPermutation.sort_key)
    return group


def cycle_decomposition(beta: SignedPermutation):
    """Cycles of b ordered by minimum, each listed from its minimum."""
    seen = set()
    cycles = []
    for start in range(1, beta.n + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        v = beta.b(start)
        while v != start:
            cycle.append(v)
            seen.add(v)
            v = beta.b(v)
        cycles.append(cycle)
    return cycles


def beta_sub(beta: SignedPermutation, i) -> int:
    """Number of switched vertices on the walk b(k), b^2(k), ..., i, where
    k is the minimum of i's cycle and the walk has positive length (so
    for i == k it goes once around the whole cycle)."""
    if not 1 <= i <= beta.n:
        raise DimensionError(f"vertex {i} outside 1..{beta.n}")
    k = min(_cycle_of(beta, i))
    count = 0
    v = k
    while True:
        v = beta.b(v)
        count += v in beta.switch
        if v == i:
            return count


def _cycle_of(beta, i):
    cycle = [i]
    v = beta.b(i)
    while v != i:
        cycle.append(v)
        v = beta.b(v)
    return cycle
