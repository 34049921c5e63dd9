"""Flats of the BC_n arrangement as signed set partitions.

A flat is stored as a zero set Z plus a partition of the other vertices
into blocks, each vertex carrying a sign. The flat is the subspace where
``x_i = 0`` on Z and ``signs[i] * x_i`` is constant on every block. Since
flipping all signs of a block describes the same subspace, the block
minimum always carries +1.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .config import N_MAX
from .core import HALF, LINK, LOOP, SignedGraph, SignedPermutation, beta_sub, cycle_decomposition
from .errors import CapacityError, DimensionError, UnsupportedEdgeError, ValidationError


@dataclass(frozen=True)
class SignedFlat:
    n: int
    zero: tuple = ()
    blocks: tuple = ()
    signs: tuple = ()  # aligned with blocks

    def __post_init__(self):
        if len(self.blocks) != len(self.signs) or any(
                len(b) != len(s) for b, s in zip(self.blocks, self.signs)):
            raise ValidationError("blocks and signs must align")
        zero = tuple(sorted(self.zero))
        pairs = sorted(
            (tuple(sorted(zip(block, signs))) for block, signs in zip(self.blocks, self.signs)),
            key=lambda b: b[0][0] if b else 0,
        )
        blocks, signs = [], []
        for pairs_b in pairs:
            if not pairs_b:
                raise ValidationError("empty block")
            if pairs_b[0][1] == -1:
                pairs_b = tuple((v, -s) for v, s in pairs_b)
            blocks.append(tuple(v for v, _ in pairs_b))
            signs.append(tuple(s for _, s in pairs_b))
        covered = sorted(zero + tuple(v for b in blocks for v in b))
        if covered != list(range(1, self.n + 1)):
            raise ValidationError(f"zero set and blocks must partition 1..{self.n}")
        if any(s not in (1, -1) for ss in signs for s in ss):
            raise ValidationError("signs must be +1 or -1")
        object.__setattr__(self, "zero", zero)
        object.__setattr__(self, "blocks", tuple(blocks))
        object.__setattr__(self, "signs", tuple(signs))

    @property
    def dim(self):
        return len(self.blocks)

    @property
    def rank(self):
        return self.n - len(self.blocks)

    def sign_map(self):
        return {v: s for b, ss in zip(self.blocks, self.signs) for v, s in zip(b, ss)}

    def block_index(self):
        return {v: idx for idx, b in enumerate(self.blocks) for v in b}

    def contains(self, x) -> bool:
        if len(x) != self.n:
            raise DimensionError(f"point of length {len(x)} against flat in dimension {self.n}")
        if any(x[i - 1] != 0 for i in self.zero):
            return False
        for block, signs in zip(self.blocks, self.signs):
            first = signs[0] * x[block[0] - 1]
            if any(s * x[v - 1] != first for v, s in zip(block[1:], signs[1:])):
                return False
        return True

    def point(self, values):
        """The point of the flat whose block coordinates are ``values``."""
        x = [0] * self.n
        for t, block, signs in zip(values, self.blocks, self.signs):
            for v, s in zip(block, signs):
                x[v - 1] = s * t
        return tuple(x)

    def sort_key(self):
        return (self.rank, self.zero, self.blocks, self.signs)

    def to_json(self):
        return {
            "zero": list(self.zero),
            "blocks": [{"elems": list(b), "signs": list(s)} for b, s in zip(self.blocks, self.signs)],
        }

    @classmethod
    def from_json(cls, n, data):
        return cls(n, tuple(data["zero"]),
                   tuple(tuple(b["elems"]) for b in data["blocks"]),
                   tuple(tuple(b["signs"]) for b in data["blocks"]))


def ambient(n) -> SignedFlat:
    return SignedFlat(n, (), tuple((i,) for i in range(1, n + 1)), ((1,),) * n)


def origin(n) -> SignedFlat:
    return SignedFlat(n, tuple(range(1, n + 1)))


@dataclass(frozen=True, order=True)
class Hyperplane:
    """``x_i = sign * x_j`` when j is set (i < j), else ``x_i = 0``."""
    i: int
    j: int = 0
    sign: int = 0

    @property
    def is_coordinate(self):
        return self.j == 0

    def value(self, x):
        """Signed distance proxy: zero exactly on the hyperplane."""
        if self.is_coordinate:
            return x[self.i - 1]
        return x[self.i - 1] - self.sign * x[self.j - 1]


def pair(i, j, sign) -> Hyperplane:
    i, j = sorted((i, j))
    return Hyperplane(i, j, sign)


def coordinate(i) -> Hyperplane:
    return Hyperplane(i)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for idx in range(len(part)):
            yield part[:idx] + [[first] + part[idx]] + part[idx + 1:]


@functools.lru_cache(maxsize=None)
def _flats(n):
    out = []
    vertices = list(range(1, n + 1))
    for z in range(n + 1):
        for zero in itertools.combinations(vertices, z):
            rest = [v for v in vertices if v not in zero]
            for blocks in _set_partitions(rest):
                blocks = [sorted(b) for b in blocks]
                free_slots = [len(b) - 1 for b in blocks]
                for flips in itertools.product((1, -1), repeat=sum(free_slots)):
                    it = iter(flips)
                    signs = [(1,) + tuple(next(it) for _ in range(m)) for m in free_slots]
                    out.append(SignedFlat(n, zero, tuple(map(tuple, blocks)), tuple(signs)))
    out.sort(key=SignedFlat.sort_key)
    return tuple(out)


def enumerate_flats(n, n_max=N_MAX):
    """Every flat of L(BC_n), ordered by rank then lexicographically."""
    if n > n_max:
        raise CapacityError(f"n={n} exceeds the lattice enumeration bound {n_max}")
    return list(_flats(n))


def edge_hyperplane(edge) -> Hyperplane:
    if edge.kind == LINK:
        return pair(edge.ends[0], edge.ends[1], edge.sign)
    if edge.kind == HALF or (edge.kind == LOOP and edge.sign == -1):
        return coordinate(edge.ends[0])
    raise UnsupportedEdgeError(f"no hyperplane encodes a {edge.kind} edge with sign {edge.sign}")


def arrangement(graph: SignedGraph):
    """Distinct hyperplanes of the graph's arrangement, sorted."""
    return sorted({edge_hyperplane(e) for e in graph.edges})


def flat_in_hyperplane(p: SignedFlat, h: Hyperplane) -> bool:
    if h.is_coordinate:
        return h.i in p.zero
    if h.i in p.zero and h.j in p.zero:
        return True
    where = p.block_index()
    if h.i not in where or h.j not in where or where[h.i] != where[h.j]:
        return False
    sign = p.sign_map()
    return sign[h.i] * sign[h.j] == h.sign


def is_subflat(p: SignedFlat, q: SignedFlat) -> bool:
    """True iff p is contained in q, i.e. p sits above q in L(BC_n)."""
    if p.n != q.n:
        raise DimensionError("flats live in different dimensions")
    pz = set(p.zero)
    if not set(q.zero) <= pz:
        return False
    where = p.block_index()
    psign = p.sign_map()
    for block, signs in zip(q.blocks, q.signs):
        inside = [v in pz for v in block]
        if all(inside):
            continue
        if any(inside) or len({where[v] for v in block}) != 1:
            return False
        if len({psign[v] * s for v, s in zip(block, signs)}) != 1:
            return False
    return True


def beta_hat(beta: SignedPermutation) -> SignedFlat:
    """Fixed subspace of beta as a flat."""
    zero, blocks, signs = [], [], []
    for cycle in cycle_decomposition(beta):
        if len(beta.switch.intersection(cycle)) % 2:
            zero.extend(cycle)
        else:
            blocks.append(tuple(cycle))
            signs.append(tuple((-1) ** beta_sub(beta, i) for i in cycle))
    return SignedFlat(beta.n, tuple(zero), tuple(blocks), tuple(signs))


def p_sigma(graph: SignedGraph, n_max=N_MAX):
    """Flats lying in no edge hyperplane of the graph."""
    hyperplanes = arrangement(graph)
    return [p for p in enumerate_flats(graph.n, n_max)
            if not any(flat_in_hyperplane(p, h) for h in hyperplanes)]
