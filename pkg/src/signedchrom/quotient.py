"""Quotient of a signed graph by a signed permutation.

Vertices of the quotient are the cycles of b meeting the switching set an
even number of times, relabeled 1..m' in cycle order. On the fixed
subspace of beta every coordinate is ``x_i = (-1)^beta_sub(i) * t_s`` with
t_s the value at the minimum of i's cycle (and 0 on odd cycles), which
fixes how each edge constraint pushes forward.

Two sign rules are available. ``derived`` twists a link by
``(-1)^(beta_sub(i) + beta_sub(j))`` at its actual endpoints, including
when both endpoints share a cycle and the link becomes a loop. ``literal``
reads the twist at the cycle minima and gives every edge that loses
endpoints sign -1; it is kept only for comparison and does not count the
colorings on the fixed subspace correctly.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (FREE, HALF, LINK, LOOP, Edge, SignedGraph, SignedPermutation,
                   beta_sub, cycle_decomposition)
from .errors import DimensionError

SIGN_RULES = ("derived", "literal")


@dataclass(frozen=True)
class QuotientResult:
    graph: SignedGraph
    vertex_map: tuple  # (cycle index s, new label)
    edge_map: tuple    # (original edge id, quotient edge id)
    cycles: tuple = ()

    def to_json(self):
        return {
            "vertex_map": [list(p) for p in self.vertex_map],
            "edge_map": [list(p) for p in self.edge_map],
            "cycles": [list(c) for c in self.cycles],
        }


def quotient(graph: SignedGraph, beta: SignedPermutation, rule="derived") -> QuotientResult:
    if beta.n != graph.n:
        raise DimensionError(f"signed permutation on {beta.n} points, graph on {graph.n}")
    if rule not in SIGN_RULES:
        raise ValueError(f"unknown sign rule {rule!r}")
    cycles = cycle_decomposition(beta)
    cycle_of = {v: s for s, c in enumerate(cycles, start=1) for v in c}
    survivors = [s for s, c in enumerate(cycles, start=1)
                 if len(beta.switch.intersection(c)) % 2 == 0]
    label = {s: new for new, s in enumerate(survivors, start=1)}
    minimum = {s: c[0] for s, c in enumerate(cycles, start=1)}

    def twist(v):
        if rule == "literal":
            v = minimum[cycle_of[v]]
        return (-1) ** beta_sub(beta, v)

    edges = []
    for e in graph.edges:
        alive = [v for v in e.ends if cycle_of[v] in label]
        if e.kind == LINK and len(alive) == 2:
            i, j = e.ends
            si, sj = label[cycle_of[i]], label[cycle_of[j]]
            sign = e.sign * twist(i) * twist(j)
            if si != sj:
                new = Edge(LINK, (si, sj), sign, e.id)
            else:
                new = Edge(LOOP, (si,), -1 if rule == "literal" else sign, e.id)
        elif e.kind == LINK and len(alive) == 1:
            new = Edge(HALF, (label[cycle_of[alive[0]]],), -1, e.id)
        elif e.kind in (LOOP, HALF) and alive:
            new = Edge(e.kind, (label[cycle_of[alive[0]]],), e.sign, e.id)
        else:
            new = Edge(FREE, (), None, e.id)
        edges.append(new)

    return QuotientResult(
        graph=SignedGraph(len(survivors), tuple(edges)),
        vertex_map=tuple((s, label[s]) for s in survivors),
        edge_map=tuple((e.id, e.id) for e in graph.edges),
        cycles=tuple(tuple(c) for c in cycles),
    )
