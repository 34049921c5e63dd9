"""Labeled signed chromatic polynomials.

Two independent routes: the sum over P(Sigma) of ``2^d (k)_d`` (d the
dimension of the flat), and brute-force enumeration of the grid
``[-k, k]^n``. The grid route is the oracle every other count is checked
against, so it touches nothing from the lattice module.
"""
from __future__ import annotations

import numpy as np

from .config import BUDGET, N_MAX
from .core import FREE, LINK, LOOP, SignedGraph
from .errors import CapacityError, DimensionError, UnsupportedEdgeError
from .lattice import p_sigma
from .polynomial import ExactPolynomial, falling_factorial


def is_proper(graph: SignedGraph, coloring) -> bool:
    if len(coloring) != graph.n:
        raise DimensionError(f"coloring of length {len(coloring)} for {graph.n} vertices")
    for e in graph.edges:
        if e.kind == FREE:
            return False
        if e.kind == LINK:
            i, j = e.ends
            if coloring[i - 1] == e.sign * coloring[j - 1]:
                return False
        elif e.kind == LOOP and e.sign == 1:
            return False
        elif coloring[e.ends[0] - 1] == 0:
            return False
    return True


def coloring_grid(n, k, budget=BUDGET):
    """All points of [-k, k]^n as an (N, n) integer array."""
    size = (2 * k + 1) ** n
    if size > budget:
        raise CapacityError(f"(2k+1)^n = {size} exceeds the brute-force budget {budget}")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    axes = np.indices((2 * k + 1,) * n, dtype=np.int64).reshape(n, -1).T
    return axes - k


def proper_mask(graph: SignedGraph, points):
    """Row-wise vectorised ``is_proper``."""
    mask = np.ones(len(points), dtype=bool)
    for e in graph.edges:
        if e.forbids_everything():
            return np.zeros(len(points), dtype=bool)
        if e.kind == LINK:
            i, j = e.ends
            mask &= points[:, i - 1] != e.sign * points[:, j - 1]
        else:
            mask &= points[:, e.ends[0] - 1] != 0
    return mask


def count_colorings_bruteforce(graph: SignedGraph, k, budget=BUDGET) -> int:
    return int(proper_mask(graph, coloring_grid(graph.n, k, budget)).sum())


def _require_hyperplanes(graph):
    if graph.has_forbidding_edge():
        raise UnsupportedEdgeError("graph has a free loop or positive loop")


def chromatic_polynomial(graph: SignedGraph, n_max=N_MAX) -> ExactPolynomial:
    if graph.has_forbidding_edge():
        return ExactPolynomial()
    total = ExactPolynomial()
    for p in p_sigma(graph, n_max):
        total = total + falling_factorial(p.dim) * (2 ** p.dim)
    return total


def whitney_numbers(graph: SignedGraph, n_max=N_MAX):
    """W_0..W_n: how many flats of P(Sigma) have each rank."""
    _require_hyperplanes(graph)
    counts = [0] * (graph.n + 1)
    for p in p_sigma(graph, n_max):
        counts[p.rank] += 1
    return counts


def chromatic_from_whitney(whitney) -> ExactPolynomial:
    """sum_i W_{n-i} 2^i (k)_i."""
    n = len(whitney) - 1
    total = ExactPolynomial()
    for i in range(n + 1):
        total = total + falling_factorial(i) * (whitney[n - i] * 2 ** i)
    return total
