"""Counting up to signed automorphisms: unlabeled chromatic polynomials,
acyclic orientations (as regions of the complement of the arrangement),
and the explicit orbit enumerations that serve as ground truth."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .config import BUDGET, N_MAX, REGION_N_MAX
from .core import SignedGraph, SignedPermutation, apply_to_point, automorphism_group
from .chromatic import chromatic_polynomial, coloring_grid, is_proper, proper_mask
from .errors import CapacityError, ConsistencyError, UnsupportedEdgeError
from .lattice import arrangement, beta_hat, flat_in_hyperplane, is_subflat, p_sigma
from .polynomial import ExactPolynomial, evaluate, falling_factorial
from .quotient import quotient


@dataclass(frozen=True)
class Region:
    """A region of the complement, named by its sign vector over the sorted
    hyperplanes of the arrangement, with one point inside it."""
    signs: tuple
    point: tuple


def _sign(v):
    return (v > 0) - (v < 0)


def sign_vector(hyperplanes, x):
    return tuple(_sign(h.value(x)) for h in hyperplanes)


# -- colorings fixed by a signed permutation ------------------------------

def fixed_proper_colorings(graph: SignedGraph, beta: SignedPermutation, k,
                           via="action", budget=BUDGET) -> int:
    """Proper k-colorings fixed by beta. ``via="action"`` tests
    ``beta(sigma) == sigma`` directly; ``via="flat"`` tests membership in
    the fixed flat instead."""
    points = coloring_grid(graph.n, k, budget)
    proper = points[proper_mask(graph, points)]
    if via == "action":
        return sum(1 for x in map(tuple, proper.tolist()) if apply_to_point(beta, x) == x)
    if via == "flat":
        flat = beta_hat(beta)
        return sum(1 for x in proper.tolist() if flat.contains(x))
    raise ValueError(f"unknown predicate {via!r}")


def unlabeled_chromatic_via_quotients(graph: SignedGraph, group=None, n_max=N_MAX):
    group = automorphism_group(graph, n_max) if group is None else group
    total = ExactPolynomial()
    for beta in group:
        total = total + chromatic_polynomial(quotient(graph, beta).graph, n_max)
    return total / len(group)


def unlabeled_chromatic_via_flats(graph: SignedGraph, group=None, n_max=N_MAX):
    if graph.has_forbidding_edge():
        raise UnsupportedEdgeError("graph has a free loop or positive loop")
    group = automorphism_group(graph, n_max) if group is None else group
    ideal = p_sigma(graph, n_max)
    total = ExactPolynomial()
    for beta in group:
        fixed = beta_hat(beta)
        for p in ideal:
            if is_subflat(p, fixed):
                total = total + falling_factorial(p.dim) * (2 ** p.dim)
    return total / len(group)


# -- acyclic orientations ---------------------------------------------------

def acyclic_count(graph: SignedGraph, n_max=N_MAX) -> int:
    value = (-1) ** graph.n * evaluate(chromatic_polynomial(graph, n_max), -1)
    return int(value)


def unlabeled_acyclic_count(graph: SignedGraph, group=None, n_max=N_MAX) -> int:
    group = automorphism_group(graph, n_max) if group is None else group
    total = Fraction(0)
    for beta in group:
        q = quotient(graph, beta).graph
        total += (-1) ** q.n * evaluate(chromatic_polynomial(q, n_max), -1)
    value = total / len(group)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"orbit count {value} is not a nonnegative integer")
    return int(value)


def signed_permutation_points(d):
    """All points (e_1 pi(1), ..., e_d pi(d)); exactly one in each chamber
    of BC_d."""
    for perm in itertools.permutations(range(1, d + 1)):
        for signs in itertools.product((1, -1), repeat=d):
            yield tuple(s * v for s, v in zip(signs, perm))


def enumerate_regions(graph: SignedGraph, n_max=REGION_N_MAX):
    """Regions of R^n minus the arrangement, sorted by sign vector. Every
    region is a union of BC_n chambers, so sampling one point per chamber
    finds them all."""
    if graph.has_forbidding_edge():
        raise UnsupportedEdgeError("arrangement undefined with a free or positive loop")
    if graph.n > n_max:
        raise CapacityError(f"n={graph.n} exceeds the region sampling bound {n_max}")
    hyperplanes = arrangement(graph)
    found = {}
    for x in signed_permutation_points(graph.n):
        found.setdefault(sign_vector(hyperplanes, x), x)
    return [Region(s, found[s]) for s in sorted(found)]


def regions_bruteforce(graph: SignedGraph, n_max=REGION_N_MAX) -> int:
    return len(enumerate_regions(graph, n_max))


def flat_sample_points(flat):
    """One point in each chamber of the BC_d arrangement induced on the flat."""
    for values in signed_permutation_points(flat.dim):
        yield flat.point(values)


def regions_meeting_flat(graph: SignedGraph, beta: SignedPermutation,
                         n_max=REGION_N_MAX) -> int:
    """Number of regions of the arrangement that intersect the fixed flat of
    beta. None do when an edge hyperplane contains the flat; otherwise the
    arrangement induced on the flat is a sub-arrangement of BC_d and one
    sample point per chamber of BC_d reaches every region."""
    if graph.has_forbidding_edge():
        raise UnsupportedEdgeError("arrangement undefined with a free or positive loop")
    if graph.n > n_max:
        raise CapacityError(f"n={graph.n} exceeds the region sampling bound {n_max}")
    flat = beta_hat(beta)
    hyperplanes = arrangement(graph)
    if any(flat_in_hyperplane(flat, h) for h in hyperplanes):
        return 0
    seen = {sign_vector(hyperplanes, x) for x in flat_sample_points(flat)}
    if any(0 in s for s in seen):
        raise ConsistencyError("sample point of the flat landed on a hyperplane")
    return len(seen)


def region_fixed_by(graph: SignedGraph, beta: SignedPermutation, region: Region,
                    via="image") -> bool:
    """``via="image"``: beta maps the region's point back into the region.
    ``via="flat"``: some sample point of beta's fixed flat lies in it."""
    hyperplanes = arrangement(graph)
    if via == "image":
        return sign_vector(hyperplanes, apply_to_point(beta, region.point)) == region.signs
    if via == "flat":
        return any(sign_vector(hyperplanes, x) == region.signs
                   for x in flat_sample_points(beta_hat(beta)))
    raise ValueError(f"unknown predicate {via!r}")


# -- explicit orbit partitions ------------------------------------------------

def _count_orbits(items, image):
    """Orbits of a finite set under a group, given ``image(item)`` listing
    the whole orbit of item."""
    remaining = set(items)
    orbits = 0
    while remaining:
        item = remaining.pop()
        remaining.difference_update(image(item))
        orbits += 1
    return orbits


def coloring_orbits(graph: SignedGraph, k, group=None, n_max=N_MAX, budget=BUDGET) -> int:
    group = automorphism_group(graph, n_max) if group is None else group
    colorings = [x for x in map(tuple, coloring_grid(graph.n, k, budget).tolist())
                 if is_proper(graph, x)]
    return _count_orbits(colorings, lambda x: {apply_to_point(b, x) for b in group})


def region_orbits(graph: SignedGraph, group=None, n_max=N_MAX) -> int:
    group = automorphism_group(graph, n_max) if group is None else group
    point = {r.signs: r.point for r in enumerate_regions(graph)}
    hyperplanes = arrangement(graph)
    return _count_orbits(
        point, lambda s: {sign_vector(hyperplanes, apply_to_point(b, point[s])) for b in group})
