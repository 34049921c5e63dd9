"""Chromatic polynomials of signed graphs, labeled and up to signed
automorphism, with brute-force oracles for every formula."""
from .chromatic import (chromatic_polynomial, count_colorings_bruteforce, is_proper,
                        whitney_numbers)
from .core import (Edge, SignedGraph, SignedPermutation, act_on_graph, apply_to_point,
                   automorphism_group, beta_sub, compose, cycle_decomposition, free, half,
                   identity, invert, is_automorphism, link, loop)
from .errors import (CapacityError, ConsistencyError, DimensionError, ParseError,
                     SignedChromError, UnsupportedEdgeError, ValidationError)
from .lattice import (SignedFlat, beta_hat, edge_hyperplane, enumerate_flats,
                      flat_in_hyperplane, is_subflat, p_sigma)
from .polynomial import ExactPolynomial, evaluate, falling_factorial
from .quotient import QuotientResult, quotient
from .textio import format_graph, parse_graph
from .unlabeled import (acyclic_count, fixed_proper_colorings, region_fixed_by,
                        regions_bruteforce, regions_meeting_flat, unlabeled_acyclic_count,
                        unlabeled_chromatic_via_flats, unlabeled_chromatic_via_quotients)

__version__ = "0.1.0"
