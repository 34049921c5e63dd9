"""Formula-versus-oracle checks over the bundled corpus.

Each ``check_*`` function returns a :class:`CheckResult`; a failing check
keeps the first counterexample it met. ``run_selfcheck`` runs them all.
"""
from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field

from .chromatic import (chromatic_from_whitney, chromatic_polynomial, coloring_grid,
                        count_colorings_bruteforce, is_proper, whitney_numbers)
from .config import Limits
from .core import automorphism_group, compose, identity, invert, is_automorphism
from .corpus import bundled_corpus, square_diagonal, square_diagonal_perm, quotient_pairs
from .errors import SignedChromError
from .lattice import beta_hat
from .polynomial import ExactPolynomial, evaluate
from .quotient import quotient
from .textio import format_graph, format_permutation, parse_graph
from .unlabeled import (acyclic_count, coloring_orbits, enumerate_regions, fixed_proper_colorings,
                        region_fixed_by, region_orbits, regions_bruteforce, regions_meeting_flat,
                        unlabeled_acyclic_count, unlabeled_chromatic_via_flats,
                        unlabeled_chromatic_via_quotients)

ORACLE_KS = (0, 1, 2, 3, 4)
REGION_MAX_N = 4
BURNSIDE_MAX_N = 3


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: dict | None = None
    seconds: float = 0.0

    def fail(self, **details):
        if self.passed:
            self.passed = False
            self.counterexample = details

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name} ({self.cases} cases, {self.seconds:.2f}s)"
        if self.counterexample:
            text += f"\n    counterexample: {self.counterexample}"
        return text

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "counterexample": self.counterexample, "seconds": round(self.seconds, 3)}


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.seconds = time.perf_counter() - start
        return result
    return wrapper


def _describe(graph, beta=None, **extra):
    out = {"graph": format_graph(graph).strip().replace("\n", "; ")}
    if beta is not None:
        out["beta"] = format_permutation(beta)
    for key, value in extra.items():
        out[key] = str(value) if isinstance(value, ExactPolynomial) else value
    return out


class GroupCache:
    def __init__(self, limits=Limits()):
        self.limits = limits
        self._groups = {}

    def __call__(self, graph):
        key = (graph.n, graph.edge_multiset())
        if key not in self._groups:
            self._groups[key] = automorphism_group(graph, self.limits.n_max)
        return self._groups[key]


@_timed
def check_formula_oracle(graphs, ks=ORACLE_KS, limits=Limits()):
    res = CheckResult("chromatic polynomial = brute-force coloring count")
    for g in graphs:
        poly = chromatic_polynomial(g, limits.n_max)
        for k in ks:
            res.cases += 1
            got, expected = evaluate(poly, k), count_colorings_bruteforce(g, k, limits.budget)
            if got != expected:
                res.fail(**_describe(g, k=k, expected=expected, got=str(got)))
    return res


@_timed
def check_whitney_sum(graphs, limits=Limits()):
    res = CheckResult("flat sum = Whitney-number sum")
    for g in graphs:
        if g.has_forbidding_edge():
            continue
        res.cases += 1
        a = chromatic_polynomial(g, limits.n_max)
        b = chromatic_from_whitney(whitney_numbers(g, limits.n_max))
        if a != b:
            res.fail(**_describe(g, expected=a, got=b))
    return res


def _colorings_in_flat(graph, flat, k, budget):
    """Proper colorings on the flat, by point-by-point membership."""
    points = coloring_grid(graph.n, k, budget).tolist()
    return sum(1 for x in points if flat.contains(x) and is_proper(graph, x))


@_timed
def check_quotient_on_flat(pairs, ks=(0, 1, 2, 3), rule="derived", limits=Limits()):
    res = CheckResult(f"colorings on fixed flat = quotient chromatic polynomial ({rule} rule)")
    for g, beta in pairs:
        flat = beta_hat(beta)
        poly = chromatic_polynomial(quotient(g, beta, rule).graph, limits.n_max)
        for k in ks:
            res.cases += 1
            expected = _colorings_in_flat(g, flat, k, limits.budget)
            got = evaluate(poly, k)
            if got != expected:
                res.fail(**_describe(g, beta, k=k, expected=expected, got=str(got)))
    return res


@_timed
def check_literal_rule_refuted(ks=(0, 1, 2, 3), limits=Limits()):
    """The literal sign rule must miscount on the four-vertex example."""
    res = CheckResult("literal sign rule fails on the four-vertex example")
    inner = check_quotient_on_flat([(square_diagonal(), square_diagonal_perm())], ks, "literal", limits)
    res.cases = inner.cases
    if inner.passed:
        res.fail(**_describe(square_diagonal(), square_diagonal_perm(),
                             note="literal rule unexpectedly agreed with brute force"))
    return res


@_timed
def check_fixed_coloring_predicates(pairs, ks=(0, 1, 2), limits=Limits()):
    res = CheckResult("beta(sigma) = sigma iff sigma on the fixed flat")
    for g, beta in pairs:
        for k in ks:
            res.cases += 1
            a = fixed_proper_colorings(g, beta, k, "action", limits.budget)
            b = fixed_proper_colorings(g, beta, k, "flat", limits.budget)
            if a != b:
                res.fail(**_describe(g, beta, k=k, expected=a, got=b))
    return res


@_timed
def check_unlabeled_formulas(graphs, groups, limits=Limits()):
    res = CheckResult("unlabeled chromatic: quotient sum = flat sum")
    for g in graphs:
        if g.has_forbidding_edge():
            continue
        res.cases += 1
        a = unlabeled_chromatic_via_quotients(g, groups(g), limits.n_max)
        b = unlabeled_chromatic_via_flats(g, groups(g), limits.n_max)
        if a != b:
            res.fail(**_describe(g, expected=a, got=b))
    return res


@_timed
def check_burnside_colorings(graphs, groups, ks=(0, 1, 2, 3), max_n=BURNSIDE_MAX_N, limits=Limits()):
    res = CheckResult("unlabeled chromatic = explicit coloring orbit count")
    for g in graphs:
        if g.n > max_n:
            continue
        poly = unlabeled_chromatic_via_quotients(g, groups(g), limits.n_max)
        for k in ks:
            res.cases += 1
            expected = coloring_orbits(g, k, groups(g), budget=limits.budget)
            got = evaluate(poly, k)
            if got != expected:
                res.fail(**_describe(g, k=k, expected=expected, got=str(got)))
    return res


FIXTURES = (
    # text, labeled, unlabeled, acyclic, unlabeled acyclic
    ("n 2\nlink 1 2 +", (0, 2, 4), (0, 1, 1), 2, 1),
    ("n 1\nloop 1 -", (0, 2), (0, 1), 2, 1),
    ("n 1", (1, 2), (1, 1), 1, 1),
)


@_timed
def check_fixtures(limits=Limits()):
    res = CheckResult("closed-form fixtures")
    for text, chi, chi_hat, acyclic, unlabeled_acyclic in FIXTURES:
        g = parse_graph(text)
        res.cases += 1
        got = (chromatic_polynomial(g, limits.n_max).coefficients,
               unlabeled_chromatic_via_quotients(g, n_max=limits.n_max).coefficients,
               acyclic_count(g, limits.n_max),
               unlabeled_acyclic_count(g, n_max=limits.n_max))
        expected = (chi, chi_hat, acyclic, unlabeled_acyclic)
        if got != expected:
            res.fail(**_describe(g, expected=repr(expected), got=repr(got)))
    return res


@_timed
def check_region_counts(graphs, max_n=REGION_MAX_N, limits=Limits()):
    res = CheckResult("sampled region count = (-1)^n chi(-1)")
    for g in graphs:
        if g.has_forbidding_edge() or g.n > max_n:
            continue
        res.cases += 1
        expected, got = regions_bruteforce(g), acyclic_count(g, limits.n_max)
        if got != expected:
            res.fail(**_describe(g, expected=expected, got=got))
    return res


@_timed
def check_regions_meeting_flat(pairs, max_n=REGION_MAX_N, limits=Limits()):
    res = CheckResult("regions meeting fixed flat = (-1)^m chi_quotient(-1)")
    for g, beta in pairs:
        if g.has_forbidding_edge() or g.n > max_n:
            continue
        res.cases += 1
        q = quotient(g, beta).graph
        got = (-1) ** q.n * evaluate(chromatic_polynomial(q, limits.n_max), -1)
        expected = regions_meeting_flat(g, beta)
        if got != expected:
            res.fail(**_describe(g, beta, expected=expected, got=str(got)))
    return res


def automorphism_pairs(graphs, groups, max_n=REGION_MAX_N):
    return [(g, beta) for g in graphs if g.n <= max_n for beta in groups(g)]


@_timed
def check_region_fixedness(graphs, groups, max_n=REGION_MAX_N):
    res = CheckResult("region fixed by beta iff it meets the fixed flat")
    for g in graphs:
        if g.has_forbidding_edge() or g.n > max_n:
            continue
        regions = enumerate_regions(g)
        for beta in groups(g):
            for r in regions:
                res.cases += 1
                a = region_fixed_by(g, beta, r, "image")
                b = region_fixed_by(g, beta, r, "flat")
                if a != b:
                    res.fail(**_describe(g, beta, region=list(r.signs), expected=a, got=b))
    return res


@_timed
def check_region_orbits(graphs, groups, max_n=REGION_MAX_N, limits=Limits()):
    res = CheckResult("unlabeled acyclic count = explicit region orbit count")
    for g in graphs:
        if g.has_forbidding_edge() or g.n > max_n:
            continue
        res.cases += 1
        expected = region_orbits(g, groups(g))
        got = unlabeled_acyclic_count(g, groups(g), limits.n_max)
        if got != expected:
            res.fail(**_describe(g, expected=expected, got=got))
    return res


@_timed
def check_integrality(graphs, groups, ks=ORACLE_KS, limits=Limits()):
    res = CheckResult("unlabeled counts are nonnegative integers")
    for g in graphs:
        poly = unlabeled_chromatic_via_quotients(g, groups(g), limits.n_max)
        for k in ks:
            res.cases += 1
            v = evaluate(poly, k)
            if v.denominator != 1 or v < 0:
                res.fail(**_describe(g, k=k, got=str(v)))
        res.cases += 1
        try:
            unlabeled_acyclic_count(g, groups(g), limits.n_max)
        except SignedChromError as exc:
            res.fail(**_describe(g, got=str(exc)))
    return res


@_timed
def check_group_structure(graphs, groups):
    res = CheckResult("automorphism sets are groups")
    for g in graphs:
        group = groups(g)
        members = set(group)
        res.cases += 1
        ok = identity(g.n) in members and all(is_automorphism(b, g) for b in group)
        ok = ok and all(invert(b) in members for b in group)
        ok = ok and all(compose(a, b) in members for a in group for b in group)
        if not ok:
            res.fail(**_describe(g, order=len(group)))
    return res


@_timed
def check_roundtrip(graphs):
    res = CheckResult("parse(format(graph)) = graph")
    for g in graphs:
        res.cases += 1
        if parse_graph(format_graph(g)) != g:
            res.fail(**_describe(g))
    return res


@dataclass
class SelfcheckReport:
    results: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def first_failure(self):
        return next((r for r in self.results if not r.passed), None)

    def to_json(self):
        return {"passed": self.passed, "seconds": round(self.seconds, 3),
                "checks": [r.to_json() for r in self.results]}


def run_selfcheck(extra_graphs=(), k_range=(0, 1, 2, 3), limits=Limits(), progress=None):
    """Run every check over the bundled corpus plus ``extra_graphs``.
    ``k_range`` drives the fixed-flat and orbit checks; the coloring oracle
    always covers k = 0..max(k_range) + 1."""
    start = time.perf_counter()
    ks = tuple(k_range)
    oracle_ks = tuple(range(max(ks) + 2))
    small_extra = [g for g in extra_graphs if g.n <= REGION_MAX_N]
    graphs = bundled_corpus() + list(small_extra)
    groups = GroupCache(limits)
    pairs = quotient_pairs(graphs)
    steps = [
        lambda: check_roundtrip(graphs),
        lambda: check_formula_oracle(graphs, oracle_ks, limits),
        lambda: check_whitney_sum(graphs, limits),
        lambda: check_quotient_on_flat(pairs, ks, "derived", limits),
        lambda: check_literal_rule_refuted(ks, limits),
        lambda: check_fixed_coloring_predicates(pairs, ks[:3], limits),
        lambda: check_group_structure([g for g in graphs if g.n <= 3], groups),
        lambda: check_unlabeled_formulas(graphs, groups, limits),
        lambda: check_burnside_colorings(graphs, groups, ks, BURNSIDE_MAX_N, limits),
        lambda: check_fixtures(limits),
        lambda: check_region_counts(graphs, REGION_MAX_N, limits),
        lambda: check_regions_meeting_flat(pairs + automorphism_pairs(graphs, groups), REGION_MAX_N, limits),
        lambda: check_region_fixedness(graphs, groups),
        lambda: check_region_orbits(graphs, groups, REGION_MAX_N, limits),
        lambda: check_integrality(graphs, groups, oracle_ks, limits),
    ]
    report = SelfcheckReport()
    for step in steps:
        result = step()
        report.results.append(result)
        if progress:
            progress(result)
    report.seconds = time.perf_counter() - start
    return report
