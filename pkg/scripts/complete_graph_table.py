"""Labeled and unlabeled counts for small signed complete graphs.

Usage:
    python scripts/complete_graph_table.py [--max-n N]

Families, on vertices 1..n:
  pos    all positive links (ordinary K_n)
  neg    all negative links
  full   both signs on every pair
  full+h full plus a half-edge at every vertex (the whole BC_n arrangement)
"""
import argparse
import itertools
import time

from signedchrom.core import SignedGraph, automorphism_group, half, link
from signedchrom.chromatic import chromatic_polynomial
from signedchrom.unlabeled import (acyclic_count, unlabeled_acyclic_count,
                                   unlabeled_chromatic_via_quotients)


def family(name, n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    edges = []
    if name in ("pos", "full", "full+h"):
        edges += [link(i, j, 1) for i, j in pairs]
    if name in ("neg", "full", "full+h"):
        edges += [link(i, j, -1) for i, j in pairs]
    if name == "full+h":
        edges += [half(i, 1) for i in range(1, n + 1)]
    return SignedGraph.build(n, edges)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    print(f"{'family':7s} {'n':>2s} {'|Aut|':>6s} {'acyc':>6s} {'u-acyc':>6s}  chi ; unlabeled chi")
    for name in ("pos", "neg", "full", "full+h"):
        for n in range(1, args.max_n + 1):
            t = time.perf_counter()
            g = family(name, n)
            group = automorphism_group(g)
            chi = chromatic_polynomial(g)
            chi_hat = unlabeled_chromatic_via_quotients(g, group)
            row = (f"{name:7s} {n:2d} {len(group):6d} {acyclic_count(g):6d} "
                   f"{unlabeled_acyclic_count(g, group):6d}  {chi} ; {chi_hat}")
            print(row + f"   ({time.perf_counter() - t:.2f}s)")


if __name__ == "__main__":
    main()
