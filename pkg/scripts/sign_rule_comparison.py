"""Compare the two quotient sign rules against brute-force counts of the
colorings lying on the fixed flat.

Usage:
    python scripts/sign_rule_comparison.py [--k-max K] [--seed SEED]
"""
import argparse
import itertools
from collections import Counter

from signedchrom.chromatic import chromatic_polynomial, is_proper
from signedchrom.corpus import DEFAULT_SEED, square_diagonal, square_diagonal_perm, quotient_pairs
from signedchrom.lattice import beta_hat
from signedchrom.polynomial import evaluate
from signedchrom.quotient import quotient
from signedchrom.textio import format_graph, format_permutation


def on_flat(graph, flat, k):
    return sum(1 for x in itertools.product(range(-k, k + 1), repeat=graph.n)
               if flat.contains(x) and is_proper(graph, x))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k-max", type=int, default=3)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args()
    ks = range(args.k_max + 1)

    g, beta = square_diagonal(), square_diagonal_perm()
    print(format_graph(g, [beta]))
    flat = beta_hat(beta)
    print("fixed flat:", flat.to_json())
    print("colorings on flat, k=0..:", [on_flat(g, flat, k) for k in ks])
    for rule in ("derived", "literal"):
        q = quotient(g, beta, rule).graph
        poly = chromatic_polynomial(q)
        print(f"\n[{rule}] quotient:\n{format_graph(q).rstrip()}")
        print(f"  chi = {poly}; values {[int(evaluate(poly, k)) for k in ks]}")

    tally = Counter()
    first_bad = None
    pairs = quotient_pairs(seed=args.seed)
    for g, beta in pairs:
        flat = beta_hat(beta)
        truth = [on_flat(g, flat, k) for k in ks]
        for rule in ("derived", "literal"):
            poly = chromatic_polynomial(quotient(g, beta, rule).graph)
            ok = [evaluate(poly, k) for k in ks] == truth
            tally[rule, ok] += 1
            if rule == "literal" and not ok and first_bad is None:
                first_bad = (g, beta)
    print(f"\n{len(pairs)} pairs")
    for rule in ("derived", "literal"):
        print(f"  {rule:8s} correct {tally[rule, True]:5d}  wrong {tally[rule, False]:5d}")
    if first_bad:
        print("first literal-rule miss:", format_graph(first_bad[0]).replace("\n", "; "),
              format_permutation(first_bad[1]))


if __name__ == "__main__":
    main()
