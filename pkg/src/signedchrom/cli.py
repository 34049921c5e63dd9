"""Command-line front end.

Exit codes: 0 success, 1 domain or validation error, 2 capacity or budget
error, 3 selfcheck failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .chromatic import chromatic_polynomial, whitney_numbers
from .config import Limits, RunConfig
from .core import automorphism_group
from .errors import SignedChromError, ValidationError
from .lattice import enumerate_flats, p_sigma
from .quotient import quotient
from .selfcheck import run_selfcheck
from .textio import format_graph, format_permutation, parse_document
from .unlabeled import (acyclic_count, unlabeled_acyclic_count, unlabeled_chromatic_via_flats,
                        unlabeled_chromatic_via_quotients)

COMMANDS = ("chromatic", "unlabeled-chromatic", "automorphisms", "quotient", "acyclic",
            "unlabeled-acyclic", "flats", "summary", "selfcheck")


def parse_k_range(text):
    """``0..3`` or ``0,1,2,3``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            ks = tuple(range(int(lo), int(hi) + 1))
        else:
            ks = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k-range {text!r}") from None
    if not ks or min(ks) < 0:
        raise argparse.ArgumentTypeError("k-range must be nonempty and nonnegative")
    return ks


def build_parser():
    p = argparse.ArgumentParser(prog="signedchrom", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("inputs", nargs="*", help="graph files ('-' for stdin)")
    p.add_argument("--format", dest="output", choices=("json", "text"), default="json")
    p.add_argument("--k-range", type=parse_k_range, default=(0, 1, 2, 3))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--sign-rule", choices=("derived", "literal"), default="derived")
    p.add_argument("--via", choices=("quotients", "flats"), default="quotients",
                   help="formula for unlabeled-chromatic")
    p.add_argument("--all", action="store_true", help="flats: list all of L(BC_n)")
    return p


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _graph_report(cfg, args, graph, perms):
    lim = cfg.limits
    cmd = cfg.command
    if cmd == "chromatic":
        poly = chromatic_polynomial(graph, lim.n_max)
        out = {"labeled_chromatic": poly.to_json()}
        if not graph.has_forbidding_edge():
            out["whitney"] = whitney_numbers(graph, lim.n_max)
        return out, f"chi(k) = {poly}"
    if cmd == "unlabeled-chromatic":
        group = automorphism_group(graph, lim.n_max)
        fn = unlabeled_chromatic_via_flats if args.via == "flats" else unlabeled_chromatic_via_quotients
        poly = fn(graph, group, lim.n_max)
        return ({"unlabeled_chromatic": poly.to_json(), "aut_group_order": len(group)},
                f"unlabeled chi(k) = {poly}")
    if cmd == "automorphisms":
        group = automorphism_group(graph, lim.n_max)
        lines = [format_permutation(b) for b in group]
        return ({"aut_group_order": len(group), "automorphisms": lines},
                "\n".join([f"# order {len(group)}"] + lines))
    if cmd == "quotient":
        if not perms:
            raise ValidationError("quotient needs a 'perm' line in the input")
        beta = perms[0]
        res = quotient(graph, beta, cfg.sign_rule)
        text = format_graph(res.graph)
        out = {"sign_rule": cfg.sign_rule, "perm": format_permutation(beta), "graph": text,
               "labeled_chromatic": chromatic_polynomial(res.graph, lim.n_max).to_json()}
        out.update(res.to_json())
        return out, text.rstrip("\n")
    if cmd == "acyclic":
        value = acyclic_count(graph, lim.n_max)
        return {"acyclic": value}, str(value)
    if cmd == "unlabeled-acyclic":
        group = automorphism_group(graph, lim.n_max)
        value = unlabeled_acyclic_count(graph, group, lim.n_max)
        return {"unlabeled_acyclic": value, "aut_group_order": len(group)}, str(value)
    if cmd == "flats":
        flats = enumerate_flats(graph.n, lim.n_max) if args.all else p_sigma(graph, lim.n_max)
        out = {"n": graph.n, "flats": [f.to_json() for f in flats]}
        if not args.all:
            out["whitney"] = whitney_numbers(graph, lim.n_max)
        return out, "\n".join(json.dumps(f.to_json()) for f in flats)
    if cmd == "summary":
        group = automorphism_group(graph, lim.n_max)
        chi = chromatic_polynomial(graph, lim.n_max)
        chi_hat = unlabeled_chromatic_via_quotients(graph, group, lim.n_max)
        out = {
            "labeled_chromatic": chi.to_json(),
            "unlabeled_chromatic": chi_hat.to_json(),
            "acyclic": acyclic_count(graph, lim.n_max),
            "unlabeled_acyclic": unlabeled_acyclic_count(graph, group, lim.n_max),
            "aut_group_order": len(group),
        }
        text = "\n".join([f"chi(k) = {chi}", f"unlabeled chi(k) = {chi_hat}",
                          f"acyclic = {out['acyclic']}",
                          f"unlabeled acyclic = {out['unlabeled_acyclic']}",
                          f"|Aut| = {out['aut_group_order']}"])
        return out, text
    raise ValueError(cmd)


def _emit(cfg, payload, text, stream=None):
    stream = stream or sys.stdout
    if cfg.output == "json":
        stream.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stream.write(text + "\n")


def run(cfg: RunConfig, args=None) -> int:
    args = args or argparse.Namespace(via="quotients", all=False)
    try:
        documents = [(path, *parse_document(_read(path))) for path in cfg.inputs]
        if cfg.command == "selfcheck":
            return _selfcheck(cfg, [g for _, g, _ in documents])
        if not documents:
            raise ValidationError(f"'{cfg.command}' needs an input graph")
        for path, graph, perms in documents:
            payload, text = _graph_report(cfg, args, graph, perms)
            if len(documents) > 1:
                payload = {"input": path, **payload}
                text = f"== {path}\n{text}"
            _emit(cfg, payload, text)
        return 0
    except SignedChromError as exc:
        _emit(cfg, {"error": {"code": exc.code, "message": str(exc)}},
              f"error [{exc.code}]: {exc}", sys.stdout if cfg.output == "json" else sys.stderr)
        return exc.exit_code
    except OSError as exc:
        _emit(cfg, {"error": {"code": "io", "message": str(exc)}}, f"error [io]: {exc}",
              sys.stdout if cfg.output == "json" else sys.stderr)
        return 1


def _selfcheck(cfg, graphs):
    def progress(result):
        if cfg.output == "text":
            print(result.line(), flush=True)

    report = run_selfcheck(graphs, cfg.k_range, cfg.limits, progress)
    failure = report.first_failure()
    if cfg.output == "json":
        payload = report.to_json()
        if failure:
            payload["first_counterexample"] = {"check": failure.name, **failure.counterexample}
        _emit(cfg, payload, "")
    else:
        print(f"{'PASS' if report.passed else 'FAIL'} in {report.seconds:.1f}s")
    return 0 if report.passed else 3


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        limits = Limits.from_env()
        if args.n_max is not None:
            limits = replace(limits, n_max=args.n_max)
        if args.budget is not None:
            limits = replace(limits, budget=args.budget)
    except (ValueError, ValidationError) as exc:
        print(f"error [validation]: {exc}", file=sys.stderr)
        return 1
    cfg = RunConfig(command=args.command, inputs=tuple(args.inputs), k_range=args.k_range,
                    limits=limits, output=args.output, sign_rule=args.sign_rule)
    return run(cfg, args)


if __name__ == "__main__":
    sys.exit(main())
