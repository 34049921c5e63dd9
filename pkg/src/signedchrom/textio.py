"""Line-oriented text format for signed graphs and signed permutations.

::

    # comments and blank lines are ignored
    n 4
    link 1 2 +
    loop 3 -
    half 2 +
    free
    perm 1 -3 -2 -4

``perm`` lists b(1)..b(n), negated where b(i) is switched.
"""
from __future__ import annotations

from .core import FREE, HALF, LINK, LOOP, Edge, SignedGraph, SignedPermutation
from .errors import ParseError, ValidationError

_SIGNS = {"+": 1, "-": -1}
_ARITY = {LINK: 2, LOOP: 1, HALF: 1}


def _int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_document(text):
    """Return ``(graph, perms)``."""
    n = None
    edges = []
    perms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        if n is None:
            if head != "n":
                raise ParseError("first directive must be 'n <int>'", lineno)
            if len(args) != 1:
                raise ParseError("'n' takes exactly one argument", lineno)
            n = _int(args[0], lineno)
            if n < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
            continue
        if head == "n":
            raise ParseError("duplicate 'n' directive", lineno)
        try:
            if head == FREE:
                if args:
                    raise ParseError("'free' takes no arguments (free loops carry no sign)", lineno)
                edges.append(Edge(FREE, (), None, len(edges) + 1))
            elif head in _ARITY:
                arity = _ARITY[head]
                if len(args) != arity + 1:
                    raise ParseError(f"'{head}' takes {arity} endpoint(s) and a sign", lineno)
                if args[-1] not in _SIGNS:
                    raise ParseError(f"sign must be '+' or '-', got {args[-1]!r}", lineno)
                ends = tuple(_int(a, lineno) for a in args[:-1])
                for v in ends:
                    if not 1 <= v <= n:
                        raise ValidationError(f"line {lineno}: endpoint {v} outside 1..{n}")
                edges.append(Edge(head, ends, _SIGNS[args[-1]], len(edges) + 1))
            elif head == "perm":
                if len(args) != n:
                    raise ParseError(f"'perm' needs {n} entries, got {len(args)}", lineno)
                perms.append(SignedPermutation.from_signed_images(_int(a, lineno) for a in args))
            else:
                raise ParseError(f"unknown directive {head!r}", lineno)
        except ValidationError as exc:
            if str(exc).startswith("line "):
                raise
            raise ValidationError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ParseError("missing 'n' directive")
    return SignedGraph(n, tuple(edges)), perms


def parse_graph(text) -> SignedGraph:
    return parse_document(text)[0]


def parse_permutation(text) -> SignedPermutation:
    """A single ``perm`` line (no ``n`` directive needed)."""
    line = text.split("#", 1)[0].split()
    if not line or line[0] != "perm":
        raise ParseError("expected 'perm a_1 ... a_n'")
    return SignedPermutation.from_signed_images(_int(a, 1) for a in line[1:])


def format_edge(e: Edge):
    if e.kind == FREE:
        return FREE
    ends = " ".join(map(str, e.ends))
    return f"{e.kind} {ends} {'+' if e.sign == 1 else '-'}"


def format_permutation(beta: SignedPermutation):
    return "perm " + " ".join(map(str, beta.signed_images()))


def format_graph(graph: SignedGraph, perms=()):
    lines = [f"n {graph.n}"]
    lines += [format_edge(e) for e in graph.edges]
    lines += [format_permutation(p) for p in perms]
    return "\n".join(lines) + "\n"
