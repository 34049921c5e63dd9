"""Exact univariate polynomials in k with rational coefficients."""
from __future__ import annotations

import functools
from fractions import Fraction


class ExactPolynomial:
    """Coefficients are stored constant term first, trailing zeros stripped."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def k(cls):
        return cls((0, 1))

    @property
    def degree(self):
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPolynomial.constant(other)
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return ExactPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactPolynomial(c * other for c in self.coefficients)
        other = _coerce(other)
        out = [Fraction(0)] * max(len(self.coefficients) + len(other.coefficients) - 1, 0)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return ExactPolynomial(c / Fraction(scalar) for c in self.coefficients)

    def __call__(self, t):
        return evaluate(self, t)

    def to_falling_factorial(self):
        """Coefficients a_i with self == sum a_i (k)_i."""
        out = [Fraction(0)] * len(self.coefficients)
        for j, c in enumerate(self.coefficients):
            for i in range(j + 1):
                out[i] += c * stirling2(j, i)
        return out

    @classmethod
    def from_falling_factorial(cls, coefficients):
        total = cls()
        for i, c in enumerate(coefficients):
            if c:
                total = total + falling_factorial(i) * Fraction(c)
        return total

    def to_json(self):
        return [f"{c.numerator}/{c.denominator}" for c in self.coefficients]

    @classmethod
    def from_json(cls, data):
        return cls(Fraction(s) for s in data)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            mag = abs(c)
            coef = "" if mag == 1 and d else str(mag)
            var = "" if d == 0 else ("k" if d == 1 else f"k^{d}")
            body = f"{coef}*{var}" if coef and var else coef + var
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for s, body in terms[1:]:
            text += f" {s} {body}"
        return text

    def __repr__(self):
        return f"ExactPolynomial({self})"


def _coerce(value):
    if isinstance(value, ExactPolynomial):
        return value
    return ExactPolynomial.constant(value)


def evaluate(poly: ExactPolynomial, t) -> Fraction:
    """Horner evaluation at an exact rational."""
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(poly.coefficients):
        acc = acc * t + c
    return acc


@functools.lru_cache(maxsize=None)
def falling_factorial(i) -> ExactPolynomial:
    if i < 0:
        raise ValueError("falling factorial index must be nonnegative")
    if i == 0:
        return ExactPolynomial.constant(1)
    return falling_factorial(i - 1) * ExactPolynomial((-(i - 1), 1))


@functools.lru_cache(maxsize=None)
def stirling2(n, k) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
