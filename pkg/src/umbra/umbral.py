"""Polynomials in x and the two actions of a series on them.

A series ``f(t) = sum a_k t^k/k!`` acts on polynomials

* as a linear functional, ``<f | x^n> = a_n``;
* as an operator, with ``t`` acting as ``d/dx``.

The two are adjoint: ``<f g | p> = <f | g p>``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import InsufficientPrecision
from .scalars import LambdaRational, as_scalar

__all__ = [
    "XPolynomial",
    "functional_apply",
    "operator_apply",
    "poly_eval",
    "poly_derivative",
    "symbolic",
]


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(Fraction(c) if isinstance(c, int) else c for c in coeffs)


class XPolynomial:
    """Dense polynomial in x, index n holding the coefficient of x^n."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, n, c=1):
        return cls([0] * n + [c])

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, XPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"XPolynomial({self})"

    def __str__(self):
        return self.format("text")

    def format(self, style="text"):
        """Render with ``x`` as the variable.

        ``expr`` output re-parses through :mod:`umbra.parser` whenever every
        coefficient is a polynomial in lambda.
        """
        if self.is_zero():
            return "0"
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(_format_term(c, n, style))
        out = terms[0]
        for term in terms[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __neg__(self):
        return XPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return XPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, XPolynomial):
            if isinstance(other, (int, Fraction, LambdaRational)):
                return XPolynomial(c * other for c in self.coeffs)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                if v != 0:
                    out[i + j] = out[i + j] + u * v
        return XPolynomial(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = XPolynomial((1,))
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, y):
        return poly_eval(self, y)

    def map_coeffs(self, fn):
        return XPolynomial(fn(c) for c in self.coeffs)


def _lift(other):
    if isinstance(other, XPolynomial):
        return other
    if isinstance(other, (int, Fraction, LambdaRational)):
        return XPolynomial((other,))
    return NotImplemented


def _format_term(c, n, style):
    """One ``coeff * x^n`` term; a leading '-' is pulled out when possible."""
    if n == 0:
        power = ""
    elif n == 1:
        power = "x"
    else:
        power = f"x^{{{n}}}" if style == "latex" else f"x^{n}"
    c = as_scalar(c)
    single = c.den.degree == 0 and sum(1 for v in c.num.coeffs if v != 0) == 1
    neg = single and c.num.lead < 0
    body = (-c if neg else c).format(style)
    sign = "-" if neg else ""
    if not power:
        return sign + body
    if body == "1":
        return sign + power
    if style == "expr":
        return f"{sign}({body})*{power}" if not single else f"{sign}{body}*{power}"
    if not single:
        body = rf"\left({body}\right)" if style == "latex" else f"({body})"
    elif style == "text" and ("/" in body or "^" in body):
        body = f"({body})"
    return sign + body + power


def _check_cap(f, p):
    if f.cap < p.degree:
        raise InsufficientPrecision(
            f"series of cap {f.cap} cannot act on a polynomial of degree {p.degree}"
        )


def functional_apply(f, p: XPolynomial):
    """``<f | p> = sum_n p_n a_n``."""
    _check_cap(f, p)
    acc = Fraction(0)
    for n, c in enumerate(p.coeffs):
        if c != 0 and f.coeffs[n] != 0:
            acc = acc + c * f.coeffs[n]
    return acc


def operator_apply(f, p: XPolynomial) -> XPolynomial:
    """``sum_k (a_k/k!) p^(k)(x)``, so t acts as d/dx."""
    _check_cap(f, p)
    a = f.coeffs
    out = []
    for j in range(len(p.coeffs)):
        acc = Fraction(0)
        for k in range(len(p.coeffs) - j):
            if a[k] != 0 and p.coeffs[j + k] != 0:
                acc = acc + comb(j + k, k) * a[k] * p.coeffs[j + k]
        out.append(acc)
    return XPolynomial(out)


def poly_eval(p: XPolynomial, y):
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * y + c
    return acc


def poly_derivative(p: XPolynomial, k: int = 1) -> XPolynomial:
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    return XPolynomial(
        (factorial(n) // factorial(n - k)) * c for n, c in enumerate(p.coeffs) if n >= k
    )


def symbolic(p: XPolynomial) -> XPolynomial:
    """Lift every coefficient into Q(lambda)."""
    return p.map_coeffs(as_scalar)
