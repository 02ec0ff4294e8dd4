"""Exact scalars: the rationals and the rational-function field Q(lambda).

Rationals are plain :class:`fractions.Fraction`.  Elements of Q(lambda) are
:class:`LambdaRational` values kept in canonical form (coprime numerator and
denominator, monic denominator), so equality is a field-by-field comparison.

Both scalar kinds mix freely with ``int`` and ``Fraction`` under the usual
operators, which lets the series and polynomial code run unchanged over Q
(lambda specialized to a rational) or over Q(lambda) (lambda symbolic).
"""

from __future__ import annotations

import operator
from fractions import Fraction
from math import gcd

from .errors import DivisionByZero, PoleAtLambda, UndefinedGcd

__all__ = [
    "LambdaPolynomial",
    "LambdaRational",
    "LAMBDA",
    "as_scalar",
    "lambda_poly_gcd",
    "rational_arith",
    "scalar_arith",
    "scalar_eval",
    "specialize",
    "format_rational",
    "scalar_to_json",
    "scalar_from_json",
]

_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul, "div": operator.truediv}


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class LambdaPolynomial:
    """Dense polynomial in lambda with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(Fraction(c) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs):
        # coeffs already stripped Fractions
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LambdaPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(("LambdaPolynomial", self.coeffs))

    def __repr__(self):
        return f"LambdaPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return _format_poly(self.coeffs, "text")

    def __neg__(self):
        return LambdaPolynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPolynomial._raw(_strip(out))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LambdaPolynomial._raw(())
        # convolve over Z with a common denominator; Fraction ops are the bottleneck
        ia, da = _scaled_ints(a)
        ib, db = _scaled_ints(b)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        den = da * db
        return LambdaPolynomial._raw(tuple(Fraction(v, den) for v in out))

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return LambdaPolynomial._raw(())
        return LambdaPolynomial._raw(tuple(x * c for x in self.coeffs))

    def __divmod__(self, other):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return LambdaPolynomial._raw(()), self
        inv_lead = 1 / other.lead
        quo = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv_lead
            if c:
                quo[i - dq] = c
                for j, d in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * d
        return LambdaPolynomial._raw(_strip(quo)), LambdaPolynomial._raw(_strip(rem[:dq]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def __call__(self, value):
        """Horner evaluation at any scalar (Fraction, int or LambdaRational)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc


def _scaled_ints(coeffs):
    den = 1
    for c in coeffs:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _primitive_ints(coeffs):
    """Integer primitive part of a nonzero rational coefficient list."""
    return _primitive(_scaled_ints(coeffs)[0])


def _primitive(ints):
    content = 0
    for v in ints:
        content = gcd(content, v)
        if content == 1:
            break
    if ints[-1] < 0:
        content = -content
    return [v // content for v in ints]


def _prem(a, b):
    # pseudo-remainder over Z; a, b lowest degree first, b nonzero
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for j, v in enumerate(b):
            r[shift + j] -= c * v
        while r and r[-1] == 0:
            r.pop()
    return r


def lambda_poly_gcd(p: LambdaPolynomial, q: LambdaPolynomial) -> LambdaPolynomial:
    """Monic greatest common divisor over Q[lambda].

    Euclid's algorithm run on integer primitive parts (primitive PRS), which
    keeps coefficient growth in check; the result is made monic over Q.
    """
    if p.is_zero() and q.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return _ONE
    a, b = _primitive_ints(p.coeffs), _primitive_ints(q.coeffs)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return _ONE
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else r)
    return LambdaPolynomial._raw(tuple(Fraction(v, a[-1]) for v in a))


_ONE = LambdaPolynomial._raw((Fraction(1),))
_ZERO = LambdaPolynomial._raw(())


class LambdaRational:
    """Element of Q(lambda) in canonical form.

    The constructor reduces ``num/den``; a zero denominator raises
    :class:`DivisionByZero` immediately.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = _ONE if den is None else _as_poly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator in Q(lambda)")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def lam(cls):
        """The transcendental lambda itself."""
        return cls._raw(LambdaPolynomial._raw((Fraction(0), Fraction(1))), _ONE)

    def is_zero(self):
        return self.num.is_zero()

    def is_rational(self):
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self):
        """The value as a Fraction; ValueError if it depends on lambda."""
        if not self.is_rational():
            raise ValueError(f"{self} depends on lambda")
        return self.num.lead / self.den.lead if self.num.coeffs else Fraction(0)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, LambdaRational):
            return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_fraction())
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"LambdaRational({self})"

    def __str__(self):
        return self.format("text")

    def format(self, style="text"):
        """Render as ``text`` (uses λ), ``expr`` (parser syntax) or ``latex``."""
        num = _format_poly(self.num.coeffs, style)
        if self.den.degree == 0:
            return num
        den = _format_poly(self.den.coeffs, style)
        if style == "latex":
            return rf"\frac{{{num}}}{{{den}}}"
        if len(self.num.coeffs) - self.num.coeffs.count(0) > 1:
            num = f"({num})"
        return f"{num}/({den})"

    def __neg__(self):
        return LambdaRational._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return _make(self.num + other.num, self.den)
        if self.den.degree == 0 and other.den.degree == 0:
            return _make(self.num * other.den + other.num * self.den, self.den * other.den)
        g = lambda_poly_gcd(self.den, other.den)
        if g.degree == 0:
            num = self.num * other.den + other.num * self.den
            return LambdaRational._raw(*_normalize(num, self.den * other.den))
        b, d = self.den // g, other.den // g
        num = self.num * d + other.num * b
        # any common factor of num and b*d*g divides g
        return _make(num, b * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LambdaRational._raw(_ZERO, _ONE)
            return LambdaRational._raw(self.num.scale(other), self.den)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _cross_mul(self.num, self.den, other.num, other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZero("division by the zero element of Q(lambda)")
        return _cross_mul(self.num, self.den, other.den, other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        result = LambdaRational._raw(_ONE, _ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


LAMBDA = LambdaRational.lam()


def _as_poly(x):
    if isinstance(x, LambdaPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return LambdaPolynomial((x,))
    return LambdaPolynomial(x)


def _coerce(x):
    if isinstance(x, LambdaRational):
        return x
    if isinstance(x, (int, Fraction)):
        return LambdaRational._raw(LambdaPolynomial._raw(_strip((Fraction(x),))), _ONE)
    return NotImplemented


def _reduce(num, den):
    if num.is_zero():
        return _ZERO, _ONE
    if den.degree > 0 and num.degree >= 0:
        g = lambda_poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
    lead = den.lead
    if lead != 1:
        num, den = num.scale(1 / lead), den.scale(1 / lead)
    return num, den


def _make(num, den):
    return LambdaRational._raw(*_reduce(num, den))


def _normalize(num, den):
    # num/den already coprime: only make den monic
    if num.is_zero():
        return _ZERO, _ONE
    lead = den.lead
    if lead != 1:
        num, den = num.scale(1 / lead), den.scale(1 / lead)
    return num, den


def _cross_mul(a, b, c, d):
    """(a/b)(c/d) with a/b and c/d reduced: cancel gcd(a, d) and gcd(c, b) only."""
    if a.is_zero() or c.is_zero():
        return LambdaRational._raw(_ZERO, _ONE)
    g1 = lambda_poly_gcd(a, d) if a.degree > 0 and d.degree > 0 else _ONE
    g2 = lambda_poly_gcd(c, b) if c.degree > 0 and b.degree > 0 else _ONE
    if g1.degree > 0:
        a, d = a // g1, d // g1
    if g2.degree > 0:
        c, b = c // g2, b // g2
    return LambdaRational._raw(*_normalize(a * c, b * d))


def as_scalar(x):
    """Lift int/Fraction/LambdaRational into Q(lambda)."""
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"not a scalar: {x!r}")
    return out


def rational_arith(a, b, op: str) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    if op == "div" and b == 0:
        raise DivisionByZero(f"{a} / 0")
    return _OPS[op](a, b)


def scalar_arith(a, b, op: str) -> LambdaRational:
    return _OPS[op](as_scalar(a), as_scalar(b))


def scalar_eval(a, lambda0) -> Fraction:
    """Specialize lambda to the rational ``lambda0``."""
    a = as_scalar(a)
    lambda0 = Fraction(lambda0)
    den = a.den(lambda0)
    if den == 0:
        raise PoleAtLambda(f"denominator of {a} vanishes at lambda = {lambda0}")
    return Fraction(a.num(lambda0)) / den


def specialize(value, lambda0):
    """scalar_eval that also passes plain rationals through."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return scalar_eval(value, lambda0)


def format_rational(c: Fraction, style="text") -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    if style == "latex":
        sign = "-" if c < 0 else ""
        return rf"{sign}\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


_SYMBOL = {"text": "λ", "expr": "lambda", "latex": r"\lambda"}


def _format_poly(coeffs, style, symbol=None):
    var = symbol or _SYMBOL[style]
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = format_rational(mag, style)
        else:
            power = var if k == 1 else (f"{var}^{{{k}}}" if style == "latex" else f"{var}^{k}")
            if mag == 1:
                body = power
            elif style == "expr":
                body = f"{format_rational(mag, style)}*{power}"
            elif style == "latex" or mag.denominator == 1:
                body = f"{format_rational(mag, style)}{power}"
            else:
                body = f"({format_rational(mag, style)}){power}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out



def scalar_to_json(value) -> dict:
    """``{"num": [...], "den": [...]}`` with "p/q" strings, lowest power of lambda first."""
    value = as_scalar(value)

    def enc(poly):
        return [f"{c.numerator}/{c.denominator}" for c in poly.coeffs] or ["0/1"]

    return {"num": enc(value.num), "den": enc(value.den)}


def scalar_from_json(obj) -> LambdaRational:
    return LambdaRational(
        LambdaPolynomial(Fraction(s) for s in obj["num"]),
        LambdaPolynomial(Fraction(s) for s in obj["den"]),
    )
