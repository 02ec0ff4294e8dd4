"""Truncated formal power series in t, stored in divided-power form.

A :class:`TruncatedSeries` with coefficients ``a_0..a_N`` represents
``sum a_k t^k / k!``.  In this normalization the product is a binomial
convolution and the pairing with ``x^n`` is a plain read-off of ``a_n``.
Coefficients may be any exact scalar (``Fraction`` or ``LambdaRational``).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import CompositionOrderError, NotADeltaSeries, NotInvertible

__all__ = [
    "INFINITE_ORDER",
    "TruncatedSeries",
    "constant_series",
    "monomial_series",
    "exp_series",
    "series_order",
    "series_linear",
    "series_mul",
    "series_invert",
    "series_compose",
    "series_comp_inverse",
]


class _InfiniteOrder:
    """Order of the zero series: compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE_ORDER"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("INFINITE_ORDER")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


INFINITE_ORDER = _InfiniteOrder()


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) if isinstance(c, int) else c for c in coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        self.coeffs = coeffs

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(str(c) for c in self.coeffs)}])"

    def truncate(self, cap):
        if cap > self.cap:
            raise ValueError(f"cannot extend a series of cap {self.cap} to {cap}")
        return TruncatedSeries(self.coeffs[: cap + 1])

    def ordinary_coeffs(self):
        """Coefficients of plain powers t^n, i.e. a_n / n!."""
        return tuple(c / factorial(n) for n, c in enumerate(self.coeffs))

    @classmethod
    def from_ordinary(cls, coeffs):
        return cls(c * factorial(n) for n, c in enumerate(coeffs))

    def __add__(self, other):
        return series_linear(self, other, 1, 1)

    def __sub__(self, other):
        return series_linear(self, other, 1, -1)

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(c * other for c in self.coeffs)

    def __rmul__(self, scalar):
        return TruncatedSeries(scalar * c for c in self.coeffs)

    def __truediv__(self, scalar):
        return TruncatedSeries(c / scalar for c in self.coeffs)

    def __pow__(self, k):
        result = constant_series(1, self.cap)
        for _ in range(k):
            result = result * self
        return result


def constant_series(c, cap: int) -> TruncatedSeries:
    return TruncatedSeries([c] + [0] * cap)


def monomial_series(k: int, cap: int, c=1) -> TruncatedSeries:
    """``c * t^k`` at the given cap (divided-power coefficient ``c * k!``)."""
    coeffs = [0] * (cap + 1)
    if k <= cap:
        coeffs[k] = c * factorial(k)
    return TruncatedSeries(coeffs)


def exp_series(c, cap: int) -> TruncatedSeries:
    """``e^{ct}``: divided-power coefficients ``c^k``."""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    coeffs = [Fraction(1)]
    for _ in range(cap):
        coeffs.append(coeffs[-1] * c)
    return TruncatedSeries(coeffs)


def series_order(f: TruncatedSeries):
    for k, c in enumerate(f.coeffs):
        if c != 0:
            return k
    return INFINITE_ORDER


def series_linear(f, g, c, d) -> TruncatedSeries:
    """``c*f + d*g`` truncated to the smaller cap."""
    n = min(f.cap, g.cap)
    return TruncatedSeries(c * f.coeffs[k] + d * g.coeffs[k] for k in range(n + 1))


def series_mul(f, g) -> TruncatedSeries:
    n = min(f.cap, g.cap)
    a, b = f.coeffs, g.coeffs
    out = []
    for m in range(n + 1):
        acc = 0
        for k in range(m + 1):
            if a[k] != 0 and b[m - k] != 0:
                acc = acc + comb(m, k) * a[k] * b[m - k]
        out.append(acc)
    return TruncatedSeries(out)


def series_invert(f) -> TruncatedSeries:
    a = f.coeffs
    if a[0] == 0:
        raise NotInvertible(f"series of order {series_order(f)} has no multiplicative inverse")
    inv0 = 1 / a[0]
    out = [inv0]
    for m in range(1, f.cap + 1):
        acc = 0
        for k in range(1, m + 1):
            if a[k] != 0:
                acc = acc + comb(m, k) * a[k] * out[m - k]
        out.append(-inv0 * acc)
    return TruncatedSeries(out)


def _divided_powers(g, count):
    """``g^j / j!`` for j = 0..count-1 at the cap of g."""
    powers = [constant_series(1, g.cap)]
    for j in range(1, count):
        powers.append(series_mul(powers[-1], g) / j)
    return powers


def series_compose(f, g) -> TruncatedSeries:
    """``f(g(t))``; g must have zero constant term."""
    if g.coeffs[0] != 0:
        raise CompositionOrderError("inner series must have order >= 1")
    n = min(f.cap, g.cap)
    g = g.truncate(n)
    out = [0] * (n + 1)
    for j, gj in enumerate(_divided_powers(g, n + 1)):
        if f.coeffs[j] == 0:
            continue
        for m in range(j, n + 1):
            if gj.coeffs[m] != 0:
                out[m] = out[m] + f.coeffs[j] * gj.coeffs[m]
    return TruncatedSeries(out)


def series_comp_inverse(f) -> TruncatedSeries:
    """Compositional inverse of a delta series.

    Solves ``fbar(f(t)) = t`` one degree at a time: the t^m coefficient of
    ``f^m/m!`` is ``a_1^m``, so each new ``b_m`` is a single division.
    """
    if series_order(f) != 1:
        raise NotADeltaSeries(f"series of order {series_order(f)} is not a delta series")
    n = f.cap
    powers = _divided_powers(f, n + 1)
    a1 = f.coeffs[1]
    b = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        acc = 1 if m == 1 else 0
        for j in range(1, m):
            if b[j] != 0:
                acc = acc - b[j] * powers[j].coeffs[m]
        b[m] = acc / a1**m
    return TruncatedSeries(b)
