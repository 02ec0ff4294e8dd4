"""The classical polynomial families and their number sequences.

Numbers come from the umbral recurrences, e.g. for Apostol-Euler

    lambda (E(lambda) + 1)^n + E_n(lambda) = 2 delta(n, 0)

and every family except Bessel is Appell (f = t), so its polynomials are the
binomial convolution ``P_n(x) = sum C(n,k) N_{n-k} x^k``.

``lam=None`` keeps lambda symbolic; a rational ``lam`` runs everything over Q.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import PoleAtLambda
from .scalars import LAMBDA
from .series import (
    TruncatedSeries,
    constant_series,
    exp_series,
    monomial_series,
    series_invert,
)
from .sheffer import ShefferPair
from .umbral import XPolynomial

__all__ = [
    "FamilyId",
    "NumberTable",
    "resolve_lambda",
    "apostol_euler_numbers",
    "apostol_euler_polys",
    "bernoulli",
    "euler",
    "frobenius_euler",
    "bessel_coefficient",
    "bessel_polys",
    "family_numbers",
    "family_polynomial",
    "sheffer_pair",
    "numbers_by_inversion",
]


class FamilyId(enum.Enum):
    MONOMIAL = "monomial"
    APOSTOL_EULER = "apostol-euler"
    BERNOULLI = "bernoulli"
    EULER = "euler"
    FROBENIUS_EULER = "frobenius-euler"
    BESSEL = "bessel"


@dataclass(frozen=True)
class NumberTable:
    family: FamilyId
    values: tuple

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


def resolve_lambda(lam=None):
    """The scalar standing for lambda: symbolic, or a rational other than -1."""
    if lam is None:
        return LAMBDA
    lam = Fraction(lam)
    if lam == -1:
        raise PoleAtLambda("lambda = -1 is excluded")
    return lam


def _check_n(n):
    if n < 0:
        raise ValueError("n must be nonnegative")


@lru_cache(maxsize=None)
def _apostol_euler_numbers(n, lam):
    lam = resolve_lambda(lam)
    one_plus = 1 + lam
    values = [2 / one_plus]
    factor = -lam / one_plus
    for m in range(1, n + 1):
        acc = 0
        for k in range(m):
            acc = acc + comb(m, k) * values[k]
        values.append(factor * acc)
    return tuple(values)


@lru_cache(maxsize=None)
def _bernoulli_numbers(n):
    values = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m + 1, k) * values[k] for k in range(m))
        values.append(-acc / (m + 1))
    return tuple(values)


@lru_cache(maxsize=None)
def _euler_numbers(n):
    values = [Fraction(1)]
    for m in range(1, n + 1):
        values.append(-sum(comb(m, k) * values[k] for k in range(m)) / 2)
    return tuple(values)


@lru_cache(maxsize=None)
def _frobenius_euler_numbers(n, lam):
    lam = resolve_lambda(lam)
    inv = 1 / (1 + lam)
    values = [Fraction(1)]
    for m in range(1, n + 1):
        acc = 0
        for k in range(m):
            acc = acc + comb(m, k) * values[k]
        values.append(-inv * acc)
    return tuple(values)


def _appell(numbers):
    return [
        XPolynomial(comb(m, k) * numbers[m - k] for k in range(m + 1))
        for m in range(len(numbers))
    ]


def apostol_euler_numbers(n: int, lam=None) -> NumberTable:
    _check_n(n)
    return NumberTable(FamilyId.APOSTOL_EULER, _apostol_euler_numbers(n, _key(lam)))


@lru_cache(maxsize=None)
def _apostol_euler_polys(n, lam):
    return tuple(_appell(_apostol_euler_numbers(n, lam)))


def apostol_euler_polys(n: int, lam=None) -> list[XPolynomial]:
    """E_0(x|lambda) .. E_n(x|lambda)."""
    _check_n(n)
    return list(_apostol_euler_polys(n, _key(lam)))


def bernoulli(n: int):
    _check_n(n)
    values = _bernoulli_numbers(n)
    return NumberTable(FamilyId.BERNOULLI, values), _appell(values)


def euler(n: int):
    """Euler numbers and polynomials from ``2/(e^t+1) e^{xt}``."""
    _check_n(n)
    values = _euler_numbers(n)
    return NumberTable(FamilyId.EULER, values), _appell(values)


def frobenius_euler(n: int, lam=None):
    """F_m(-lambda) and F_m(x|-lambda) from ``(1+lambda)/(e^t+lambda) e^{xt}``."""
    _check_n(n)
    values = _frobenius_euler_numbers(n, _key(lam))
    return NumberTable(FamilyId.FROBENIUS_EULER, values), _appell(values)


def bessel_coefficient(n: int, k: int) -> Fraction:
    return Fraction(factorial(n + k), factorial(n - k) * factorial(k) * 2**k)


def bessel_polys(n: int) -> list[XPolynomial]:
    _check_n(n)
    return [XPolynomial(bessel_coefficient(m, k) for k in range(m + 1)) for m in range(n + 1)]


def _key(lam):
    # lru_cache key: None or a Fraction, validated up front
    if lam is None:
        return None
    resolve_lambda(lam)
    return Fraction(lam)


def family_numbers(family: FamilyId, n: int, lam=None) -> NumberTable:
    if family is FamilyId.APOSTOL_EULER:
        return apostol_euler_numbers(n, lam)
    if family is FamilyId.BERNOULLI:
        return bernoulli(n)[0]
    if family is FamilyId.EULER:
        return euler(n)[0]
    if family is FamilyId.FROBENIUS_EULER:
        return frobenius_euler(n, lam)[0]
    raise ValueError(f"{family.value} has no number sequence")


def family_polynomial(family: FamilyId, m: int, lam=None) -> XPolynomial:
    """The m-th member of a family."""
    _check_n(m)
    if family is FamilyId.MONOMIAL:
        return XPolynomial.monomial(m)
    if family is FamilyId.BESSEL:
        return bessel_polys(m)[m]
    if family is FamilyId.APOSTOL_EULER:
        return apostol_euler_polys(m, lam)[m]
    if family is FamilyId.BERNOULLI:
        return bernoulli(m)[1][m]
    if family is FamilyId.EULER:
        return euler(m)[1][m]
    return frobenius_euler(m, lam)[1][m]


def sheffer_pair(family: FamilyId, cap: int, lam=None) -> ShefferPair:
    """The (g, t) pair whose Sheffer sequence is the family."""
    t = monomial_series(1, cap)
    one = constant_series(1, cap)
    e_t = exp_series(1, cap)
    if family is FamilyId.MONOMIAL:
        g = one
    elif family is FamilyId.APOSTOL_EULER:
        g = (one + resolve_lambda(lam) * e_t) / 2
    elif family is FamilyId.BERNOULLI:
        # (e^t - 1)/t with the removable singularity divided out
        g = TruncatedSeries(Fraction(1, k + 1) for k in range(cap + 1))
    elif family is FamilyId.EULER:
        g = (e_t + one) / 2
    elif family is FamilyId.FROBENIUS_EULER:
        lam = resolve_lambda(lam)
        g = (e_t + lam * one) / (1 + lam)
    else:
        raise ValueError(f"{family.value} is not given by an Appell pair")
    return ShefferPair(g, t)


def numbers_by_inversion(family: FamilyId, n: int, lam=None) -> NumberTable:
    """Number table read off ``1/g(t)``; independent of the recurrences."""
    return NumberTable(family, series_invert(sheffer_pair(family, n, lam).g).coeffs)
