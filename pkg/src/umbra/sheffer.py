"""Sheffer sequences for a pair (g, f) and their orthogonality check.

``S_n ~ (g, f)`` is characterised by ``<g f^k | S_n> = n! delta(n, k)`` and
generated by ``e^{y fbar(t)} / g(fbar(t)) = sum S_k(y) t^k/k!`` with
``fbar`` the compositional inverse of ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InsufficientPrecision, NotADeltaSeries, NotInvertible
from .series import (
    TruncatedSeries,
    constant_series,
    series_comp_inverse,
    series_compose,
    series_invert,
    series_mul,
    series_order,
)
from .umbral import XPolynomial, functional_apply

__all__ = ["ShefferPair", "sheffer_sequence", "orthogonality_matrix"]


@dataclass(frozen=True)
class ShefferPair:
    g: TruncatedSeries
    f: TruncatedSeries

    def __post_init__(self):
        if series_order(self.g) != 0:
            raise NotInvertible("g must be an invertible series (order 0)")
        if series_order(self.f) != 1:
            raise NotADeltaSeries("f must be a delta series (order 1)")

    @property
    def cap(self):
        return min(self.g.cap, self.f.cap)


def sheffer_sequence(pair: ShefferPair, n: int) -> list[XPolynomial]:
    """S_0..S_n for the pair, read off the generating function.

    With ``M = 1/g(fbar)`` the coefficient of x^j in S_k is the t^k
    divided-power coefficient of ``M * fbar^j / j!``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if pair.cap < n:
        raise InsufficientPrecision(f"pair has cap {pair.cap}, need {n}")
    g, f = pair.g.truncate(n), pair.f.truncate(n)
    fbar = series_comp_inverse(f)
    m = series_invert(series_compose(g, fbar))
    columns = []
    power = constant_series(1, n)
    for j in range(n + 1):
        columns.append(series_mul(m, power).coeffs)
        power = series_mul(power, fbar) / (j + 1)
    return [XPolynomial(columns[j][k] for j in range(k + 1)) for k in range(n + 1)]


def orthogonality_matrix(pair: ShefferPair, seq) -> list[list]:
    """Entry ``[k][n] = <g f^k | S_n>``; diagonal ``n!`` for a Sheffer sequence."""
    size = len(seq)
    need = max((s.degree for s in seq), default=0)
    if pair.cap < need:
        raise InsufficientPrecision(f"pair has cap {pair.cap}, sequence has degree {need}")
    g, f = pair.g.truncate(need), pair.f.truncate(need)
    rows = []
    op = g
    for _ in range(size):
        rows.append([functional_apply(op, s) for s in seq])
        op = series_mul(op, f)
    return rows
