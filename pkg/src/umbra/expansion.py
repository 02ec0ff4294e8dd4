"""Change of basis into the Apostol-Euler polynomials, and corollary checks.

Every ``p`` of degree at most n is ``sum_k c_k E_k(x|lambda)`` with

    c_k = <(1 + lambda e^t) t^k | p(x)> / (2 k!)

because ``E_n(x|lambda)`` is Sheffer for ``((1 + lambda e^t)/2, t)``.  These
coefficients are treated as ground truth; the closed forms printed for the
individual families are compared against them entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .errors import DegreeOverflow, RangeError
from .families import (
    FamilyId,
    apostol_euler_polys,
    bernoulli,
    euler,
    family_polynomial,
    frobenius_euler,
    resolve_lambda,
)
from .scalars import specialize
from .series import constant_series, exp_series, monomial_series, series_linear, series_mul
from .umbral import XPolynomial, functional_apply

__all__ = [
    "ExpansionCoeffs",
    "CoefficientCheck",
    "ExpansionReport",
    "COROLLARY_MIN_DEGREE",
    "expand_theorem1",
    "reconstruct",
    "corollary_coeffs",
    "corrected_coeffs",
    "verify_corollary",
    "specialize_poly",
]

# smallest n each printed corollary is stated for
COROLLARY_MIN_DEGREE = {
    FamilyId.MONOMIAL: 0,
    FamilyId.BERNOULLI: 2,
    FamilyId.EULER: 0,
    FamilyId.FROBENIUS_EULER: 1,
    FamilyId.BESSEL: 1,
}


@dataclass(frozen=True)
class ExpansionCoeffs:
    coeffs: tuple
    lam: Optional[Fraction] = None

    @property
    def lambda_mode(self):
        return "symbolic" if self.lam is None else self.lam

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class CoefficientCheck:
    k: int
    theorem_value: object
    printed_value: object
    corrected_value: object = None

    @property
    def match(self):
        return self.theorem_value == self.printed_value


@dataclass(frozen=True)
class ExpansionReport:
    family: FamilyId
    degree: int
    per_k: tuple
    lam: Optional[Fraction] = None

    @property
    def mismatches(self) -> frozenset:
        return frozenset(row.k for row in self.per_k if not row.match)

    @property
    def all_match(self) -> bool:
        return not self.mismatches

    @property
    def verdict(self) -> str:
        if self.all_match:
            return "AllMatch"
        return "MismatchAt({%s})" % ", ".join(str(k) for k in sorted(self.mismatches))

    @property
    def has_correction(self):
        return any(row.corrected_value is not None for row in self.per_k)


def specialize_poly(p: XPolynomial, lam) -> XPolynomial:
    """Substitute a rational lambda into every coefficient (no-op for lam=None)."""
    if lam is None:
        return p
    return p.map_coeffs(lambda c: specialize(c, lam))


def expand_theorem1(p: XPolynomial, n: int, lam=None) -> ExpansionCoeffs:
    """Coefficients of p in the basis E_0(x|lambda)..E_n(x|lambda)."""
    if p.degree > n:
        raise DegreeOverflow(f"polynomial of degree {p.degree} does not fit in degree {n}")
    lam_value = resolve_lambda(lam)
    lam = None if lam is None else Fraction(lam)
    p = specialize_poly(p, lam)
    op = series_linear(constant_series(1, n), exp_series(1, n), 1, lam_value)
    coeffs = []
    for k in range(n + 1):
        pairing = functional_apply(series_mul(op, monomial_series(k, n)), p)
        coeffs.append(pairing / (2 * factorial(k)))
    return ExpansionCoeffs(tuple(coeffs), lam)


def reconstruct(c: ExpansionCoeffs) -> XPolynomial:
    """``sum_k c_k E_k(x|lambda)``."""
    if not c.coeffs:
        return XPolynomial()
    basis = apostol_euler_polys(c.degree, c.lam)
    out = XPolynomial()
    for ck, ek in zip(c.coeffs, basis):
        if ck != 0:
            out = out + ek * ck
    return out


def _check_range(family, n):
    if family not in COROLLARY_MIN_DEGREE:
        raise RangeError(f"no printed corollary for {family.value}")
    low = COROLLARY_MIN_DEGREE[family]
    if n < low:
        raise RangeError(f"the {family.value} corollary is stated for n >= {low}, got {n}")


def corollary_coeffs(family: FamilyId, n: int, lam=None) -> ExpansionCoeffs:
    """The coefficient sequence exactly as the closed form prints it."""
    _check_range(family, n)
    L = resolve_lambda(lam)
    half = Fraction(1, 2)
    if family is FamilyId.MONOMIAL:
        # x^n = E_n/2 + (lambda/2) sum_k C(n,k) E_k
        coeffs = [L / 2 * comb(n, k) + (half if k == n else 0) for k in range(n + 1)]
    elif family is FamilyId.BERNOULLI:
        # (lambda-1)n/4 E_{n-1} + (1+lambda)/2 sum_{k != n-1} C(n,k) B_{n-k} E_k
        b = bernoulli(n)[0]
        coeffs = []
        for k in range(n + 1):
            if k == n - 1:
                coeffs.append((L - 1) * n / 4)
            else:
                coeffs.append((1 + L) / 2 * comb(n, k) * b[n - k])
    elif family is FamilyId.EULER:
        e = euler(n)[0]
        coeffs = [(1 + L) / 2 * comb(n, k) * e[n - k] for k in range(n + 1)]
    elif family is FamilyId.FROBENIUS_EULER:
        f = frobenius_euler(n, lam)[0]
        coeffs = [(1 - L * L) / 2 * comb(n, k) * f[n - k] for k in range(n)]
        coeffs.append((1 + L) / 2)
    else:
        coeffs = []
        for k in range(n + 1):
            head = Fraction(factorial(k), 2 ** (k + 1)) * comb(n, k) * comb(n + k, k)
            tail = sum(
                Fraction(factorial(k), 2 ** (l + 1)) * comb(l, k) * comb(n, l) * comb(n + l, l)
                for l in range(k, n + 1)
            )
            coeffs.append(head + L * tail)
    return ExpansionCoeffs(tuple(_tidy(c) for c in coeffs), _lam_key(lam))


def corrected_coeffs(family: FamilyId, n: int, lam=None) -> Optional[ExpansionCoeffs]:
    """Closed forms re-derived from the intermediate step ``c_k = C(n,k)/2 <1 + lambda e^t | P_{n-k}>``.

    Only families whose printed statement disagrees with that step get one;
    others return None.
    """
    _check_range(family, n)
    L = resolve_lambda(lam)
    if family is FamilyId.BESSEL:
        coeffs = []
        for k in range(n + 1):
            head = Fraction(factorial(n + k), 2 ** (k + 1) * factorial(n - k) * factorial(k))
            tail = sum(
                Fraction(factorial(n + l), factorial(n - l) * 2**l * factorial(k) * factorial(l - k))
                for l in range(k, n + 1)
            )
            coeffs.append(head + L / 2 * tail)
    elif family is FamilyId.EULER:
        # E_m(1) = 2 delta(m,0) - E_m turns E_{n-k} + lambda E_{n-k}(1) into this
        e = euler(n)[0]
        coeffs = [
            comb(n, k) * ((1 - L) * e[n - k] + (2 * L if k == n else 0)) / 2
            for k in range(n + 1)
        ]
    else:
        return None
    return ExpansionCoeffs(tuple(_tidy(c) for c in coeffs), _lam_key(lam))


def verify_corollary(family: FamilyId, n: int, lam=None) -> ExpansionReport:
    printed = corollary_coeffs(family, n, lam)
    corrected = corrected_coeffs(family, n, lam)
    theorem = expand_theorem1(family_polynomial(family, n, lam), n, lam)
    rows = []
    for k in range(n + 1):
        rows.append(
            CoefficientCheck(
                k,
                theorem[k],
                printed[k],
                None if corrected is None else corrected[k],
            )
        )
    return ExpansionReport(family, n, tuple(rows), _lam_key(lam))


def _lam_key(lam):
    return None if lam is None else Fraction(lam)


def _tidy(c):
    return Fraction(c) if isinstance(c, int) else c

