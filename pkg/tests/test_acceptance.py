"""Acceptance criteria, one test each, exact tolerance throughout.

Every test prints a single ``[PASS]``/``[FAIL]`` line (visible even under
output capture) so a run of this file reads as a checklist.
"""

import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb, factorial

import pytest

from umbra.errors import PoleAtLambda
from umbra.expansion import expand_theorem1, reconstruct, verify_corollary
from umbra.families import (
    FamilyId,
    apostol_euler_numbers,
    apostol_euler_polys,
    bernoulli,
    bessel_polys,
    euler,
    family_numbers,
    frobenius_euler,
    numbers_by_inversion,
    sheffer_pair,
)
from umbra.scalars import LAMBDA, scalar_eval, scalar_from_json
from umbra.series import (
    TruncatedSeries,
    constant_series,
    exp_series,
    series_comp_inverse,
    series_compose,
    series_invert,
    series_mul,
)
from umbra.sheffer import orthogonality_matrix, sheffer_sequence
from umbra.umbral import XPolynomial

L = LAMBDA
X = XPolynomial.x()
HALF = Fraction(1, 2)


@pytest.fixture
def criterion(request, capsys):
    @contextmanager
    def run(name, budget=None):
        start = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - start
            if budget is not None:
                assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
        except BaseException as exc:
            with capsys.disabled():
                reason = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
                print(f"\n[FAIL] {name}: {reason}")
            raise
        with capsys.disabled():
            print(f"\n[PASS] {name} ({time.perf_counter() - start:.2f}s)")

    return run


def test_orthogonality(criterion):
    with criterion("orthogonality, Apostol-Euler pair, n,k <= 12", budget=5):
        pair = sheffer_pair(FamilyId.APOSTOL_EULER, 12)
        matrix = orthogonality_matrix(pair, sheffer_sequence(pair, 12))
        assert matrix == [
            [factorial(n) if k == n else 0 for n in range(13)] for k in range(13)
        ]


def test_reconstruction(criterion):
    with criterion("expansion reconstruction, generator set and 50 random", budget=10):
        polys = [X**m for m in range(11)]
        polys += bernoulli(10)[1] + euler(10)[1] + frobenius_euler(10)[1] + bessel_polys(10)
        rng = random.Random(12)
        for _ in range(50):
            degree = rng.randint(0, 10)
            polys.append(
                XPolynomial(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree + 1))
            )
        for p in polys:
            assert reconstruct(expand_theorem1(p, 10)) == p


@pytest.mark.parametrize(
    "family, low",
    [
        (FamilyId.MONOMIAL, 0),
        (FamilyId.BERNOULLI, 2),
        (FamilyId.EULER, 0),
        (FamilyId.FROBENIUS_EULER, 1),
    ],
    ids=lambda v: v.value if isinstance(v, FamilyId) else str(v),
)
def test_corollary_identities(criterion, family, low):
    with criterion(f"corollary identity, {family.value}, n = {low}..12", budget=10):
        bad = {}
        for n in range(low, 13):
            report = verify_corollary(family, n)
            if not report.all_match:
                bad[n] = report.verdict
        assert not bad, f"verdicts {bad}"


def test_bessel_corollary(criterion):
    with criterion("Bessel corollary, three-way report for n = 1..8"):
        for n in range(1, 9):
            report = verify_corollary(FamilyId.BESSEL, n)
            assert report.has_correction
            for row in report.per_k:
                assert row.theorem_value == row.corrected_value
                at_zero = {
                    scalar_eval(v, 0)
                    for v in (row.theorem_value, row.printed_value, row.corrected_value)
                }
                assert len(at_zero) == 1
        r0, r1, _ = verify_corollary(FamilyId.BESSEL, 2).per_k
        assert r0.theorem_value == HALF + Fraction(7, 2) * L
        assert r1.theorem_value == Fraction(3, 2) + Fraction(9, 2) * L


def test_family_cross_oracles(criterion):
    with criterion("recurrence tables equal series-inversion tables up to 16", budget=5):
        for family in (FamilyId.APOSTOL_EULER, FamilyId.BERNOULLI, FamilyId.EULER,
                       FamilyId.FROBENIUS_EULER):
            assert family_numbers(family, 16) == numbers_by_inversion(family, 16)
        assert bernoulli(4)[0].values == (1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30))


def _umbral_shift(numbers, n):
    # (N + 1)^n with N^k read as N_k
    return sum(comb(n, k) * numbers[k] for k in range(n + 1))


def test_boundary_identities(criterion):
    with criterion("boundary identities for n <= 12, symbolic lambda"):
        ae = apostol_euler_numbers(12)
        b = bernoulli(12)[0]
        e = euler(12)[0]
        f, f_polys = frobenius_euler(12)
        for n in range(13):
            delta = 1 if n == 0 else 0
            assert L * _umbral_shift(ae, n) + ae[n] == 2 * delta
            assert _umbral_shift(b, n) - b[n] == (1 if n == 1 else 0)
            assert _umbral_shift(e, n) + e[n] == 2 * delta
            assert L * f[n] + f_polys[n](1) == (1 + L) * delta


def test_specializations(criterion):
    with criterion("E_n(x|1) = E_n(x), E_n(x|0) = 2x^n, pole at lambda = -1"):
        symbolic = apostol_euler_polys(10)
        classical = euler(10)[1]
        for n in range(11):
            assert symbolic[n].map_coeffs(lambda c: scalar_eval(c, 1)) == classical[n]
            assert symbolic[n].map_coeffs(lambda c: scalar_eval(c, 0)) == 2 * X**n
            assert apostol_euler_polys(10, lam=1)[n] == classical[n]
            assert apostol_euler_polys(10, lam=0)[n] == 2 * X**n
        with pytest.raises(PoleAtLambda):
            scalar_eval(apostol_euler_numbers(0)[0], -1)
        with pytest.raises(PoleAtLambda):
            apostol_euler_polys(3, lam=-1)


def _random_series(rng, cap, order):
    coeffs = [Fraction(0)] * order + [
        Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(cap + 1 - order)
    ]
    while coeffs[order] == 0:
        coeffs[order] = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
    return TruncatedSeries(coeffs)


def test_series_engine(criterion):
    with criterion("series inverse and compositional inverse round trips at cap 12"):
        cap = 12
        rng = random.Random(99)
        one = constant_series(1, cap)
        t = TruncatedSeries([0, 1] + [0] * (cap - 1))
        for _ in range(50):
            f = _random_series(rng, cap, 0)
            assert series_mul(f, series_invert(f)) == one
        for _ in range(50):
            f = _random_series(rng, cap, 1)
            inv = series_comp_inverse(f)
            assert series_compose(f, inv) == t
            assert series_compose(inv, f) == t
        log1p = series_comp_inverse(exp_series(1, cap) - one)
        assert list(log1p.coeffs) == [0] + [
            (-1) ** (k - 1) * factorial(k - 1) for k in range(1, cap + 1)
        ]


def _cli(argv):
    cmd = [sys.executable, "-m", "umbra", *argv]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert (first.returncode, first.stdout) == (second.returncode, second.stdout), "not deterministic"
    return first.returncode, first.stdout.decode("utf-8")


def _values(items, key="value"):
    return [scalar_from_json(item[key]) for item in items]


def _expand_square(out):
    data = json.loads(out)
    return _values(data["coefficients"]) == [L / 2, L, (1 + L) / 2] and data["check"]


def _expand_one(out):
    return _values(json.loads(out)["coefficients"]) == [(1 + L) / 2]


def _verify_euler(out):
    reports = json.loads(out)["reports"]
    return [r["n"] for r in reports] == list(range(9)) and all(
        r["verdict"] == "AllMatch" for r in reports
    )


def _verify_bessel(out):
    last = json.loads(out)["reports"][-1]
    row0, row1 = last["per_k"][0], last["per_k"][1]
    return (
        last["verdict"] == "MismatchAt({0, 1})"
        and scalar_from_json(row0["theorem"]) == HALF + Fraction(7, 2) * L
        and scalar_from_json(row0["printed"]) == HALF + Fraction(11, 4) * L
        and scalar_from_json(row1["theorem"]) == Fraction(3, 2) + Fraction(9, 2) * L
        and scalar_from_json(row1["printed"]) == Fraction(3, 2) + 3 * L
        and all(row["corrected"] is not None for row in last["per_k"])
    )


def _numbers(expected):
    return lambda out: _values(json.loads(out)["values"]) == expected


def _basis_zero(out):
    polys = json.loads(out)["polynomials"]
    return [[scalar_from_json(c) for c in p["coeffs"]] for p in polys] == [[2], [0, 2]]


CLI_CASES = [
    ("expand x^2", ["expand", "--poly", "x^2", "--degree", "2", "--lambda", "symbolic"], 0, _expand_square),
    ("expand 1", ["expand", "--poly", "1", "--degree", "0"], 0, _expand_one),
    ("expand x^3 at degree 2", ["expand", "--poly", "x^3", "--degree", "2"], 3, None),
    ("verify euler 8", ["verify", "--family", "euler", "--degree", "8"], 0, _verify_euler),
    ("verify bessel 2", ["verify", "--family", "bessel", "--degree", "2"], 1, _verify_bessel),
    ("verify bernoulli 1", ["verify", "--family", "bernoulli", "--degree", "1"], 3, None),
    ("numbers bernoulli 3", ["numbers", "--family", "bernoulli", "--degree", "3"], 0,
     _numbers([1, Fraction(-1, 2), Fraction(1, 6), 0])),
    ("basis 1 at lambda 0", ["basis", "--degree", "1", "--lambda", "0"], 0, _basis_zero),
    ("numbers apostol-euler 1", ["numbers", "--family", "apostol-euler", "--degree", "1"], 0,
     _numbers([2 / (1 + L), -2 * L / (1 + L) ** 2])),
]


@pytest.mark.parametrize("name, argv, code, check", CLI_CASES, ids=[c[0] for c in CLI_CASES])
def test_cli_contract(criterion, name, argv, code, check):
    with criterion(f"CLI: {name}"):
        status, _ = _cli(argv)
        assert status == code, f"exit {status}, expected {code}"
        if check is not None:
            status, out = _cli(argv + ["--format", "json"])
            assert check(out), "output differs from the documented values"
        status, text = _cli(argv)
        assert text == "" or text.endswith("\n")
