from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from umbra.scalars import LAMBDA, LambdaPolynomial, LambdaRational
from umbra.series import TruncatedSeries
from umbra.umbral import XPolynomial

settings.register_profile("default", deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_fractions = small_fractions.filter(lambda q: q != 0)


@st.composite
def lambda_polys(draw, max_degree=6):
    return LambdaPolynomial(draw(st.lists(small_fractions, max_size=max_degree + 1)))


@st.composite
def nonzero_lambda_polys(draw, max_degree=6):
    p = draw(lambda_polys(max_degree))
    if p.is_zero():
        p = LambdaPolynomial([draw(nonzero_fractions)])
    return p


@st.composite
def lambda_rationals(draw, max_degree=3):
    return LambdaRational(draw(lambda_polys(max_degree)), draw(nonzero_lambda_polys(max_degree)))


# mix plain rationals with a few genuinely lambda-dependent scalars
scalars = st.one_of(
    small_fractions,
    small_fractions.map(lambda q: q * LAMBDA),
    small_fractions.map(lambda q: q + LAMBDA * LAMBDA),
)


@st.composite
def series(draw, cap=12, order=None, elements=scalars):
    coeffs = draw(st.lists(elements, min_size=cap + 1, max_size=cap + 1))
    if order == 0 and coeffs[0] == 0:
        coeffs[0] = draw(nonzero_fractions)
    if order == 1:
        coeffs[0] = Fraction(0)
        if coeffs[1] == 0:
            coeffs[1] = draw(nonzero_fractions)
    return TruncatedSeries(coeffs)


@st.composite
def xpolys(draw, max_degree=10, elements=small_fractions):
    return XPolynomial(draw(st.lists(elements, max_size=max_degree + 1)))


@pytest.fixture
def lam():
    return LAMBDA
