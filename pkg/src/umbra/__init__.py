"""Exact umbral calculus over Q(lambda): Sheffer sequences, the classical
Appell families, and expansions in the Apostol-Euler basis."""

from .errors import (
    CompositionOrderError,
    DegreeOverflow,
    DivisionByZero,
    ExponentError,
    InsufficientPrecision,
    NotADeltaSeries,
    NotInvertible,
    ParseError,
    PoleAtLambda,
    RangeError,
    UmbraError,
    UndefinedGcd,
    UnknownFamily,
)
from .expansion import (
    ExpansionCoeffs,
    ExpansionReport,
    corollary_coeffs,
    expand_theorem1,
    reconstruct,
    verify_corollary,
)
from .families import (
    FamilyId,
    NumberTable,
    apostol_euler_numbers,
    apostol_euler_polys,
    bernoulli,
    bessel_polys,
    euler,
    frobenius_euler,
)
from .parser import lower, parse, parse_poly
from .scalars import LAMBDA, LambdaPolynomial, LambdaRational, scalar_eval
from .series import INFINITE_ORDER, TruncatedSeries, exp_series
from .sheffer import ShefferPair, orthogonality_matrix, sheffer_sequence
from .umbral import XPolynomial, functional_apply, operator_apply, poly_eval

__version__ = "0.1.0"
