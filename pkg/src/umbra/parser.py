"""Recursive-descent parser for the polynomial expression language.

    expr    := term (('+'|'-') term)* ;
    term    := factor ('*' factor)* ;
    factor  := '-' factor | atom ('^' nat)? ;
    atom    := nat ('/' nat)? | 'x' | 'lambda'
             | family '(' nat ('|' 'lambda')? ')' | '(' expr ')' ;
    family  := 'B' | 'E' | 'AE' | 'F' | 'y' ;

``E(n)`` is the classical Euler polynomial, ``E(n|lambda)`` and ``AE(n)`` the
Apostol-Euler one.  Literals are exact; there are no floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import ExponentError, ParseError, UnknownFamily
from .families import FamilyId, family_polynomial, resolve_lambda
from .umbral import XPolynomial

__all__ = [
    "Num",
    "Var",
    "Lam",
    "FamilyCall",
    "Neg",
    "Sum",
    "Difference",
    "Product",
    "Power",
    "PolyExpr",
    "parse",
    "lower",
    "parse_poly",
    "degree_bound",
]


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Lam:
    pass


@dataclass(frozen=True)
class FamilyCall:
    family: FamilyId
    index: int


@dataclass(frozen=True)
class Neg:
    operand: "PolyExpr"


@dataclass(frozen=True)
class Sum:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Difference:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Product:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Power:
    base: "PolyExpr"
    exponent: int


PolyExpr = Union[Num, Var, Lam, FamilyCall, Neg, Sum, Difference, Product, Power]

_FAMILIES = {
    "B": FamilyId.BERNOULLI,
    "E": FamilyId.EULER,
    "AE": FamilyId.APOSTOL_EULER,
    "F": FamilyId.FROBENIUS_EULER,
    "y": FamilyId.BESSEL,
}
_TAKES_LAMBDA = {"E", "AE", "F"}


class Token(NamedTuple):
    kind: str  # 'nat', 'name', a punctuation character, or 'end'
    text: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()|]))")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    data = text.encode("utf-8")
    # offsets are reported in bytes, so scan the byte string
    src = data.decode("latin-1")
    while True:
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            rest = src[pos:]
            stripped = len(rest) - len(rest.lstrip())
            if pos + stripped == len(src):
                tokens.append(Token("end", "", len(src)))
                return tokens
            bad = pos + stripped
            char = data[bad:].decode("utf-8", errors="replace")[0]
            raise ParseError(f"unexpected character {char!r}", bad,
                             {"number", "x", "lambda", "family", "(", "-"})
        nat, name, punct = m.groups()
        start = m.start(m.lastindex)
        if nat is not None:
            tokens.append(Token("nat", nat, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        else:
            tokens.append(Token(punct, punct, start))
        pos = m.end()


_ATOM_START = {"number", "x", "lambda", "B", "E", "AE", "F", "y", "("}


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, expected=None):
        if self.tok.kind != kind:
            self.fail(expected or {kind})
        return self.advance()

    def fail(self, expected, message=None):
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(message or f"unexpected {found}", tok.pos, expected)

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            self.fail({"+", "-", "*", "^", "end of input"})
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            right = self.term()
            node = Sum(node, right) if op == "+" else Difference(node, right)
        return node

    def term(self):
        node = self.factor()
        while self.tok.kind == "*":
            self.advance()
            node = Product(node, self.factor())
        return node

    def factor(self):
        if self.tok.kind == "-":
            self.advance()
            return Neg(self.factor())
        node = self.atom()
        if self.tok.kind == "^":
            self.advance()
            tok = self.tok
            if tok.kind != "nat":
                what = "negative" if tok.kind == "-" else "non-integer"
                raise ExponentError(f"{what} exponent", tok.pos, {"natural number"})
            self.advance()
            if self.tok.kind == "/":
                raise ExponentError("non-integer exponent", self.tok.pos, {"natural number"})
            node = Power(node, int(tok.text))
        return node

    def atom(self):
        tok = self.tok
        if tok.kind == "nat":
            self.advance()
            value = Fraction(int(tok.text))
            if self.tok.kind == "/":
                self.advance()
                den = self.expect("nat", {"number"})
                if int(den.text) == 0:
                    raise ParseError("zero denominator in literal", den.pos, {"nonzero number"})
                value = Fraction(int(tok.text), int(den.text))
            return Num(value)
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")", {")", "+", "-", "*", "^"})
            return node
        if tok.kind == "name":
            if tok.text == "x":
                self.advance()
                return Var()
            if tok.text == "lambda":
                self.advance()
                return Lam()
            if self.tokens[self.i + 1].kind == "(":
                if tok.text not in _FAMILIES:
                    raise UnknownFamily(f"unknown family {tok.text!r}", tok.pos, set(_FAMILIES))
                return self.family_call()
        self.fail(_ATOM_START)

    def family_call(self):
        name = self.advance().text
        self.expect("(")
        index = int(self.expect("nat", {"number"}).text)
        family = _FAMILIES[name]
        if self.tok.kind == "|":
            bar = self.advance()
            if name not in _TAKES_LAMBDA:
                raise ParseError(f"family {name} takes no lambda parameter", bar.pos, {")"})
            lam = self.tok
            if lam.kind != "name" or lam.text != "lambda":
                self.fail({"lambda"})
            self.advance()
            if name == "E":
                family = FamilyId.APOSTOL_EULER
        self.expect(")", {")", "|"})
        return FamilyCall(family, index)


def parse(text: str) -> PolyExpr:
    """Parse an expression into its syntax tree."""
    return _Parser(text).parse()


def lower(expr: PolyExpr, lam=None) -> XPolynomial:
    """Evaluate a syntax tree to an exact polynomial.

    With ``lam=None`` lambda stays symbolic; otherwise it is replaced by the
    given rational before any arithmetic happens.
    """
    lam_value = resolve_lambda(lam)
    return _lower(expr, lam_value, lam)


def _lower(e, lam_value, lam):
    if isinstance(e, Num):
        return XPolynomial.constant(e.value)
    if isinstance(e, Var):
        return XPolynomial.x()
    if isinstance(e, Lam):
        return XPolynomial.constant(lam_value)
    if isinstance(e, FamilyCall):
        return family_polynomial(e.family, e.index, lam)
    if isinstance(e, Neg):
        return -_lower(e.operand, lam_value, lam)
    if isinstance(e, Power):
        return _lower(e.base, lam_value, lam) ** e.exponent
    left = _lower(e.left, lam_value, lam)
    right = _lower(e.right, lam_value, lam)
    if isinstance(e, Sum):
        return left + right
    if isinstance(e, Difference):
        return left - right
    return left * right


def parse_poly(text: str, lam=None) -> XPolynomial:
    return lower(parse(text), lam)


def degree_bound(expr: PolyExpr) -> int:
    """Upper bound on the x-degree of ``lower(expr)``, computed without lowering."""
    if isinstance(expr, (Num, Lam)):
        return 0
    if isinstance(expr, Var):
        return 1
    if isinstance(expr, FamilyCall):
        return expr.index
    if isinstance(expr, Neg):
        return degree_bound(expr.operand)
    if isinstance(expr, Power):
        return degree_bound(expr.base) * expr.exponent
    left, right = degree_bound(expr.left), degree_bound(expr.right)
    return left + right if isinstance(expr, Product) else max(left, right)
