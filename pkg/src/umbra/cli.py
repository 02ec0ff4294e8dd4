"""Command-line interface.

Exit codes: 0 success / all corollaries match, 1 verified mismatch,
2 parse error, 3 range or degree error, 4 pole at the requested lambda.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .errors import DegreeOverflow, ParseError, PoleAtLambda, RangeError
from .expansion import (
    COROLLARY_MIN_DEGREE,
    expand_theorem1,
    reconstruct,
    specialize_poly,
    verify_corollary,
)
from .families import FamilyId, apostol_euler_polys, family_numbers, resolve_lambda, sheffer_pair
from .parser import degree_bound, lower, parse
from .scalars import as_scalar, scalar_to_json
from .sheffer import orthogonality_matrix, sheffer_sequence

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_RANGE, EXIT_POLE = 0, 1, 2, 3, 4

VERIFY_FAMILIES = ["monomial", "bernoulli", "euler", "frobenius-euler", "bessel"]
NUMBER_FAMILIES = ["apostol-euler", "bernoulli", "euler", "frobenius-euler"]
PAIR_FAMILIES = ["monomial", "apostol-euler", "bernoulli", "euler", "frobenius-euler"]

_LATEX_NAMES = {
    FamilyId.MONOMIAL: "x^{%d}",
    FamilyId.BERNOULLI: "B_{%d}(x)",
    FamilyId.EULER: "E_{%d}(x)",
    FamilyId.FROBENIUS_EULER: r"F_{%d}(x|-\lambda)",
    FamilyId.BESSEL: "y_{%d}(x)",
    FamilyId.APOSTOL_EULER: r"E_{%d}(x|\lambda)",
}
_TEXT_NAMES = {
    FamilyId.MONOMIAL: "x^%d",
    FamilyId.BERNOULLI: "B_%d(x)",
    FamilyId.EULER: "E_%d(x)",
    FamilyId.FROBENIUS_EULER: "F_%d(x|-λ)",
    FamilyId.BESSEL: "y_%d(x)",
    FamilyId.APOSTOL_EULER: "E_%d(x|λ)",
}


@dataclass(frozen=True)
class CliConfig:
    command: str
    degree: Optional[int]
    lam: Optional[Fraction]
    format: str = "text"
    poly: Optional[str] = None
    family: Optional[str] = None

    @property
    def lambda_label(self):
        return "symbolic" if self.lam is None else str(self.lam)

    @property
    def lambda_json(self):
        return "symbolic" if self.lam is None else _rat(self.lam)


def max_degree() -> int:
    return int(os.environ.get("UMBRA_MAX_DEGREE", "64"))


def _rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _lambda_arg(text):
    if text == "symbolic":
        return None
    if not re.fullmatch(r"-?\d+(/\d+)?", text):
        raise argparse.ArgumentTypeError(f"expected p/q or 'symbolic', got {text!r}")
    return Fraction(text)


def _nat(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("degree must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", type=_nat)
    common.add_argument("--lambda", dest="lam", type=_lambda_arg, default=None,
                        metavar="p/q|symbolic")
    common.add_argument("--format", choices=["text", "json", "latex"], default="text")
    common.add_argument("--out", metavar="PATH")

    parser = argparse.ArgumentParser(
        prog="umbra",
        description="Exact expansions in the Apostol-Euler basis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("expand", parents=[common], help="expand a polynomial in E_k(x|lambda)")
    p.add_argument("--poly", required=True)
    p = sub.add_parser("verify", parents=[common], help="check a printed corollary")
    p.add_argument("--family", required=True, choices=VERIFY_FAMILIES)
    p = sub.add_parser("numbers", parents=[common], help="print a number table")
    p.add_argument("--family", required=True, choices=NUMBER_FAMILIES + ["monomial", "bessel"])
    sub.add_parser("basis", parents=[common], help="print E_0..E_n(x|lambda)")
    p = sub.add_parser("sheffer", parents=[common], help="Sheffer sequence of a named pair")
    p.add_argument("--family", required=True, choices=PAIR_FAMILIES)
    return parser


def _fmt(value, style):
    return as_scalar(value).format(style)


def _table(headers, rows):
    widths = [max(len(str(r[i])) for r in [headers] + rows) for i in range(len(headers))]
    lines = []
    for r in [headers, ["-" * w for w in widths]] + rows:
        cells = [str(c).ljust(w) for c, w in zip(r, widths)]
        lines.append("  ".join(cells).rstrip())
    return lines


def _poly_json(p):
    return [scalar_to_json(c) for c in p.coeffs]


def _check_degree(n):
    if n > max_degree():
        raise DegreeOverflow(f"degree {n} exceeds UMBRA_MAX_DEGREE={max_degree()}")


def cmd_expand(cfg: CliConfig):
    expr = parse(cfg.poly)
    _check_degree(degree_bound(expr))
    n = cfg.degree
    if n is not None:
        _check_degree(n)
    p = specialize_poly(lower(expr, cfg.lam), cfg.lam)
    if n is None:
        n = max(p.degree, 0)
    coeffs = expand_theorem1(p, n, cfg.lam)
    check = reconstruct(coeffs) == p
    style = cfg.format
    if style == "json":
        payload = {
            "command": "expand",
            "poly": cfg.poly,
            "degree": n,
            "lambda": cfg.lambda_json,
            "coefficients": [
                {"k": k, "value": scalar_to_json(c)} for k, c in enumerate(coeffs.coeffs)
            ],
            "check": check,
        }
        return _json(payload), EXIT_OK
    if style == "latex":
        terms = [
            rf"\left({_fmt(c, 'latex')}\right)E_{{{k}}}(x|\lambda)"
            for k, c in enumerate(coeffs.coeffs)
            if c != 0
        ]
        rhs = " + ".join(terms) or "0"
        lines = [
            r"\begin{align*}",
            rf"{p.format('latex')} &= {rhs}",
            r"\end{align*}",
            f"% reconstruction check: {str(check).lower()}",
        ]
        return lines, EXIT_OK
    lines = [
        f"p(x) = {p}",
        f"basis: E_k(x|λ), n = {n}, λ = {cfg.lambda_label}",
    ]
    lines += _table(["k", "c_k"], [[k, _fmt(c, "text")] for k, c in enumerate(coeffs.coeffs)])
    lines.append(f"check: {str(check).lower()}")
    return lines, EXIT_OK


def cmd_verify(cfg: CliConfig):
    family = FamilyId(cfg.family)
    if cfg.degree is None:
        raise RangeError("verify needs --degree")
    _check_degree(cfg.degree)
    low = COROLLARY_MIN_DEGREE[family]
    if cfg.degree < low:
        raise RangeError(f"the {family.value} corollary is stated for n >= {low}")
    reports = [verify_corollary(family, n, cfg.lam) for n in range(low, cfg.degree + 1)]
    ok = all(r.all_match for r in reports)
    code = EXIT_OK if ok else EXIT_MISMATCH
    style = cfg.format
    if style == "json":
        payload = {
            "command": "verify",
            "family": family.value,
            "lambda": cfg.lambda_json,
            "reports": [
                {
                    "n": r.degree,
                    "verdict": r.verdict,
                    "per_k": [
                        {
                            "k": row.k,
                            "theorem": scalar_to_json(row.theorem_value),
                            "printed": scalar_to_json(row.printed_value),
                            "corrected": None
                            if row.corrected_value is None
                            else scalar_to_json(row.corrected_value),
                            "match": row.match,
                        }
                        for row in r.per_k
                    ],
                }
                for r in reports
            ],
            "all_match": ok,
        }
        return _json(payload), code
    lines = []
    if style == "latex":
        for r in reports:
            cols = "r" + "l" * (4 if r.has_correction else 3)
            head = r"$k$ & theorem & printed" + (" & corrected" if r.has_correction else "")
            lines += [
                rf"% {_LATEX_NAMES[family] % r.degree}: {r.verdict}",
                rf"\begin{{tabular}}{{{cols}}}",
                head + r" & match \\",
                r"\hline",
            ]
            for row in r.per_k:
                cells = [str(row.k), f"${_fmt(row.theorem_value, 'latex')}$",
                         f"${_fmt(row.printed_value, 'latex')}$"]
                if r.has_correction:
                    cells.append(f"${_fmt(row.corrected_value, 'latex')}$")
                cells.append("yes" if row.match else "no")
                lines.append(" & ".join(cells) + r" \\")
            lines.append(r"\end{tabular}")
        lines.append(f"% overall: {'AllMatch' if ok else 'mismatch'}")
        return lines, code
    for r in reports:
        lines.append(f"{_TEXT_NAMES[family] % r.degree}, λ = {cfg.lambda_label}: {r.verdict}")
        headers = ["k", "theorem", "printed"] + (["corrected"] if r.has_correction else []) + ["match"]
        rows = []
        for row in r.per_k:
            cells = [row.k, _fmt(row.theorem_value, "text"), _fmt(row.printed_value, "text")]
            if r.has_correction:
                cells.append(_fmt(row.corrected_value, "text"))
            cells.append("yes" if row.match else "NO")
            rows.append(cells)
        lines += _table(headers, rows)
        lines.append("")
    lines.append(f"overall: {'AllMatch' if ok else 'mismatch'}")
    return lines, code


def cmd_tables(cfg: CliConfig):
    n = 0 if cfg.degree is None else cfg.degree
    _check_degree(n)
    style = cfg.format
    if cfg.command == "numbers":
        family = FamilyId(cfg.family)
        if cfg.family not in NUMBER_FAMILIES:
            raise RangeError(f"{cfg.family} has no number sequence")
        table = family_numbers(family, n, cfg.lam)
        if style == "json":
            return _json({
                "command": "numbers",
                "family": family.value,
                "lambda": cfg.lambda_json,
                "values": [{"n": k, "value": scalar_to_json(v)} for k, v in enumerate(table.values)],
            }), EXIT_OK
        if style == "latex":
            return [f"{k} & ${_fmt(v, 'latex')}$ \\\\" for k, v in enumerate(table.values)], EXIT_OK
        return _table(["n", "value"], [[k, _fmt(v, "text")] for k, v in enumerate(table.values)]), EXIT_OK

    if cfg.command == "basis":
        polys = apostol_euler_polys(n, cfg.lam)
        label = "E_k(x|λ)"
    else:
        family = FamilyId(cfg.family)
        pair = sheffer_pair(family, n, cfg.lam)
        polys = sheffer_sequence(pair, n)
        label = f"S_k for the {family.value} pair"
        matrix = orthogonality_matrix(pair, polys)
        orthogonal = all(
            matrix[k][m] == (factorial(m) if k == m else 0)
            for k in range(n + 1)
            for m in range(n + 1)
        )
    if style == "json":
        payload = {"command": cfg.command, "lambda": cfg.lambda_json}
        if cfg.command == "sheffer":
            payload["family"] = cfg.family
            payload["orthogonal"] = orthogonal
        payload["polynomials"] = [{"k": k, "coeffs": _poly_json(p)} for k, p in enumerate(polys)]
        return _json(payload), EXIT_OK
    if style == "latex":
        lines = [f"{k} & ${p.format('latex')}$ \\\\" for k, p in enumerate(polys)]
    else:
        lines = [f"{label}, λ = {cfg.lambda_label}"]
        lines += _table(["k", "polynomial"], [[k, p.format("text")] for k, p in enumerate(polys)])
    if cfg.command == "sheffer" and style != "json":
        prefix = "% " if style == "latex" else ""
        lines.append(f"{prefix}orthogonal: {str(orthogonal).lower()}")
    return lines, EXIT_OK


def _json(payload):
    return [json.dumps(payload, ensure_ascii=False, indent=2)]


def run(cfg: CliConfig):
    """Dispatch a config; returns (output lines, exit code)."""
    if cfg.lam is not None:
        resolve_lambda(cfg.lam)
    if cfg.command == "expand":
        return cmd_expand(cfg)
    if cfg.command == "verify":
        return cmd_verify(cfg)
    return cmd_tables(cfg)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = CliConfig(
        command=args.command,
        degree=args.degree,
        lam=args.lam,
        format=args.format,
        poly=getattr(args, "poly", None),
        family=getattr(args, "family", None),
    )
    try:
        lines, code = run(cfg)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DegreeOverflow, RangeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except PoleAtLambda as exc:
        print(f"error: PoleAtLambda: {exc}", file=sys.stderr)
        return EXIT_POLE
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.buffer.write(text.encode("utf-8"))
        sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
