"""Serialization of kernel values: JSON (with parsers for round-trips),
CSV tables, and LaTeX.

JSON schemas
------------
Rationals serialize as strings "p/q" (decimal digits, optional leading
minus, "/q" omitted when the denominator is 1), so no consumer can lose
precision.

  QRat   {"num": ["p/q", ...], "den": ["p/q", ...]}   index = q-power
  XPoly  {"n": int, "coeffs": [QRat, ...]}            ascending x-power,
                                                      n = degree (-1: zero)

CSV tables use the header ``n,value``.  LaTeX emits one displayed
equation per row; q-polynomials are rendered in ascending powers, while
x-polynomials follow the conventional descending layout.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .qarith import QPoly, QRat
from .appell import XPoly


def fraction_to_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def qpoly_to_json(p: QPoly) -> list[str]:
    return [fraction_to_str(c) for c in p.coeffs]


def qpoly_from_json(data) -> QPoly:
    return QPoly([Fraction(s) for s in data])


def qrat_to_json(r: QRat) -> dict:
    return {"num": qpoly_to_json(r.num), "den": qpoly_to_json(r.den)}


def qrat_from_json(data) -> QRat:
    return QRat(qpoly_from_json(data["num"]), qpoly_from_json(data["den"]))


def xpoly_to_json(p: XPoly) -> dict:
    return {"n": p.degree, "coeffs": [qrat_to_json(c) for c in p.coeffs]}


def xpoly_from_json(data) -> XPoly:
    return XPoly([qrat_from_json(c) for c in data["coeffs"]])


def dumps(obj) -> str:
    """Canonical JSON emission: 2-space indent, insertion key order,
    trailing newline.  Deterministic for the dict shapes built here."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# CSV


def csv_table(rows) -> str:
    """Rows of (n, value-string) under the standard header."""
    lines = ["n,value"]
    for n, value in rows:
        lines.append(f"{n},{value}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# LaTeX


def fraction_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def qpoly_latex(p: QPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = fraction_latex(mag)
        else:
            var = "q" if k == 1 else f"q^{{{k}}}"
            body = var if mag == 1 else f"{fraction_latex(mag)} {var}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def qrat_latex(r: QRat) -> str:
    if r.den.is_one():
        return qpoly_latex(r.num)
    return f"\\frac{{{qpoly_latex(r.num)}}}{{{qpoly_latex(r.den)}}}"


def _coefficient_sign(c: QRat) -> tuple[int, QRat]:
    nonzero = [x for x in c.num.coeffs if x]
    if nonzero and all(x < 0 for x in nonzero):
        return -1, -c
    return 1, c


def xpoly_latex(p: XPoly) -> str:
    """Descending x-powers with explicit q-polynomial coefficients."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c.is_zero():
            continue
        sign, mag = _coefficient_sign(c)
        var = "" if k == 0 else ("x" if k == 1 else f"x^{{{k}}}")
        if var and mag.is_one():
            body = var
        elif var:
            coeff = qrat_latex(mag)
            if not mag.den.is_one() or sum(1 for x in mag.num.coeffs if x) > 1:
                coeff = f"\\left({coeff}\\right)"
            body = f"{coeff} {var}"
        else:
            body = qrat_latex(mag)
        if not parts:
            parts.append(f"-{body}" if sign < 0 else body)
        else:
            parts.append(f" - {body}" if sign < 0 else f" + {body}")
    return "".join(parts)


def latex_equations(rows) -> str:
    """One displayed equation per (lhs, rhs-string) row."""
    return "".join(f"\\[ {lhs} = {rhs} \\]\n" for lhs, rhs in rows)
