"""Deterministic text, LaTeX and JSON rendering of polynomials."""

from __future__ import annotations

import json
from fractions import Fraction

from .ring import KIND_A, Monomial, Polynomial, var_name

FORMATS = ("text", "json", "latex")


def _text_monomial(m: Monomial) -> str:
    return "*".join(var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in m)


def _latex_var(v) -> str:
    if v[0] == KIND_A:
        return f"a_{{{v[2]},{v[3]}}}"
    return ("x", "u")[v[0] - 1] + f"_{{{v[1]}}}"


def _latex_monomial(m: Monomial) -> str:
    return "".join(_latex_var(v) if e == 1 else f"{_latex_var(v)}^{{{e}}}" for v, e in m)


def _latex_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def _join(pieces) -> str:
    out = []
    for k, (negative, body) in enumerate(pieces):
        if k == 0:
            out.append("-" + body if negative else body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def render_text(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = _text_monomial(m)
        else:
            body = f"{mag}*{_text_monomial(m)}"
        pieces.append((c < 0, body))
    return _join(pieces)


def render_latex(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        mag = abs(c)
        if not m:
            body = _latex_coeff(mag)
        elif mag == 1:
            body = _latex_monomial(m)
        else:
            body = _latex_coeff(mag) + _latex_monomial(m)
        pieces.append((c < 0, body))
    return _join(pieces)


def polynomial_to_json(p: Polynomial) -> list:
    """JSON-ready list of ``{"coeff": "p/q", "monomial": {...}}`` terms."""
    return [
        {"coeff": str(c), "monomial": {var_name(v): e for v, e in m}}
        for m, c in p.sorted_terms()
    ]


def render_json(p: Polynomial) -> str:
    return json.dumps(polynomial_to_json(p))


def render_polynomial(p: Polynomial, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(p)
    if fmt == "latex":
        return render_latex(p)
    if fmt == "json":
        return render_json(p)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
