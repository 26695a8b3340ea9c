"""Parsers for polynomial expressions.

The text grammar::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | "a[" INT "," INT "]" | x1..x3 | u1..u3 | "(" expr ")"

Whitespace is ignored and juxtaposition is a syntax error.  The JSON
term list and the package's own LaTeX output can be read back as well.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .ring import Polynomial, RingConfig, avar, monomial, uvar, xvar


class ParseError(ValueError):
    """Malformed or out-of-range expression; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: Optional[int] = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<int>\d+)"
    r"|(?P<avar>a\s*\[\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\])"
    r"|(?P<xu>[xu])(?P<k>[123])(?![0-9A-Za-z_])"
    r"|(?P<op>[-+*^/()])"
    r")"
)

Token = Tuple[str, Union[int, tuple, str], int]


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int")), start))
        elif m.group("avar") is not None:
            tokens.append(("var", avar(int(m.group("i")), int(m.group("j"))), start))
        elif m.group("xu") is not None:
            k = int(m.group("k"))
            v = xvar(k) if m.group("xu") == "x" else uvar(k)
            tokens.append(("var", v, start))
        else:
            tokens.append(("op", m.group("op"), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Optional[RingConfig]):
        self.tokens = _tokenize(text)
        self.k = 0
        self.ring = ring

    def peek(self) -> Token:
        return self.tokens[self.k]

    def take(self) -> Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            if kind in ("int", "var") or val == "(":
                raise ParseError("implicit multiplication is not allowed", pos)
            raise ParseError(f"unexpected token {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.unary()
            return -p if val == "-" else p
        return self.power()

    def power(self) -> Polynomial:
        p = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos)
            p = p ** val
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                raise ParseError("chained '^' needs parentheses", self.peek()[2])
        return p

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "int":
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, den, p2 = self.take()
                if k2 != "int":
                    raise ParseError("expected integer denominator", p2)
                if den == 0:
                    raise ParseError("zero denominator", p2)
                return Polynomial.constant(Fraction(val, den))
            return Polynomial.constant(val)
        if kind == "var":
            if self.ring is not None and not self.ring.contains(val):
                raise ParseError(
                    f"index out of range: a[{val[2]},{val[3]}] needs i+j <= {self.ring.n}", pos)
            return Polynomial.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if kind == "end":
            raise ParseError("unexpected end of expression", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_polynomial(text: str, ring: Optional[RingConfig] = None) -> Polynomial:
    """Parse an expression such as ``"a[0,0]*a[2,0]-a[1,0]^2"``.

    With a ring, every a[i,j] must satisfy i+j <= n.
    """
    return _Parser(text, ring).parse()


_NAME = re.compile(r"^(?:a\[(\d+),(\d+)\]|([xu])([123]))$")


def _var_from_name(name: str):
    m = _NAME.match(name.replace(" ", ""))
    if not m:
        raise ParseError(f"bad variable name {name!r}")
    if m.group(1) is not None:
        return avar(int(m.group(1)), int(m.group(2)))
    k = int(m.group(4))
    return xvar(k) if m.group(3) == "x" else uvar(k)


def polynomial_from_json(data, ring: Optional[RingConfig] = None) -> Polynomial:
    """Inverse of ``render.polynomial_to_json``; accepts a list or a JSON string."""
    if isinstance(data, str):
        data = json.loads(data)
    terms = {}
    for term in data:
        m = monomial(*((_var_from_name(k), int(e)) for k, e in term["monomial"].items()))
        terms[m] = terms.get(m, 0) + Fraction(term["coeff"])
    p = Polynomial(terms)
    if ring is not None:
        try:
            ring.check(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    return p


_LATEX_TOKEN = re.compile(
    r"\s*(?:(?P<sign>[-+])"
    r"|\\frac\{(?P<fn>\d+)\}\{(?P<fd>\d+)\}"
    r"|(?P<int>\d+)"
    r"|a_\{(?P<i>\d+),(?P<j>\d+)\}"
    r"|(?P<xu>[xu])_\{(?P<k>[123])\}"
    r"|\^\{(?P<exp>\d+)\})"
)


def parse_latex(text: str, ring: Optional[RingConfig] = None) -> Polynomial:
    """Read back the LaTeX produced by ``render_latex`` (not general LaTeX)."""
    text = text.strip()
    if text == "0":
        return Polynomial()
    terms = {}
    sign, coeff, pairs = 1, None, []
    last = None
    pos = 0

    def flush():
        if coeff is None and not pairs:
            raise ParseError("empty term", pos)
        m = monomial(*pairs)
        c = sign * (coeff if coeff is not None else 1)
        terms[m] = terms.get(m, 0) + c

    started = False
    while pos < len(text):
        mt = _LATEX_TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ParseError("unrecognized LaTeX", pos)
        pos = mt.end()
        if mt.group("sign"):
            if started:
                flush()
            sign = -1 if mt.group("sign") == "-" else 1
            coeff, pairs, last, started = None, [], None, False
            continue
        started = True
        if mt.group("fn"):
            coeff = Fraction(int(mt.group("fn")), int(mt.group("fd")))
        elif mt.group("int"):
            coeff = Fraction(int(mt.group("int")))
        elif mt.group("i"):
            last = avar(int(mt.group("i")), int(mt.group("j")))
            pairs.append((last, 1))
        elif mt.group("xu"):
            k = int(mt.group("k"))
            last = xvar(k) if mt.group("xu") == "x" else uvar(k)
            pairs.append((last, 1))
        else:
            if last is None:
                raise ParseError("exponent without base", mt.start())
            pairs[-1] = (last, int(mt.group("exp")))
    flush()
    p = Polynomial(terms)
    if ring is not None:
        try:
            ring.check(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    return p
