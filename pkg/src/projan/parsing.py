"""Text grammar for polynomials, series and scalar constants.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' exponent)?
    base   := var | number | 'i' | 'sqrt' '(' uint ')' | '(' expr ')'
    number := int | int '/' uint | float

Polynomial exponents are unsigned integers. Series use the single variable
't', allow rational exponents written 't^(p/q)', and accept an optional
trailing '+ O(t^k)' marking the truncation order. ``sqrt`` always produces
a float scalar; all other rational literals stay exact.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ParseError, UnknownVariableError
from .poly import Poly
from .scalars import Scalar
from .series import PuiseuxSeries

_TOKEN_RE = re.compile(
    r"(?P<float>\d+\.\d*(?:[eE][-+]?\d+)?|\.\d+(?:[eE][-+]?\d+)?|\d+[eE][-+]?\d+)"
    r"|(?P<int>\d+)"
    r"|(?P<name>[A-Za-z_]\w*'*)"
    r"|(?P<op>[-+*^/()])"
    r"|(?P<ws>\s+)"
)

_RESERVED = {"i", "sqrt", "O"}


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "int":
                value = int(value)
            elif kind == "float":
                value = float(value)
            tokens.append(_Token(kind, value, pos))
        pos = m.end()
    tokens.append(_Token("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser shared by the poly and series grammars."""

    def __init__(self, text: str, mode: str, vars: tuple[str, ...] = (),
                 series_var: str = "t"):
        self.text = text
        self.mode = mode
        self.vars = tuple(vars)
        self.series_var = series_var
        self.tokens = _tokenize(text)
        self.i = 0
        self.trunc: Fraction | None = None

    # -- token helpers ----------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str) -> _Token:
        t = self.peek()
        if t.kind != "op" or t.value != op:
            raise ParseError(f"expected {op!r}", self.text, t.pos)
        return self.next()

    def fail(self, message: str):
        raise ParseError(message, self.text, self.peek().pos)

    # -- value helpers ----------------------------------------------------

    def _const(self, c: Scalar):
        if self.mode == "poly":
            return Poly.constant(self.vars, c)
        return PuiseuxSeries.constant(c)

    def _one(self):
        return self._const(Scalar(1))

    # -- grammar ----------------------------------------------------------

    def parse_expr(self, top: bool = False):
        sign = 1
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.next()
            sign = -1 if t.value == "-" else 1
        value = self.parse_term(top=top)
        if sign < 0:
            value = -value
        while True:
            t = self.peek()
            if t.kind == "op" and t.value in "+-":
                self.next()
                if (self.mode == "series" and top and self.peek().kind == "name"
                        and self.peek().value == "O"):
                    if t.value == "-":
                        self.fail("truncation marker must be added, not subtracted")
                    self.parse_O()
                    return value
                rhs = self.parse_term()
                value = value + rhs if t.value == "+" else value - rhs
            else:
                return value

    def parse_term(self, top: bool = False):
        if (self.mode == "series" and top and self.peek().kind == "name"
                and self.peek().value == "O"):
            self.parse_O()
            return PuiseuxSeries.zero()
        value = self.parse_factor()
        while True:
            t = self.peek()
            if t.kind == "op" and t.value == "*":
                self.next()
                value = value * self.parse_factor()
            else:
                return value

    def parse_factor(self):
        base, is_bare_var = self.parse_base()
        t = self.peek()
        if t.kind == "op" and t.value == "^":
            self.next()
            num, den = self.parse_exponent()
            if den == 1 and num >= 0:
                return base ** num
            if self.mode == "poly":
                self.fail("polynomial exponents must be unsigned integers")
            if not is_bare_var:
                self.fail("fractional exponents apply only to the bare variable")
            return PuiseuxSeries.t_power(num, ram=den)
        return base

    def parse_exponent(self) -> tuple[int, int]:
        t = self.peek()
        if t.kind == "int":
            self.next()
            return t.value, 1
        if t.kind == "op" and t.value == "(" and self.mode == "series":
            self.next()
            sign = 1
            if self.peek().kind == "op" and self.peek().value == "-":
                self.next()
                sign = -1
            p = self.peek()
            if p.kind != "int":
                self.fail("expected an integer exponent numerator")
            self.next()
            den = 1
            if self.peek().kind == "op" and self.peek().value == "/":
                self.next()
                q = self.peek()
                if q.kind != "int" or q.value <= 0:
                    self.fail("expected a positive exponent denominator")
                self.next()
                den = q.value
            self.expect_op(")")
            g = math.gcd(p.value, den)
            return sign * p.value // g, den // g
        self.fail("expected an exponent")

    def parse_base(self):
        t = self.peek()
        if t.kind in ("int", "float"):
            self.next()
            if t.kind == "int" and self.peek().kind == "op" \
                    and self.peek().value == "/":
                self.next()
                d = self.peek()
                if d.kind != "int" or d.value <= 0:
                    self.fail("expected a positive denominator")
                self.next()
                return self._const(Scalar(Fraction(t.value, d.value))), False
            c = Scalar(t.value) if t.kind == "int" else Scalar(t.value, 0.0, exact=False)
            return self._const(c), False
        if t.kind == "name":
            self.next()
            if t.value == "i":
                return self._const(Scalar(0, 1)), False
            if t.value == "sqrt":
                self.expect_op("(")
                arg = self.peek()
                if arg.kind != "int" or arg.value < 0:
                    self.fail("sqrt takes an unsigned integer")
                self.next()
                self.expect_op(")")
                return self._const(Scalar(math.sqrt(arg.value), 0.0, exact=False)), False
            if self.mode == "series":
                if t.value != self.series_var:
                    raise UnknownVariableError(
                        f"unknown series variable {t.value!r}", self.text, t.pos)
                return PuiseuxSeries.t_power(1), True
            if t.value not in self.vars:
                raise UnknownVariableError(
                    f"unknown variable {t.value!r}", self.text, t.pos)
            return Poly.variable(self.vars, t.value), True
        if t.kind == "op" and t.value == "(":
            self.next()
            value = self.parse_expr()
            self.expect_op(")")
            return value, False
        self.fail("expected a value")

    def parse_O(self):
        tok = self.next()  # the 'O' name
        self.expect_op("(")
        t = self.peek()
        if t.kind == "int" and t.value == 1:
            self.next()
            self.trunc = Fraction(0)
        else:
            if t.kind != "name" or t.value != self.series_var:
                raise ParseError("expected t^k inside O(...)", self.text, t.pos)
            self.next()
            if self.peek().kind == "op" and self.peek().value == "^":
                self.next()
                num, den = self.parse_exponent()
                self.trunc = Fraction(num, den)
            else:
                self.trunc = Fraction(1)
        self.expect_op(")")
        if self.peek().kind != "end":
            self.fail("truncation marker must end the series")
        del tok


def parse_poly(text: str, vars) -> Poly:
    """Parse a polynomial over the given ordered variable names."""
    p = _Parser(text, "poly", vars=tuple(vars))
    value = p.parse_expr(top=True)
    if p.peek().kind != "end":
        p.fail("unexpected trailing input")
    return value


def parse_series(text: str, var: str = "t") -> PuiseuxSeries:
    """Parse a Puiseux series in one variable, with optional O(t^k) tail."""
    p = _Parser(text, "series", series_var=var)
    value = p.parse_expr(top=True)
    if p.peek().kind != "end":
        p.fail("unexpected trailing input")
    if p.trunc is not None:
        value = value.truncated(p.trunc)
    return value


def parse_scalar(text: str) -> Scalar:
    """Parse a constant expression into a Scalar."""
    value = parse_poly(text, vars=())
    return value.eval([])


def _has_toplevel_sign(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and s[i - 1] not in "eE":
            return True
    return False


def format_terms(parts: list[tuple[str, str]]) -> str:
    """Assemble (coefficient, monomial) strings into grammar-valid text."""
    if not parts:
        return "0"
    rendered = []
    for coef, mono in parts:
        neg = False
        body = coef
        if coef.startswith("-") and not _has_toplevel_sign(coef[1:]):
            neg, body = True, coef[1:]
        if _has_toplevel_sign(body):
            body = f"({body})"
        if mono:
            text = mono if body == "1" else f"{body}*{mono}"
        else:
            text = body
        rendered.append((neg, text))
    out = []
    for k, (neg, text) in enumerate(rendered):
        if k == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)
