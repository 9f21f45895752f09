"""Text form of polynomials.

The strict grammar is::

    poly   := ['-'] term (('+'|'-') term)*
    term   := coeff ['*' mono] | mono
    coeff  := int | int '/' posint
    mono   := factor ['*' factor]
    factor := ('x'|'y') ['^' nonneg]

Whitespace is ignored and a variable may appear at most once per monomial.
The default (non-strict) mode accepts a superset: parenthesised groups, group
powers such as ``(y+x^2)^2`` and products of several factors.  Every string
accepted in strict mode parses to the same polynomial in both modes.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly2 import Poly2, scale

DEFAULT_MAX_EXPONENT = 64

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[xy])|(?P<op>[-+*/^()]))")


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``offset`` is a 0-based byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m:
                raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            start = m.start(kind)
            self.toks.append((kind, m.group(kind), start))
            pos = m.end()
        self.end = len(text)
        self.i = 0

    def peek(self):
        if self.i < len(self.toks):
            return self.toks[self.i]
        return ("eof", "", self.end)

    def take(self):
        tok = self.peek()
        if tok[0] != "eof":
            self.i += 1
        return tok

    def accept_op(self, op: str) -> bool:
        kind, val, _ = self.peek()
        if kind == "op" and val == op:
            self.i += 1
            return True
        return False


class _Parser:
    def __init__(self, text: str, strict: bool, max_exponent: int):
        self.ts = _Tokens(text)
        self.strict = strict
        self.cap = max_exponent

    def parse(self) -> Poly2:
        p = self.expr(top=True)
        kind, val, off = self.ts.peek()
        if kind != "eof":
            raise PolySyntaxError(f"unexpected {val!r}", off)
        return p

    def expr(self, top: bool) -> Poly2:
        sign = 1
        kind, val, off = self.ts.peek()
        if kind == "op" and val in "+-":
            if val == "+" and self.strict:
                raise PolySyntaxError("leading '+' not allowed", off)
            self.ts.take()
            sign = -1 if val == "-" else 1
        total = self.term()
        if sign < 0:
            total = -total
        while True:
            kind, val, off = self.ts.peek()
            if kind == "op" and val in "+-":
                self.ts.take()
                t = self.term()
                total = total + t if val == "+" else total - t
            else:
                break
        return total

    def number(self) -> Fraction:
        kind, val, off = self.ts.take()
        if kind != "int":
            raise PolySyntaxError("expected integer", off)
        num = int(val)
        if self.ts.accept_op("/"):
            kind, val, off = self.ts.take()
            if kind != "int":
                raise PolySyntaxError("expected denominator", off)
            den = int(val)
            if den == 0:
                raise PolySyntaxError("zero denominator", off)
            return Fraction(num, den)
        return Fraction(num)

    def exponent(self) -> tuple[int, int]:
        kind, val, off = self.ts.take()
        if kind != "int":
            raise PolySyntaxError("expected exponent", off)
        return int(val), off

    def term(self) -> Poly2:
        kind, val, off = self.ts.peek()
        if kind == "eof":
            raise PolySyntaxError("expected term", off)
        result = Poly2.const(1)
        seen_vars: set[str] = set()
        nfactors = 0
        while True:
            kind, val, off = self.ts.peek()
            if kind == "int":
                if self.strict and nfactors:
                    raise PolySyntaxError("coefficient must lead the term", off)
                result = scale(result, self.number())
            elif kind == "var":
                self.ts.take()
                if val in seen_vars:
                    raise PolySyntaxError(f"duplicate variable {val!r} in monomial", off)
                seen_vars.add(val)
                e = 1
                if self.ts.accept_op("^"):
                    e, eoff = self.exponent()
                    if e > self.cap:
                        raise PolySyntaxError(f"exponent {e} exceeds cap {self.cap}", eoff)
                result = result * (Poly2.monomial(e, 0) if val == "x" else Poly2.monomial(0, e))
            elif kind == "op" and val == "(" and not self.strict:
                self.ts.take()
                inner = self.expr(top=False)
                k2, v2, o2 = self.ts.take()
                if not (k2 == "op" and v2 == ")"):
                    raise PolySyntaxError("expected ')'", o2)
                if self.ts.accept_op("^"):
                    e, eoff = self.exponent()
                    dx, dy = max(inner.degree_in("x"), 0), max(inner.degree_in("y"), 0)
                    if max(dx, dy) * e > self.cap:
                        raise PolySyntaxError(f"exponent {e} exceeds cap {self.cap}", eoff)
                    inner = inner ** e
                result = result * inner
            else:
                raise PolySyntaxError("expected coefficient, variable or group" if not self.strict
                                      else "expected coefficient or variable", off)
            nfactors += 1
            if max(result.degree_in("x"), result.degree_in("y")) > self.cap:
                raise PolySyntaxError(f"exponent exceeds cap {self.cap}", off)
            if not self.ts.accept_op("*"):
                break
            if self.strict and len(seen_vars) >= 2:
                raise PolySyntaxError("too many factors in monomial", self.ts.peek()[2])
        return result


def parse_poly(text: str, *, strict: bool = False,
               max_exponent: int = DEFAULT_MAX_EXPONENT) -> Poly2:
    """Parse polynomial text; raises :class:`PolySyntaxError` with a byte offset."""
    return _Parser(text, strict, max_exponent).parse()


def _format_mono(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def format_poly(p: Poly2) -> str:
    """Canonical text: graded lexicographic order, x before y, descending."""
    if p.is_zero():
        return "0"
    out = []
    for (i, j), c in p.items():
        a = abs(c)
        mono = _format_mono(i, j)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
