"""Text form of polynomials.

Grammar (whitespace is insignificant)::

    expression  := ['+'|'-'] term (('+'|'-') term)*
    term        := coefficient ['*' factor ('*'? factor)*]
                 | factor ('*'? factor)*
    factor      := variable ['^' positive-integer]
    coefficient := integer ['/' positive-integer]

Like monomials are combined and zero terms dropped.  ``format_polynomial``
prints terms in descending monomial order, and its output parses back to
the same polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import PolynomialSyntaxError
from .milnor import MonomialOrder, Polynomial, grevlex

MAX_EXPONENT = 10_000

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:     # only trailing whitespace is left
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(variables)}
        self.nvars = len(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, what):
        tok = self.take()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {what}, found {found}", tok[2])
        return tok

    def positive_int(self, what):
        tok = self.expect("int", what)
        value = int(tok[1])
        if value <= 0:
            raise PolynomialSyntaxError(f"{what} must be positive", tok[2])
        return value, tok[2]

    def expression(self) -> dict:
        terms: dict = {}
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            mono, coeff = self.term()
            terms[mono] = terms.get(mono, 0) + sign * coeff
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] not in ("+", "-"):
                raise PolynomialSyntaxError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
            sign = -1 if self.take()[0] == "-" else 1
        return terms

    def term(self):
        exps = [0] * self.nvars
        coeff = Fraction(1)
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            coeff = Fraction(int(tok[1]))
            if self.peek()[0] == "/":
                self.take()
                den, _ = self.positive_int("denominator")
                coeff /= den
            if self.peek()[0] != "*":
                if self.peek()[0] == "name":
                    self.factor(exps)
                    self.factors(exps)
                return tuple(exps), coeff
            self.take()
            self.factor(exps)
        elif tok[0] == "name":
            self.factor(exps)
        else:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected a coefficient or variable, found {found}", tok[2])
        self.factors(exps)
        return tuple(exps), coeff

    def factors(self, exps):
        while True:
            tok = self.peek()
            if tok[0] == "*":
                self.take()
                self.factor(exps)
            elif tok[0] == "name":
                self.factor(exps)
            else:
                return

    def factor(self, exps):
        tok = self.expect("name", "a variable")
        if tok[1] not in self.index:
            raise PolynomialSyntaxError(f"unknown variable {tok[1]!r}", tok[2])
        power = 1
        if self.peek()[0] == "^":
            self.take()
            power, pos = self.positive_int("exponent")
            if power > MAX_EXPONENT:
                raise PolynomialSyntaxError(
                    f"exponent {power} exceeds the limit {MAX_EXPONENT}", pos
                )
        k = self.index[tok[1]]
        exps[k] += power
        if exps[k] > MAX_EXPONENT:
            raise PolynomialSyntaxError(
                f"exponent of {tok[1]!r} exceeds the limit {MAX_EXPONENT}", tok[2]
            )


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    if not variables:
        raise ValueError("at least one variable name is required")
    if len(set(variables)) != len(variables):
        raise ValueError(f"duplicate variable names in {list(variables)}")
    if not text or not text.strip():
        raise PolynomialSyntaxError("empty polynomial", 0)
    terms = _Parser(text, variables).expression()
    return Polynomial(terms, len(variables))


def scan_variables(text: str) -> list:
    """Identifiers in order of first appearance."""
    seen = []
    for m in re.finditer(r"[A-Za-z_][A-Za-z0-9_]*", text):
        if m.group(0) not in seen:
            seen.append(m.group(0))
    return seen


def _format_monomial(exps, names) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(
    P: Polynomial, variables: Sequence[str], order: MonomialOrder | None = None
) -> str:
    if len(variables) != P.nvars:
        raise ValueError(f"{len(variables)} names for {P.nvars} variables")
    if not P:
        return "0"
    out = []
    for k, (exps, c) in enumerate(P.sorted_terms(order or grevlex(P.nvars))):
        mono = _format_monomial(exps, variables)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
