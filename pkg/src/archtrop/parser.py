"""Text grammar for sparse Laurent polynomials.

::

    poly     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*'? factor | '/' RAT)*
    factor   := coeff | monomial
    monomial := 'x' INDEX ('^' ['-'] INT | '^(' ['-'] INT ')')?
    coeff    := RAT | '(' RAT ('+'|'-') RAT 'i' ')' | 'exp(' RAT (',' RAT)? ')'
    RAT      := POW ('/' POW)?        POW := INT ('^' ['-'] INT)?

``exp(p, q)`` is ``e**(p + q*pi*i)``.  A bare ``x`` is accepted as ``x1``.
Whitespace is ignored.  Powers of whole expressions are not expanded.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exceptions import DimensionMismatch, PolynomialSyntaxError
from .polynomial import LaurentPoly, LogPolar, RationalComplex

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<var>x(?P<idx>\d*))|(?P<exp>exp(?=\s*\())|(?P<i>i)|(?P<op>[-+*/^(),]))"
)


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            while text[pos].isspace():
                pos += 1
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group("int") is not None:
            out.append(("int", int(m.group("int")), m.start("int")))
        elif m.group("var") is not None:
            idx = m.group("idx")
            out.append(("var", int(idx) if idx else 1, m.start("var")))
        elif m.group("exp") is not None:
            out.append(("exp", None, m.start("exp")))
        elif m.group("i") is not None:
            out.append(("i", None, m.start("i")))
        else:
            out.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, n):
        self.tokens = _tokenize(text)
        self.k = 0
        self.n = n
        self.max_index = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def is_op(self, sym):
        kind, val, _ = self.peek()
        return kind == "op" and val == sym

    def expect_op(self, sym):
        kind, val, pos = self.take()
        if kind != "op" or val != sym:
            raise PolynomialSyntaxError(f"expected {sym!r}", pos)

    def signed_int(self):
        neg = False
        if self.is_op("-") or self.is_op("+"):
            neg = self.take()[1] == "-"
        kind, val, pos = self.take()
        if kind != "int":
            raise PolynomialSyntaxError("expected an integer", pos)
        return -val if neg else val

    def power_int(self):
        kind, val, pos = self.take()
        if kind != "int":
            raise PolynomialSyntaxError("expected an integer", pos)
        base = Fraction(val)
        if self.is_op("^"):
            self.take()
            base = base ** self.exponent()
        return base

    def exponent(self):
        if self.is_op("("):
            self.take()
            e = self.signed_int()
            self.expect_op(")")
            return e
        return self.signed_int()

    def rational(self):
        value = self.power_int()
        if self.is_op("/"):
            self.take()
            den = self.power_int()
            if den == 0:
                raise PolynomialSyntaxError("division by zero", self.peek()[2])
            value = value / den
        return value

    def signed_rational(self):
        neg = False
        if self.is_op("-") or self.is_op("+"):
            neg = self.take()[1] == "-"
        q = self.rational()
        return -q if neg else q

    def parenthesized(self):
        # '(' already consumed
        re_part = self.signed_rational() if self.peek()[0] != "i" else None
        if re_part is not None and self.is_op(")"):
            self.take()
            return RationalComplex(re_part)
        if re_part is not None and self.peek()[0] == "i":
            self.take()
            self.expect_op(")")
            return RationalComplex(0, re_part)
        sign = 1
        if re_part is None:
            re_part = Fraction(0)
        else:
            kind, val, pos = self.take()
            if kind != "op" or val not in "+-":
                raise PolynomialSyntaxError("expected '+' or '-' in Gaussian rational", pos)
            sign = -1 if val == "-" else 1
        im = Fraction(1) if self.peek()[0] == "i" else self.rational()
        kind, _, pos = self.take()
        if kind != "i":
            raise PolynomialSyntaxError("expected 'i' closing the imaginary part", pos)
        self.expect_op(")")
        return RationalComplex(re_part, sign * im)

    def exp_coeff(self):
        self.expect_op("(")
        log_mag = self.signed_rational()
        phase = Fraction(0)
        if self.is_op(","):
            self.take()
            phase = self.signed_rational()
        self.expect_op(")")
        return LogPolar(log_mag, phase)

    def factor(self, exponent, coeff):
        kind, val, pos = self.peek()
        if kind == "var":
            self.take()
            if val < 1:
                raise PolynomialSyntaxError("variable indices start at 1", pos)
            if self.n is not None and val > self.n:
                raise DimensionMismatch(f"variable x{val} exceeds dimension {self.n}")
            self.max_index = max(self.max_index, val)
            e = 1
            if self.is_op("^"):
                self.take()
                e = self.exponent()
            exponent[val] = exponent.get(val, 0) + e
            return coeff
        if kind == "int":
            c = RationalComplex(self.rational())
        elif kind == "exp":
            self.take()
            c = self.exp_coeff()
        elif kind == "op" and val == "(":
            self.take()
            c = self.parenthesized()
        else:
            raise PolynomialSyntaxError("expected a coefficient or a monomial", pos)
        return c if coeff is None else coeff * c

    def term(self, negative):
        exponent = {}
        coeff = self.factor(exponent, None)
        while True:
            if self.is_op("*"):
                self.take()
                coeff = self.factor(exponent, coeff)
                continue
            if self.is_op("/"):
                pos = self.take()[2]
                den = self.rational()
                if den == 0:
                    raise PolynomialSyntaxError("division by zero", pos)
                coeff = RationalComplex(1 / den) if coeff is None else coeff * RationalComplex(1 / den)
                continue
            kind, val, _ = self.peek()
            if kind in ("var", "int", "exp") or (kind == "op" and val == "("):
                coeff = self.factor(exponent, coeff)
                continue
            break
        if coeff is None:
            coeff = RationalComplex(1)
        if negative:
            coeff = -coeff
        return exponent, coeff

    def poly(self):
        raw = []
        negative = False
        if self.is_op("+") or self.is_op("-"):
            negative = self.take()[1] == "-"
        raw.append(self.term(negative))
        while self.peek()[0] != "end":
            kind, val, pos = self.take()
            if kind != "op" or val not in "+-":
                raise PolynomialSyntaxError(f"unexpected token {val!r}", pos)
            raw.append(self.term(val == "-"))
        return raw


def parse_laurent(text, n=None):
    """Parse polynomial text into a :class:`LaurentPoly` in ``n`` variables.

    ``n`` defaults to the largest variable index that occurs (at least 1).
    Repeated exponents are merged and cancelled terms dropped.
    """
    if not isinstance(text, str):
        raise TypeError("polynomial text must be a string")
    if not text.strip():
        raise PolynomialSyntaxError("empty input", 0)
    p = _Parser(text, n)
    raw = p.poly()
    dim = n if n is not None else max(p.max_index, 1)
    pairs = []
    for exponent, coeff in raw:
        pairs.append((tuple(exponent.get(k, 0) for k in range(1, dim + 1)), coeff))
    return LaurentPoly.from_terms(dim, pairs)


def _monomial_text(exponent):
    parts = []
    for k, e in enumerate(exponent, start=1):
        if e == 0:
            continue
        parts.append(f"x{k}" if e == 1 else f"x{k}^{e}")
    return "*".join(parts)


def format_laurent(f):
    """Canonical text of ``f``; ``parse_laurent(format_laurent(f), f.n) == f``."""
    out = []
    for i, term in enumerate(f.terms):
        mono = _monomial_text(term.exponent)
        c = term.coeff
        negative = False
        if isinstance(c, RationalComplex) and c.im == 0:
            negative = c.re < 0
            mag = abs(c.re)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
        else:
            body = f"{c}*{mono}" if mono else str(c)
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)
