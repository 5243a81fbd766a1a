"""Sparse Laurent polynomials with exact coefficients.

Two coefficient models are supported and never mixed inside one polynomial:

``RationalComplex``
    Gaussian rationals ``re + im*i``.  ``log|c|`` is ``1/2 * log(re**2 + im**2)``.
``LogPolar``
    ``exp(log_mag + phase*pi*i)`` with rational ``log_mag`` and ``phase``;
    ``log|c|`` is the rational ``log_mag``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exceptions import (
    DimensionMismatch,
    EmptyPolynomial,
    ModelMismatch,
    NotUnivariate,
    PolynomialSyntaxError,
    ZeroScale,
)
from .logvalue import ExactLogValue, as_fraction

RATIONAL = "rational"
LOGPOLAR = "logpolar"


@dataclass(frozen=True)
class RationalComplex:
    """Gaussian rational ``re + im*i``."""

    re: Fraction
    im: Fraction = Fraction(0)

    model = RATIONAL

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalComplex):
            return x
        if isinstance(x, LogPolar):
            raise ModelMismatch("log-polar value used where a Gaussian rational is required")
        if isinstance(x, tuple) and len(x) == 2:
            return cls(x[0], x[1])
        return cls(as_fraction(x))

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def magnitude_squared(self):
        return self.re * self.re + self.im * self.im

    def log_abs(self):
        return ExactLogValue.log(self.magnitude_squared(), Fraction(1, 2))

    def __add__(self, other):
        other = RationalComplex.coerce(other)
        return RationalComplex(self.re + other.re, self.im + other.im)

    def __neg__(self):
        return RationalComplex(-self.re, -self.im)

    def __mul__(self, other):
        other = RationalComplex.coerce(other)
        return RationalComplex(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def inverse(self):
        m = self.magnitude_squared()
        if m == 0:
            raise ZeroDivisionError("inverse of zero")
        return RationalComplex(self.re / m, -self.im / m)

    def __pow__(self, k):
        k = int(k)
        base = self if k >= 0 else self.inverse()
        out = RationalComplex(1)
        e = abs(k)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"({self.re}{sign}{abs(self.im)}i)"


def _normalize_phase(phase):
    """Reduce a multiple of pi into ``(-1, 1]``."""
    phase = as_fraction(phase)
    phase = phase - 2 * math.floor((phase + 1) / 2)
    if phase == -1:
        phase = Fraction(1)
    return phase


@dataclass(frozen=True)
class LogPolar:
    """``exp(log_mag + phase*pi*i)``; the phase is kept in ``(-1, 1]``."""

    log_mag: Fraction
    phase: Fraction = Fraction(0)

    model = LOGPOLAR

    def __post_init__(self):
        object.__setattr__(self, "log_mag", as_fraction(self.log_mag))
        object.__setattr__(self, "phase", _normalize_phase(self.phase))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LogPolar):
            return x
        raise ModelMismatch(f"expected a log-polar value, got {type(x).__name__}")

    def is_zero(self):
        return False

    def log_abs(self):
        return ExactLogValue(self.log_mag)

    def __mul__(self, other):
        other = LogPolar.coerce(other)
        return LogPolar(self.log_mag + other.log_mag, self.phase + other.phase)

    def __neg__(self):
        return LogPolar(self.log_mag, self.phase + 1)

    def inverse(self):
        return LogPolar(-self.log_mag, -self.phase)

    def __pow__(self, k):
        k = int(k)
        return LogPolar(self.log_mag * k, self.phase * k)

    def __complex__(self):
        return cmath.exp(complex(float(self.log_mag), math.pi * float(self.phase)))

    def __str__(self):
        if self.phase == 0:
            return f"exp({self.log_mag})"
        return f"exp({self.log_mag},{self.phase})"


def coerce_coefficient(x, model=None):
    if model == LOGPOLAR:
        return LogPolar.coerce(x)
    if isinstance(x, LogPolar):
        if model == RATIONAL:
            raise ModelMismatch("log-polar value mixed with rational-complex data")
        return x
    return RationalComplex.coerce(x)


@dataclass(frozen=True)
class Term:
    exponent: tuple
    coeff: object

    def log_abs(self):
        return self.coeff.log_abs()


class LaurentPoly:
    """Immutable sparse Laurent polynomial in ``n`` variables.

    Terms are kept in lexicographic order of their exponent vectors and all
    coefficients are nonzero.  Build instances with :meth:`from_terms` (which
    merges duplicates) or :func:`archtrop.parser.parse_laurent`.
    """

    __slots__ = ("_n", "_terms", "_model")

    def __init__(self, n, terms):
        n = int(n)
        if n < 1:
            raise DimensionMismatch("a polynomial needs at least one variable")
        terms = tuple(terms)
        if not terms:
            raise EmptyPolynomial("polynomial has no terms")
        models = {t.coeff.model for t in terms}
        if len(models) > 1:
            raise ModelMismatch("rational-complex and log-polar coefficients cannot be mixed")
        seen = set()
        for t in terms:
            if len(t.exponent) != n:
                raise DimensionMismatch(f"exponent {t.exponent} has length {len(t.exponent)}, expected {n}")
            if t.exponent in seen:
                raise ValueError(f"duplicate exponent {t.exponent}")
            if t.coeff.is_zero():
                raise ValueError("zero coefficient")
            seen.add(t.exponent)
        self._n = n
        self._terms = tuple(sorted(terms, key=lambda t: t.exponent))
        self._model = models.pop()

    @classmethod
    def from_terms(cls, n, pairs):
        """Build from ``(exponent, coefficient)`` pairs, merging duplicates."""
        acc = {}
        order = []
        model = None
        for exponent, coeff in pairs:
            exponent = tuple(int(e) for e in exponent)
            coeff = coerce_coefficient(coeff, model)
            model = coeff.model
            if exponent not in acc:
                acc[exponent] = coeff
                order.append(exponent)
            else:
                acc[exponent] = _merge(acc[exponent], coeff)
        terms = [Term(e, acc[e]) for e in order if acc[e] is not None and not acc[e].is_zero()]
        if not terms:
            raise EmptyPolynomial("all terms cancel")
        return cls(n, terms)

    # ------------------------------------------------------------- access
    @property
    def n(self):
        return self._n

    @property
    def terms(self):
        return self._terms

    @property
    def model(self):
        return self._model

    @property
    def t(self):
        return len(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    @property
    def support(self):
        return [t.exponent for t in self._terms]

    @property
    def coefficients(self):
        return [t.coeff for t in self._terms]

    def exponent_matrix(self):
        return np.array(self.support, dtype=object)

    def log_abs_coefficients(self):
        return [t.coeff.log_abs() for t in self._terms]

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self):
        return hash((self._n, self._terms))

    def __str__(self):
        from .parser import format_laurent

        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({self._n}, {str(self)!r})"

    def __call__(self, x):
        """Evaluate at a complex point (floating point)."""
        x = np.asarray(x, dtype=complex).reshape(-1)
        if x.shape[0] != self._n:
            raise DimensionMismatch(f"point has {x.shape[0]} coordinates, expected {self._n}")
        total = 0j
        for t in self._terms:
            total += complex(t.coeff) * complex(np.prod(x ** np.array(t.exponent, dtype=float)))
        return total

    # --------------------------------------------------------- univariate
    def require_univariate(self):
        if self._n != 1:
            raise NotUnivariate(f"expected one variable, got {self._n}")

    def degree_span(self):
        """``a_t - a_1`` for a univariate polynomial."""
        self.require_univariate()
        return self._terms[-1].exponent[0] - self._terms[0].exponent[0]

    def shifted(self):
        """Univariate copy with lowest exponent moved to zero."""
        self.require_univariate()
        low = self._terms[0].exponent[0]
        if low == 0:
            return self
        return LaurentPoly(1, [Term((t.exponent[0] - low,), t.coeff) for t in self._terms])


def _merge(a, b):
    if a.model == RATIONAL:
        return a + b
    a, b = LogPolar.coerce(a), LogPolar.coerce(b)
    if a.log_mag == b.log_mag and _normalize_phase(a.phase - b.phase) == 1:
        return None
    raise PolynomialSyntaxError("log-polar coefficients of a repeated exponent cannot be merged exactly")


def rescale_transform(f, alpha, a, beta):
    """Return ``g(x) = alpha * x**a * f(beta_1 x_1, ..., beta_n x_n)``."""
    a = tuple(int(e) for e in a) if a is not None else (0,) * f.n
    if len(a) != f.n:
        raise DimensionMismatch(f"shift has length {len(a)}, expected {f.n}")
    beta = list(beta)
    if len(beta) != f.n:
        raise DimensionMismatch(f"beta has length {len(beta)}, expected {f.n}")
    alpha = coerce_coefficient(alpha, f.model)
    beta = [coerce_coefficient(b, f.model) for b in beta]
    if alpha.is_zero() or any(b.is_zero() for b in beta):
        raise ZeroScale("rescaling factors must be nonzero")
    terms = []
    for term in f:
        c = alpha * term.coeff
        for b, e in zip(beta, term.exponent):
            if e:
                c = c * (b**e)
        terms.append(Term(tuple(e + s for e, s in zip(term.exponent, a)), c))
    return LaurentPoly(f.n, terms)


def reciprocal(f):
    """``x**deg(f) * f(1/x)`` for a univariate polynomial."""
    if f.n != 1:
        raise NotUnivariate("reciprocal polynomial needs one variable")
    top = f.terms[-1].exponent[0]
    return LaurentPoly(1, [Term((top - t.exponent[0],), t.coeff) for t in f])


def term_log_value(term, log_point):
    """``a . L + log|c|`` where ``L`` is a vector of exact log coordinates."""
    total = term.coeff.log_abs()
    for e, coord in zip(term.exponent, log_point):
        if e:
            total = total + ExactLogValue.coerce(coord) * e
    return total


def term_log_magnitude(term, w):
    """``a . w + log|c|`` for a rational point ``w`` (a candidate ``Log|x|``)."""
    w = [as_fraction(x) for x in w]
    if len(w) != len(term.exponent):
        raise DimensionMismatch(f"point has {len(w)} coordinates, expected {len(term.exponent)}")
    return term.coeff.log_abs() + sum((e * x for e, x in zip(term.exponent, w)), Fraction(0))


def log_values_at(f, log_point):
    return [term_log_value(t, log_point) for t in f]


def univariate_coefficients(f) -> Sequence[complex]:
    """Dense ascending complex coefficients of the shifted univariate ``f``."""
    g = f.shifted()
    out = np.zeros(g.terms[-1].exponent[0] + 1, dtype=complex)
    for t in g:
        out[t.exponent[0]] = complex(t.coeff)
    return out
