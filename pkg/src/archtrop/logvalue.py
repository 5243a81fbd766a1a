"""Exact rational combinations of logarithms of positive rationals.

An :class:`ExactLogValue` stands for ``q0 + sum(q_i * log(r_i))`` with rational
``q0, q_i`` and positive rational ``r_i``.  Slopes of lower hulls, coordinates
of tropical vertices and the log-magnitudes of monomials all live in this
space, so their signs can be decided exactly:

* a pure rational is compared directly;
* the logarithmic part is rewritten over a pairwise coprime integer base, whose
  logarithms are linearly independent over the rationals, so it vanishes iff
  every reduced exponent does;
* a nonzero rational plus a nonzero logarithmic part is never zero (``e**q`` is
  transcendental for rational ``q != 0``).

Once a value is known to be nonzero its sign is certified by outward-bounded
multiprecision evaluation with doubling precision.
"""

from __future__ import annotations

import contextvars
from contextlib import contextmanager
from fractions import Fraction
from functools import cached_property
from math import gcd

from mpmath.libmp import (
    from_float,
    from_rational,
    mpf_add,
    mpf_cmp,
    mpf_log,
    mpf_mul,
    mpf_shift,
    mpf_sign,
    mpf_sub,
    round_ceiling,
    round_floor,
    round_nearest,
    to_float,
)

from .exceptions import PrecisionExhausted

MIN_PRECISION = 53
DEFAULT_PRECISION = 64
MAX_PRECISION = 16384

# product sizes (in bits) up to which signs of pure log parts are decided by
# exact integer exponentiation instead of further precision escalation
_EXACT_POWER_BITS = 1 << 18

_precision = contextvars.ContextVar("archtrop_precision", default=DEFAULT_PRECISION)


def current_precision():
    """Initial mantissa size (bits) for interval filters in this context."""
    return _precision.get()


@contextmanager
def working_precision(bits):
    """Temporarily change the starting precision of interval filters."""
    bits = int(bits)
    if not MIN_PRECISION <= bits <= MAX_PRECISION:
        raise ValueError(f"precision must lie in [{MIN_PRECISION}, {MAX_PRECISION}], got {bits}")
    token = _precision.set(bits)
    try:
        yield bits
    finally:
        _precision.reset(token)


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def coprime_base(numbers):
    """Refine positive integers into a pairwise coprime base.

    Every input is a product of powers of the returned integers, all of which
    are greater than one.
    """
    base = []
    todo = [n for n in numbers if n > 1]
    while todo:
        x = todo.pop()
        if x == 1:
            continue
        for i, b in enumerate(base):
            g = gcd(x, b)
            if g > 1:
                base.pop(i)
                todo.extend((b // g, g, x // g))
                break
        else:
            base.append(x)
    return sorted(base)


def _valuation(n, b):
    k = 0
    while n % b == 0:
        n //= b
        k += 1
    return k


def _perfect_power(p):
    """``(r, k)`` with ``p == r**k`` and ``k`` maximal."""
    best = (p, 1)
    for k in range(2, p.bit_length() + 1):
        r = round(p ** (1.0 / k)) if p.bit_length() < 1000 else None
        if r is None:
            break
        for cand in (r - 1, r, r + 1):
            if cand > 1 and cand**k == p:
                best = (cand, k)
    return best


class ExactLogValue:
    """``rational + sum(weight * log(base))`` with exact rational data.

    Instances are immutable.  Arithmetic is closed under addition and under
    multiplication by rationals; comparisons are exact.
    """

    __hash__ = None  # equality is semantic (log 4 == 2 log 2)

    def __init__(self, rational=0, logs=()):
        self._rational = as_fraction(rational)
        merged = {}
        items = logs.items() if isinstance(logs, dict) else logs
        for base, weight in items:
            base = as_fraction(base)
            weight = as_fraction(weight)
            if base <= 0:
                raise ValueError(f"logarithm of non-positive rational {base}")
            if base == 1 or weight == 0:
                continue
            if base < 1:
                base, weight = 1 / base, -weight
            merged[base] = merged.get(base, 0) + weight
        self._logs = tuple(sorted((b, w) for b, w in merged.items() if w != 0))

    @classmethod
    def log(cls, r, weight=1):
        """``weight * log(r)``."""
        return cls(0, ((r, weight),))

    @classmethod
    def constant(cls, q):
        return cls(q)

    @property
    def rational(self):
        return self._rational

    @property
    def logs(self):
        return self._logs

    def is_rational(self):
        return not self._logs

    # ------------------------------------------------------------ arithmetic
    @classmethod
    def coerce(cls, x):
        if isinstance(x, ExactLogValue):
            return x
        return cls(as_fraction(x))

    def __add__(self, other):
        try:
            other = ExactLogValue.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactLogValue(self._rational + other._rational, self._logs + other._logs)

    __radd__ = __add__

    def __neg__(self):
        return ExactLogValue(-self._rational, [(b, -w) for b, w in self._logs])

    def __sub__(self, other):
        try:
            other = ExactLogValue.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, scalar):
        if isinstance(scalar, ExactLogValue):
            if scalar.is_rational():
                scalar = scalar._rational
            elif self.is_rational():
                return scalar * self._rational
            else:
                return NotImplemented
        try:
            q = as_fraction(scalar)
        except TypeError:
            return NotImplemented
        return ExactLogValue(self._rational * q, [(b, w * q) for b, w in self._logs])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        try:
            q = as_fraction(scalar)
        except TypeError:
            return NotImplemented
        return self * (1 / q)

    # ------------------------------------------------------- approximation
    def interval(self, prec):
        """Return ``(lo, hi)`` libmp numbers enclosing the value.

        The radius is at most ``2**-prec`` times the sum of the magnitudes of
        the constituent terms.
        """
        wp = prec + 8 + (len(self._logs) + 1).bit_length()
        acc = from_rational(self._rational.numerator, self._rational.denominator, wp, round_nearest)
        mag = abs(float(self._rational))
        for base, weight in self._logs:
            lg = mpf_log(from_rational(base.numerator, base.denominator, wp, round_nearest), wp, round_nearest)
            w = from_rational(weight.numerator, weight.denominator, wp, round_nearest)
            acc = mpf_add(acc, mpf_mul(w, lg, wp, round_nearest), wp, round_nearest)
            mag += abs(float(weight)) * (abs(to_float(lg)) + 1.0)
        err = mpf_shift(from_float(mag * 1.0625 + 1e-300), -prec)
        return mpf_sub(acc, err, wp, round_floor), mpf_add(acc, err, wp, round_ceiling)

    @cached_property
    def _approx64(self):
        lo, hi = self.interval(DEFAULT_PRECISION)
        mid = to_float(mpf_add(lo, hi, 80, round_nearest)) / 2.0
        rad = max(abs(to_float(hi, rnd=round_ceiling) - mid), abs(mid - to_float(lo, rnd=round_floor)))
        return mid, rad

    def __float__(self):
        if not self._logs:
            return float(self._rational)
        return self._approx64[0]

    @property
    def error_radius(self):
        """Bound on ``|float(self) - value|``."""
        if not self._logs:
            return abs(float(self._rational) - 0.0) * 2.0 ** -53
        return self._approx64[1] + abs(self._approx64[0]) * 2.0 ** -52

    # ---------------------------------------------------------- exactness
    def reduced_exponents(self):
        """Exponents over a pairwise coprime base: ``{base: weight}``.

        The logarithmic part is zero iff this mapping is empty.
        """
        ints = []
        for b, _ in self._logs:
            ints.append(b.numerator)
            ints.append(b.denominator)
        base = coprime_base(ints)
        out = {}
        for b, w in self._logs:
            for p in base:
                e = _valuation(b.numerator, p) - _valuation(b.denominator, p)
                if e:
                    out[p] = out.get(p, 0) + w * e
        return {p: e for p, e in out.items() if e != 0}

    def _exact_log_sign(self, exps):
        lcm = 1
        for e in exps.values():
            lcm = lcm * e.denominator // gcd(lcm, e.denominator)
        ints = {p: int(e * lcm) for p, e in exps.items()}
        cost = sum(abs(m) * p.bit_length() for p, m in ints.items())
        if cost > _EXACT_POWER_BITS:
            return None
        num = den = 1
        for p, m in ints.items():
            if m > 0:
                num *= p**m
            else:
                den *= p ** (-m)
        return (num > den) - (num < den)

    def sign(self):
        """Exact sign: -1, 0 or 1."""
        if not self._logs:
            return (self._rational > 0) - (self._rational < 0)
        prec = current_precision()
        lo, hi = self.interval(prec)
        if mpf_sign(lo) > 0:
            return 1
        if mpf_sign(hi) < 0:
            return -1
        exps = self.reduced_exponents()
        if not exps:
            return (self._rational > 0) - (self._rational < 0)
        if self._rational == 0:
            s = self._exact_log_sign(exps)
            if s is not None:
                return s
        while prec < MAX_PRECISION:
            prec = min(2 * prec, MAX_PRECISION)
            lo, hi = self.interval(prec)
            if mpf_sign(lo) > 0:
                return 1
            if mpf_sign(hi) < 0:
                return -1
        raise PrecisionExhausted(f"sign of {self} undecided at {MAX_PRECISION} bits")

    def is_zero(self):
        return self.sign() == 0

    def compare(self, other):
        return (self - other).sign()

    def __eq__(self, other):
        try:
            return self.compare(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __bool__(self):
        return not self.is_zero()

    def simplified(self):
        """Equal value written over a coprime base with perfect powers reduced."""
        if not self._logs:
            return self
        logs = {}
        for p, e in self.reduced_exponents().items():
            root, k = _perfect_power(p)
            logs[root] = logs.get(root, 0) + e * k
        return ExactLogValue(self._rational, logs)

    # ------------------------------------------------------------ display
    def __str__(self):
        parts = []
        if self._rational or not self._logs:
            parts.append(str(self._rational))
        for b, w in self.simplified()._logs:
            coeff = "" if w == 1 else "-" if w == -1 else f"{w}*"
            parts.append(f"{coeff}log({b})")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"ExactLogValue({str(self)!r})"

    def to_json(self):
        return {
            "rational": str(self._rational),
            "logs": [[str(b), str(w)] for b, w in self._logs],
        }


ZERO = ExactLogValue()


def log_of(r, weight=1):
    """Shorthand for ``ExactLogValue.log``."""
    return ExactLogValue.log(r, weight)


def intervals(values, prec):
    return [v.interval(prec) for v in values]


def argmax_set(values, exact=False):
    """Indices attaining the maximum of a sequence of exact values.

    An interval filter discards values that are certainly below the maximum;
    exact comparisons decide among the remaining candidates.  ``exact=True``
    skips the filter.
    """
    values = [ExactLogValue.coerce(v) for v in values]
    if not values:
        return frozenset()
    candidates = list(range(len(values)))
    if not exact and len(values) > 1:
        prec = current_precision()
        bounds = intervals(values, prec)
        best_lo = bounds[0][0]
        for lo, _ in bounds[1:]:
            if mpf_cmp(lo, best_lo) > 0:
                best_lo = lo
        candidates = [i for i, (_, hi) in enumerate(bounds) if mpf_cmp(hi, best_lo) >= 0]
    best = [candidates[0]]
    for i in candidates[1:]:
        s = values[i].compare(values[best[0]])
        if s > 0:
            best = [i]
        elif s == 0:
            best.append(i)
    return frozenset(best)
