"""Univariate root-norm bounds read off the lower hull of ``ArchNewt(f)``.

All bounds are in log space.  Quantities that are rational combinations of
logs of rationals (slopes, ``log(t-1)``) stay exact; only the closed-form
constants such as ``log((sqrt(5)+1)/2)`` are carried as floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InvalidArity, SinglePoint, ZeroLeading
from .geometry import arch_newton, lower_hull
from .logvalue import ExactLogValue, as_fraction
from .tropical import archtrop_1d

LOG_PHI = math.log((math.sqrt(5.0) + 1.0) / 2.0)
LOG_PHI_INV = -LOG_PHI

CAUCHY = "Cauchy"
ELBOW = "Elbow"
JENSEN = "Jensen"


@dataclass(frozen=True, eq=False)
class LogQuantity:
    """``base + offset``: an exact log value shifted by a float constant."""

    base: ExactLogValue
    offset: float = 0.0
    label: str = ""

    def __float__(self):
        return float(self.base) + self.offset

    @property
    def err(self):
        return self.base.error_radius + 4 * math.ulp(abs(float(self)) + 1.0)

    def __str__(self):
        if not self.label:
            return str(self.base)
        if self.base.is_zero():
            return self.label
        return f"{self.base} + {self.label}"

    def to_json(self):
        return {"float": float(self), "err": self.err, "exact": str(self)}


@dataclass(frozen=True, eq=False)
class AnnulusBound:
    """Log-space interval ``[inner, outer]`` for root norms."""

    inner: LogQuantity
    outer: LogQuantity
    provenance: str

    @property
    def radii(self):
        return math.exp(float(self.inner)), math.exp(float(self.outer))

    def contains(self, log_norm, err=0.0):
        """Whether a log-norm (with error radius) can lie in the interval."""
        lo = float(self.inner) - self.inner.err - err
        hi = float(self.outer) + self.outer.err + err
        return lo <= log_norm <= hi

    def to_json(self):
        return {"inner": self.inner.to_json(), "outer": self.outer.to_json(), "provenance": self.provenance}


def _slopes(f):
    f.require_univariate()
    if f.t < 2:
        raise SinglePoint("a monomial has no nonzero roots")
    return archtrop_1d(f)


def cauchy_annulus(f):
    """Every nonzero root has log-norm in ``[sigma_- + log(1/phi), sigma_+ + log(phi)]``."""
    T = _slopes(f)
    lo, hi = T.slopes[0], T.slopes[-1]
    return AnnulusBound(
        LogQuantity(lo, LOG_PHI_INV, "log((sqrt(5)-1)/2)"),
        LogQuantity(hi, LOG_PHI, "log((sqrt(5)+1)/2)"),
        CAUCHY,
    )


def _magnitude(x):
    if hasattr(x, "is_zero") and x.is_zero():
        return 0.0
    if hasattr(x, "log_abs"):
        return math.exp(float(x.log_abs()))
    return abs(complex(x))


def montel_bound(c0, cp, p, q):
    """Some root has norm at most ``|c0/cp|**(1/p) * binom(p+q, q)**(1/p)``."""
    p, q = int(p), int(q)
    if p < 1 or q < 0:
        raise ValueError("need p >= 1 and q >= 0")
    mag_p = _magnitude(cp)
    if mag_p == 0:
        raise ZeroLeading("c_p must be nonzero")
    ratio = _magnitude(c0) / mag_p
    return (ratio * math.comb(p + q, q)) ** (1.0 / p)


def montel_sharp_polynomial(p, q, radius=2):
    """``(1 + x/radius)**(p+q)``: attains the Montel bound, which equals ``radius``.

    Its constant term is 1 and its ``x**p`` coefficient is
    ``binom(p+q, p) / radius**p``.  The radius is kept rational so the
    expansion stays exact.
    """
    from .polynomial import LaurentPoly, RationalComplex, Term

    r = as_fraction(radius)
    if r <= 0:
        raise ValueError("radius must be positive")
    m = int(p) + int(q)
    return LaurentPoly(1, [Term((i,), RationalComplex(Fraction(math.comb(m, i)) / r**i)) for i in range(m + 1)])


def smallest_root_bracket(f):
    """Bracket for the log-norm of a smallest root, with nothing below its lower end."""
    T = _slopes(f)
    lo = T.slopes[0]
    upper = lo + ExactLogValue(1) + ExactLogValue.log(f.t - 1)
    return AnnulusBound(LogQuantity(lo, LOG_PHI_INV, "log((sqrt(5)-1)/2)"), LogQuantity(upper), ELBOW)


# ------------------------------------------------------------- gap count


@dataclass(frozen=True, eq=False)
class RegionCount:
    """Closed log-space region (``None`` marks an infinite end) and its root count."""

    lo: object
    hi: object
    count: int

    def contains(self, x, err=0.0):
        if self.lo is not None and x < float(self.lo) - err:
            return False
        if self.hi is not None and x > float(self.hi) + err:
            return False
        return True

    def to_json(self):
        def end(v):
            return None if v is None else {"float": float(v), "err": v.error_radius, "exact": str(v)}

        return {"lo": end(self.lo), "hi": end(self.hi), "count": self.count}


@dataclass(frozen=True, eq=False)
class GapCountReport:
    cut_slopes: tuple
    counts: tuple

    def __bool__(self):
        return bool(self.cut_slopes)

    def to_json(self):
        return {
            "gaps": [[{"float": float(a), "exact": str(a)}, {"float": float(b), "exact": str(b)}] for a, b in self.cut_slopes],
            "counts": [c.to_json() for c in self.counts],
        }


def gap_counts(f):
    """Exact root counts in the regions separated by wide slope gaps.

    A gap between adjacent slopes qualifies when it exceeds ``2*log(t-1)``.
    Cutting at qualifying gaps ``j_1 < ... < j_r`` gives regions
    ``(-inf, s_{j_1} + L]``, ``[s_{j_1+1} - L, s_{j_2} + L]``, ...,
    ``[s_{j_r+1} - L, +inf)`` with ``L = log(t-1)``; each region holds as many
    roots as the horizontal extent of the lower edges between its cuts.
    """
    f.require_univariate()
    if f.t < 2:
        raise SinglePoint("a monomial has no nonzero roots")
    faces = lower_hull(arch_newton(f))
    L = ExactLogValue.log(f.t - 1)
    twice = L * 2
    cuts = [j for j in range(len(faces) - 1) if (faces[j + 1].slope - faces[j].slope - twice).sign() > 0]
    if not cuts:
        return GapCountReport((), ())
    a0 = faces[0].exponents[0][0]
    bounds = [None]
    extents = [a0]
    for j in cuts:
        bounds.append((faces[j].slope + L, faces[j + 1].slope - L))
        extents.append(max(e[0] for e in faces[j].exponents))
    extents.append(max(e[0] for e in faces[-1].exponents))
    regions = []
    for r in range(len(cuts) + 1):
        lo = bounds[r][1] if r > 0 else None
        hi = bounds[r + 1][0] if r < len(cuts) else None
        regions.append(RegionCount(lo, hi, extents[r + 1] - extents[r]))
    return GapCountReport(tuple((faces[j].slope, faces[j + 1].slope) for j in cuts), tuple(regions))


# ------------------------------------------------------ Hausdorff bounds


TROP_TO_AMOEBA = "archtrop_to_amoeba"
AMOEBA_TO_TROP = "amoeba_to_archtrop"
SYMMETRIC = "hausdorff"


@dataclass(frozen=True)
class HausdorffBound:
    name: str
    value: float
    direction: str
    provenance: str
    exact: str = ""

    def to_json(self):
        return {
            "name": self.name,
            "value": self.value,
            "applicable": True,
            "direction": self.direction,
            "provenance": self.provenance,
            "exact": self.exact,
        }


def hausdorff_upper(t, k, ell=None, d=None, vertex_support=False):
    """Every applicable upper bound on (directed) distances between amoeba and ArchTrop.

    ``ell`` is the number of ArchTrop points and ``d`` the degree span; both
    only make sense for one variable.  Bounds with direction
    ``archtrop_to_amoeba`` control ``sup_{ArchTrop} inf_{Amoeba}``.
    """
    t, k = int(t), int(k)
    if k < 1 or t < k + 1:
        raise InvalidArity(f"need t >= k + 1 >= 2, got t={t}, k={k}")
    L = math.log(t - 1)
    XL = ExactLogValue.log(t - 1)
    out = [
        HausdorffBound("general", (2 * t - 3) * L, SYMMETRIC, "term-count", str(XL * (2 * t - 3))),
        HausdorffBound("amoeba_to_archtrop", L, AMOEBA_TO_TROP, "nearest-tie", str(XL)),
    ]
    if t == k + 1 or vertex_support:
        out.append(HausdorffBound("containment", 0.0, TROP_TO_AMOEBA, "simplex-containment", "0"))
    if ell is not None:
        ell = int(ell)
        out.append(HausdorffBound("few_points", (2 * ell - 1) * L, TROP_TO_AMOEBA, "slope-chain",
                                  str(XL * (2 * ell - 1))))
        if ell == 3:
            out.append(HausdorffBound("three_points", 1 + 3 * L, TROP_TO_AMOEBA, "three-point-gap", str(XL * 3 + 1)))
        elif ell == 2:
            out.append(HausdorffBound("two_points", 1 + L, TROP_TO_AMOEBA, "elbow", str(XL + 1)))
        elif ell == 1:
            out.append(HausdorffBound("flat", LOG_PHI, TROP_TO_AMOEBA, "cauchy-flat", "log((sqrt(5)+1)/2)"))
            if d is not None and 2 * math.log(t) < int(d) - 1:
                val = -math.log1p(-2 * math.log(t) / (int(d) - 1))
                out.append(HausdorffBound("middle_flat", val, TROP_TO_AMOEBA, "jensen",
                                          f"-log(1 - 2*log({t})/{int(d) - 1})"))
    return out


def hausdorff_upper_for(f):
    """:func:`hausdorff_upper` with ``t``, ``k``, ``ell``, ``d`` read off ``f``."""
    from .geometry import newt_vertices

    nv = newt_vertices(f)
    ell = d = None
    if f.n == 1 and f.t >= 2:
        ell = len(archtrop_1d(f))
        d = f.degree_span()
    return hausdorff_upper(f.t, max(nv.dim, 1), ell, d, nv.vertex_support)


# ----------------------------------------------------- Jensen annulus


def jensen_epsilon(t, d, log_c1=0, log_ct=0):
    """``2*(log t - (log|c_1| + log|c_t|)/2) / (d - 1)`` for normalized coefficients."""
    d = int(d)
    if d < 2:
        raise ValueError("degree span must be at least 2")
    lc = ExactLogValue.coerce(log_c1) + ExactLogValue.coerce(log_ct)
    return (ExactLogValue.log(int(t)) * 2 - lc) / (d - 1)


def annulus_certificate(f, normalize=True):
    """Annulus around ``e**sigma`` holding at least one root, or ``None``.

    With ``normalize`` the polynomial is rescaled in log space so that all
    ``|c_i| <= 1``; the rescaling point is the ArchTrop point maximising
    ``log|c_1| + log|c_t|`` after normalization (the optimum of a concave
    piecewise-linear function, attained at a breakpoint).  Without it the
    coefficients must already satisfy ``|c_i| <= 1`` (``sigma = 0``).
    """
    f.require_univariate()
    if f.t < 2:
        return None
    d = f.degree_span()
    if d < 2:
        return None
    a = [e[0] - f.support[0][0] for e in f.support]
    logc = f.log_abs_coefficients()
    if normalize:
        best = None
        for sigma in archtrop_1d(f).slopes:
            vals = [c + sigma * ai for c, ai in zip(logc, a)]
            top = vals[0]
            for v in vals[1:]:
                if v > top:
                    top = v
            score = vals[0] + vals[-1] - top * 2
            if best is None or score > best[0]:
                best = (score, sigma)
        score, sigma = best
    else:
        if any(c.sign() > 0 for c in logc):
            return None
        sigma = ExactLogValue()
        score = logc[0] + logc[-1]
    eps = jensen_epsilon(f.t, d, score, 0)
    if eps.sign() <= 0 or (eps - 1).sign() >= 0:
        return None
    shrink = math.log1p(-float(eps))
    label = f"log(1 - ({eps}))"
    return AnnulusBound(LogQuantity(sigma, shrink, label), LogQuantity(sigma, -shrink, f"-{label}"), JENSEN)
