"""The Archimedean tropical variety ``ArchTrop(f)``.

``Log|x|`` lies in ``ArchTrop(f)`` exactly when the maximum of the term
magnitudes ``|c_i x**a_i|`` is attained at least twice.  For one variable the
set is the list of lower-hull slopes; for two variables it is a piecewise
linear curve made of segments, rays and (for binomial-like supports) lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import _linalg
from .exceptions import (
    DimensionMismatch,
    EmptyTropicalSet,
    ModelMismatch,
    NonpositiveQuery,
    NotPlanar,
    SinglePoint,
)
from .geometry import affine_frame, arch_newton, lower_hull
from .logvalue import ExactLogValue, argmax_set, as_fraction
from .polynomial import LOGPOLAR, log_values_at

IN = "In"
OUT = "Out"


class Estimate(NamedTuple):
    """A floating point value with an absolute error bound."""

    value: float
    err: float


def _coord_json(x):
    return {"float": float(x), "err": x.error_radius, "exact": str(x)}


# ----------------------------------------------------------------- n = 1


@dataclass(frozen=True, eq=False)
class UnivariateArchTrop:
    """Sorted tropical points with multiplicities (lower-edge lengths)."""

    points: tuple

    @property
    def slopes(self):
        return [s for s, _ in self.points]

    @property
    def multiplicities(self):
        return [m for _, m in self.points]

    def __len__(self):
        return len(self.points)

    def floats(self):
        return np.array([float(s) for s in self.slopes])

    def same_as(self, other):
        """Exact multiset equality."""
        if len(self) != len(other):
            return False
        return all(m1 == m2 and s1 == s2 for (s1, m1), (s2, m2) in zip(self.points, other.points))

    def to_json(self):
        return {
            "kind": "points",
            "points": [{"slope": _coord_json(s), "multiplicity": m} for s, m in self.points],
        }


def archtrop_1d(f):
    """Lower-hull slopes of ``ArchNewt(f)`` with their multiplicities."""
    f.require_univariate()
    if f.t < 2:
        raise SinglePoint("a monomial has empty tropical variety")
    faces = lower_hull(arch_newton(f))
    return UnivariateArchTrop(tuple((F.slope, F.length) for F in faces))


# ----------------------------------------------------------------- n = 2


@dataclass(frozen=True, eq=False)
class CurveVertex:
    coords: tuple
    terms: tuple

    def floats(self):
        return np.array([float(c) for c in self.coords])

    @property
    def err(self):
        return max(c.error_radius for c in self.coords)


@dataclass(frozen=True, eq=False)
class CurveCell:
    """A one-dimensional cell on which two (or more) terms tie for the maximum.

    ``kind`` is ``"segment"`` (``ends`` holds two vertex indices), ``"ray"``
    (``ends`` holds the base vertex and ``direction`` points away from it) or
    ``"line"`` (no vertex; ``point`` is any point on it).
    """

    kind: str
    pair: tuple
    terms: tuple
    ends: tuple = ()
    direction: tuple = ()
    point: tuple = field(default=(), repr=False)


@dataclass(frozen=True, eq=False)
class TropicalCurve:
    vertices: tuple
    cells: tuple

    @property
    def segments(self):
        return [c for c in self.cells if c.kind == "segment"]

    @property
    def rays(self):
        return [c for c in self.cells if c.kind == "ray"]

    @property
    def lines(self):
        return [c for c in self.cells if c.kind == "line"]

    def vertex_index(self, coords):
        for i, v in enumerate(self.vertices):
            if all(a == b for a, b in zip(v.coords, coords)):
                return i
        return None

    def geometry(self):
        """Float cells as ``(kind, start, end_or_direction, err)`` tuples."""
        out = []
        for c in self.cells:
            if c.kind == "segment":
                a, b = (self.vertices[i] for i in c.ends)
                out.append(("segment", a.floats(), b.floats(), max(a.err, b.err)))
            elif c.kind == "ray":
                a = self.vertices[c.ends[0]]
                out.append(("ray", a.floats(), np.array(c.direction, dtype=float), a.err))
            else:
                p = np.array([float(x) for x in c.point])
                err = max(x.error_radius for x in c.point)
                out.append(("line", p, np.array(c.direction, dtype=float), err))
        return out

    def to_json(self):
        return {
            "kind": "curve",
            "vertices": [
                {"x": _coord_json(v.coords[0]), "y": _coord_json(v.coords[1]), "terms": list(v.terms)}
                for v in self.vertices
            ],
            "segments": [{"ends": list(c.ends), "pair": list(c.pair), "terms": list(c.terms)} for c in self.segments],
            "rays": [
                {"base": c.ends[0], "dir": list(c.direction), "pair": list(c.pair), "terms": list(c.terms)}
                for c in self.rays
            ],
            "lines": [
                {"point": [_coord_json(x) for x in c.point], "dir": list(c.direction), "pair": list(c.pair),
                 "terms": list(c.terms)}
                for c in self.lines
            ],
        }


def _line_cell(exps, logc, i, j):
    """Cell of ``{v : val_i(v) = val_j(v) >= val_k(v)}`` on a planar tie line.

    Returns ``(terms, point, direction, lo, hi)`` with ``None`` for infinite
    parameter bounds, or ``None`` when the cell has no interior.
    """
    delta = [a - b for a, b in zip(exps[i], exps[j])]
    norm2 = sum(d * d for d in delta)
    rhs = logc[j] - logc[i]
    p0 = [rhs * Fraction(d, norm2) for d in delta]
    g = math.gcd(delta[0], delta[1])
    d = (-delta[1] // g, delta[0] // g)
    lo = hi = None
    ties = [i, j]
    for k in range(len(exps)):
        if k in (i, j):
            continue
        diff = [a - b for a, b in zip(exps[i], exps[k])]
        alpha = _linalg.dot(diff, p0) + logc[i] - logc[k]
        beta = diff[0] * d[0] + diff[1] * d[1]
        if beta == 0:
            s = alpha.sign()
            if s < 0:
                return None
            if s == 0:
                ties.append(k)
            continue
        bound = -alpha / beta
        if beta > 0:
            if lo is None or bound > lo:
                lo = bound
        elif hi is None or bound < hi:
            hi = bound
    if lo is not None and hi is not None and lo >= hi:
        return None
    return tuple(sorted(ties)), p0, d, lo, hi


def archtrop_2d(f):
    """Vertices, segments, rays and lines of ``ArchTrop(f)`` for two variables."""
    if f.n != 2:
        raise NotPlanar(f"expected two variables, got {f.n}")
    if f.t < 2:
        raise SinglePoint("a monomial has empty tropical variety")
    exps = f.support
    logc = f.log_abs_coefficients()
    vertices = []
    k, _ = affine_frame(exps)
    if k == 2:
        for face in lower_hull(arch_newton(f)):
            vertices.append(CurveVertex(tuple(face.normal), face.vertex_indices))
    cells = {}
    for i, j in combinations(range(f.t), 2):
        res = _line_cell(exps, logc, i, j)
        if res is None:
            continue
        terms, p0, d, lo, hi = res
        if terms in cells:
            continue

        def at(s):
            return tuple(p + s * di for p, di in zip(p0, d))

        ends = []
        for s in (lo, hi):
            if s is None:
                continue
            pt = at(s)
            idx = next((n for n, v in enumerate(vertices) if all(a == b for a, b in zip(v.coords, pt))), None)
            if idx is None:
                vertices.append(CurveVertex(pt, terms))
                idx = len(vertices) - 1
            ends.append(idx)
        if lo is not None and hi is not None:
            cells[terms] = CurveCell("segment", (i, j), terms, tuple(ends))
        elif lo is not None:
            cells[terms] = CurveCell("ray", (i, j), terms, tuple(ends), d)
        elif hi is not None:
            cells[terms] = CurveCell("ray", (i, j), terms, tuple(ends), (-d[0], -d[1]))
        else:
            cells[terms] = CurveCell("line", (i, j), terms, (), d, tuple(p0))
    return TropicalCurve(tuple(vertices), tuple(cells.values()))


def archtrop(f):
    """Dispatch to the univariate or planar construction."""
    if f.n == 1:
        return archtrop_1d(f)
    if f.n == 2:
        return archtrop_2d(f)
    raise DimensionMismatch("explicit tropical sets are built for one or two variables only; use member()")


# ------------------------------------------------------------- membership


@dataclass(frozen=True)
class LogPoint:
    """A query point given by its logarithms: ``v_i = exp(coords_i)``."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_fraction(c) for c in self.coords))


@dataclass(frozen=True)
class MembershipVerdict:
    status: str
    dominating: frozenset

    @property
    def inside(self):
        return self.status == IN


def query_log_point(f, v):
    """Exact ``Log|v|`` for a membership query, checking the coefficient model."""
    if isinstance(v, LogPoint):
        if f.model != LOGPOLAR:
            raise ModelMismatch("log-form query points need log-polar coefficients")
        coords = [ExactLogValue(u) for u in v.coords]
    else:
        if f.model == LOGPOLAR:
            raise ModelMismatch("rational query points need rational-complex coefficients")
        coords = []
        for x in v:
            q = as_fraction(x)
            if q <= 0:
                raise NonpositiveQuery(f"query coordinate {q} is not positive")
            coords.append(ExactLogValue.log(q))
    if len(coords) != f.n:
        raise DimensionMismatch(f"query has {len(coords)} coordinates, expected {f.n}")
    return coords


def member(f, v, exact=False):
    """Decide whether ``Log|v|`` lies in ``ArchTrop(f)``.

    ``v`` is a sequence of positive rationals (rational-complex model) or a
    :class:`LogPoint` (log-polar model).  ``exact=True`` bypasses the interval
    filter and compares every pair exactly.
    """
    values = log_values_at(f, query_log_point(f, v))
    dom = argmax_set(values, exact=exact)
    return MembershipVerdict(IN if len(dom) >= 2 else OUT, dom)


# --------------------------------------------------------------- distance


def _segment_distance(p, a, b):
    ab = b - a
    denom = float(ab @ ab)
    s = 0.0 if denom == 0 else min(1.0, max(0.0, float((p - a) @ ab) / denom))
    return float(np.linalg.norm(p - (a + s * ab)))


def _ray_distance(p, a, d):
    s = max(0.0, float((p - a) @ d) / float(d @ d))
    return float(np.linalg.norm(p - (a + s * d)))


def _line_distance(p, a, d):
    s = float((p - a) @ d) / float(d @ d)
    return float(np.linalg.norm(p - (a + s * d)))


def distance_to(v, T, err=0.0):
    """Euclidean distance from a float point to a tropical set, with error bound."""
    if isinstance(T, UnivariateArchTrop):
        if len(T) == 0:
            raise EmptyTropicalSet("empty tropical set")
        x = float(np.asarray(v, dtype=float).reshape(-1)[0])
        dists = [abs(x - float(s)) for s in T.slopes]
        k = int(np.argmin(dists))
        slack = T.slopes[k].error_radius + 4 * np.finfo(float).eps * (abs(x) + 1)
        return Estimate(float(dists[k]), float(err + slack))
    if isinstance(T, TropicalCurve):
        cells = T.geometry()
        if not cells and not T.vertices:
            raise EmptyTropicalSet("empty tropical curve")
        p = np.asarray(v, dtype=float).reshape(-1)
        best, best_err = math.inf, 0.0
        for kind, a, b, cerr in cells:
            if kind == "segment":
                dist = _segment_distance(p, a, b)
            elif kind == "ray":
                dist = _ray_distance(p, a, b)
            else:
                dist = _line_distance(p, a, b)
            if dist < best:
                best, best_err = dist, cerr
        for vert in T.vertices:
            dist = float(np.linalg.norm(p - vert.floats()))
            if dist < best:
                best, best_err = dist, vert.err
        slack = best_err + 8 * np.finfo(float).eps * (float(np.abs(p).max()) + 1)
        return Estimate(float(best), float(err + slack))
    raise TypeError(f"unsupported tropical set {type(T).__name__}")


def sample_points(T, n_points, window=None, rng=None):
    """Float points spread along a tropical set (bounded by ``window`` on rays)."""
    rng = np.random.default_rng(rng)
    if isinstance(T, UnivariateArchTrop):
        return T.floats().reshape(-1, 1)
    cells = T.geometry()
    if window is None:
        window = 3.0
    pts = []
    for k in range(n_points):
        kind, a, b, _ = cells[k % len(cells)]
        s = rng.uniform(0.0, 1.0)
        if kind == "segment":
            pts.append(a + s * (b - a))
        elif kind == "ray":
            pts.append(a + s * window * b / np.linalg.norm(b))
        else:
            pts.append(a + (2 * s - 1) * window * b / np.linalg.norm(b))
    return np.array(pts)
