"""Archimedean Newton polytopes and their lower hulls.

The lifted point of a term ``c x**a`` is ``(a, -log|c|)``.  A face is a lower
face when it has an outer normal ``(v, -1)``; equivalently it maximises
``v . a + log|c|`` over the terms.  All orientation tests are rational linear
combinations of the lifts, so they are decided exactly on
:class:`~archtrop.logvalue.ExactLogValue`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import _linalg
from .logvalue import ExactLogValue, argmax_set


@dataclass(frozen=True, eq=False)
class LiftedPolytope:
    """One lifted point ``(exponent, -log|c|)`` per term of ``f``."""

    n: int
    exponents: tuple
    lifts: tuple

    def __len__(self):
        return len(self.exponents)

    @property
    def points(self):
        return list(zip(self.exponents, self.lifts))


@dataclass(frozen=True, eq=False)
class LowerFace:
    """A maximal lower face.

    ``normal`` is ``v`` in the outer normal ``(v, -1)``; ``offset`` is the
    common value ``v . a - lift`` on the face, which every other lifted point
    undercuts strictly.
    """

    vertex_indices: tuple
    normal: tuple
    offset: ExactLogValue
    dim: int
    exponents: tuple = field(repr=False, default=())

    @property
    def slope(self):
        """The single normal coordinate of a univariate lower edge."""
        return self.normal[0]

    @property
    def length(self):
        """Horizontal length of a univariate lower edge."""
        xs = [e[0] for e in self.exponents]
        return max(xs) - min(xs)


class NewtonVertices(NamedTuple):
    vertices: list
    vertex_support: bool
    dim: int


def arch_newton(f):
    """Lifted point set of ``f``."""
    return LiftedPolytope(f.n, tuple(f.support), tuple(-c for c in f.log_abs_coefficients()))


def _orientation(p, q, r):
    """Sign of the 2d cross product ``(q - p) x (r - p)`` with exact lifts."""
    (px, ph), (qx, qh), (rx, rh) = p, q, r
    return ((rh - ph) * (qx - px) - (qh - ph) * (rx - px)).sign()


def _lower_chain(P):
    order = sorted(range(len(P)), key=lambda i: P.exponents[i][0])
    pts = [(P.exponents[i][0], P.lifts[i]) for i in range(len(P))]
    chain = []
    for i in order:
        while len(chain) >= 2 and _orientation(pts[chain[-2]], pts[chain[-1]], pts[i]) < 0:
            chain.pop()
        chain.append(i)
    faces = []
    group = [chain[0]]
    slope = None
    for i in chain[1:]:
        a, b = pts[group[-1]], pts[i]
        s = (b[1] - a[1]) / (b[0] - a[0])
        if slope is None or s.compare(slope) == 0:
            group.append(i)
            slope = s if slope is None else slope
            continue
        faces.append(_univariate_face(P, group, slope))
        group = [group[-1], i]
        slope = s
    if slope is not None:
        faces.append(_univariate_face(P, group, slope))
    return faces


def _univariate_face(P, group, slope):
    i0 = group[0]
    offset = slope * P.exponents[i0][0] - P.lifts[i0]
    return LowerFace(tuple(group), (slope,), offset, 1, tuple(P.exponents[i] for i in group))


def affine_frame(exponents):
    """``(rank, columns)`` of the affine span of integer exponent vectors.

    ``columns`` indexes coordinates on which the projection of the span is
    injective, so lower faces can be computed in ``rank`` dimensions.
    """
    base = exponents[0]
    diffs = [[a - b for a, b in zip(e, base)] for e in exponents[1:]]
    if not diffs:
        return 0, []
    cols = _linalg.independent_columns(diffs)
    return len(cols), cols


def lower_hull_bruteforce(P):
    """All maximal lower faces by enumerating affinely independent subsets.

    Runs in ``O(t**(k+2))`` for a ``k``-dimensional Newton polytope.
    """
    t = len(P)
    k, cols = affine_frame(list(P.exponents))
    if k == 0:
        return []
    seen = {}
    for subset in combinations(range(t), k + 1):
        base = P.exponents[subset[0]]
        rows = [[P.exponents[i][c] - base[c] for c in cols] for i in subset[1:]]
        if _linalg.det(rows) == 0:
            continue
        rhs = [P.lifts[i] - P.lifts[subset[0]] for i in subset[1:]]
        vj = _linalg.matvec(_linalg.inverse(rows), rhs)
        v = [ExactLogValue()] * P.n
        for c, val in zip(cols, vj):
            v[c] = val
        values = [_linalg.dot(e, v) - h for e, h in zip(P.exponents, P.lifts)]
        top = argmax_set(values)
        if not set(subset) <= top:
            continue
        key = tuple(sorted(top))
        if key not in seen:
            seen[key] = LowerFace(key, tuple(v), values[subset[0]], k, tuple(P.exponents[i] for i in key))
    return list(seen.values())


def lower_hull(P):
    """Maximal lower faces of the lifted polytope.

    Univariate hulls are returned as edges in left-to-right (increasing slope)
    order, with collinear interior points kept on their edge.
    """
    if len(P) < 2:
        return []
    if P.n == 1:
        return _lower_chain(P)
    faces = lower_hull_bruteforce(P)
    return sorted(faces, key=lambda F: F.vertex_indices)


def _hull2d_vertices(pts):
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def newt_vertices(f):
    """Vertices of the ordinary Newton polytope, whether they exhaust the support, and its dimension."""
    support = list(f.support)
    k, cols = affine_frame(support)
    if k == 0:
        return NewtonVertices(support, True, 0)
    proj = {e: tuple(e[c] for c in cols) for e in support}
    if k == 1:
        lo = min(support, key=lambda e: proj[e])
        hi = max(support, key=lambda e: proj[e])
        verts = [lo, hi]
    elif k == 2:
        keep = set(_hull2d_vertices(list(proj.values())))
        verts = [e for e in support if proj[e] in keep]
    else:
        from scipy.spatial import ConvexHull

        hull = ConvexHull(np.array([proj[e] for e in support], dtype=float))
        verts = [support[i] for i in sorted(hull.vertices)]
    verts = sorted(verts)
    return NewtonVertices(verts, len(verts) == len(support), k)
