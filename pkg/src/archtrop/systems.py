"""Isolating the root log-norm vectors of small square systems.

Every root ``zeta`` of ``(f_1, ..., f_n)`` has ``Log|zeta|`` within
``log(t_i - 1)`` of ``ArchTrop(f_i)`` for each ``i``.  The points of
``ArchTrop(f_1) cap ... cap ArchTrop(f_n)`` are found by choosing one tie
pair of terms per polynomial, solving the resulting linear system in log
space exactly, and keeping solutions where each pair really attains the
maximum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from . import _linalg
from .exceptions import DimensionMismatch, NonIsolatedComponent
from .geometry import arch_newton, lower_hull
from .logvalue import ExactLogValue, argmax_set
from .polynomial import log_values_at

IN, OUT, UNKNOWN = "In", "Out", "Unknown"


@dataclass(frozen=True, eq=False)
class CandidatePoint:
    """An isolated point of the intersection; ``witness[i]`` is the tie pair used in ``f_i``."""

    coords: tuple
    witness: tuple

    def floats(self):
        return np.array([float(c) for c in self.coords])

    @property
    def err(self):
        return max(c.error_radius for c in self.coords)

    def same_point(self, other):
        return all(a == b for a, b in zip(self.coords, other.coords))

    def to_json(self):
        return {
            "coords": [{"float": float(c), "err": c.error_radius, "exact": str(c)} for c in self.coords],
            "witness": [list(p) for p in self.witness],
        }


def _tie_pairs(f):
    """Term pairs that lie on a common lower face (a superset of the lower edges)."""
    pairs = set()
    for face in lower_hull(arch_newton(f)):
        pairs.update(combinations(face.vertex_indices, 2))
    return sorted(pairs)


def _constraints(F, pairs, p0, N):
    """Rows ``alpha + beta . s >= 0`` saying pair ``pairs[i]`` is maximal in ``f_i`` on ``p0 + N s``."""
    out = []
    for f, (i, j) in zip(F, pairs):
        exps = f.support
        logc = f.log_abs_coefficients()
        for k in range(f.t):
            if k in (i, j):
                continue
            diff = [a - b for a, b in zip(exps[i], exps[k])]
            alpha = _linalg.dot(diff, p0) + logc[i] - logc[k]
            beta = [sum(Fraction(d) * nv for d, nv in zip(diff, col)) for col in N]
            out.append((alpha, beta, (f, i, k)))
    return out


def _verify(F, v):
    return all(len(argmax_set(log_values_at(f, v))) >= 2 for f in F)


def _line_interval(cons):
    """Exact parameter interval ``[lo, hi]`` on a line, ``None`` when empty."""
    lo = hi = None
    for alpha, beta, _ in cons:
        b = beta[0]
        if b == 0:
            if alpha.sign() < 0:
                return None
            continue
        bound = -alpha / b
        if b > 0:
            if lo is None or bound > lo:
                lo = bound
        elif hi is None or bound < hi:
            hi = bound
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def _lp_extent(cons, dim):
    """Float check of a polyhedron ``alpha + B s >= 0``: ``(feasible, positive_dimensional, point)``."""
    from scipy.optimize import linprog

    if not cons:
        return True, True, np.zeros(dim)
    A = -np.array([[float(b) for b in beta] for _, beta, _ in cons])
    b = np.array([float(alpha) for alpha, _, _ in cons])
    widths = []
    point = None
    for k in range(dim):
        vals = []
        for sgn in (1.0, -1.0):
            c = np.zeros(dim)
            c[k] = sgn
            res = linprog(c, A_ub=A, b_ub=b, bounds=[(None, None)] * dim, method="highs")
            if res.status == 2:
                return False, False, None
            if res.status == 3:
                vals.append(math.inf)
                continue
            point = res.x if point is None else point
            vals.append(sgn * res.fun)
        widths.append(math.inf if math.inf in vals else -vals[1] - vals[0])
    return True, max(widths) > 1e-9, point


def _solve_tuple(F, pairs):
    rows, rhs = [], []
    for f, (i, j) in zip(F, pairs):
        exps = f.support
        logc = f.log_abs_coefficients()
        rows.append([a - b for a, b in zip(exps[i], exps[j])])
        rhs.append(logc[j] - logc[i])
    sol = _linalg.solve_consistent(rows, rhs)
    if sol is None:
        return None
    p0, N = sol
    if not N:
        return ("point", tuple(p0)) if _verify(F, p0) else None
    cons = _constraints(F, pairs, p0, N)
    if len(N) == 1:
        iv = _line_interval(cons)
        if iv is None:
            return None
        lo, hi = iv
        if lo is not None and hi is not None and lo == hi:
            v = tuple(p + lo * Fraction(d) for p, d in zip(p0, N[0]))
            return ("point", v) if _verify(F, v) else None
        return ("component", {"pairs": [list(p) for p in pairs], "dimension": 1, "base": [float(x) for x in p0],
                              "directions": [[float(x) for x in N[0]]]})
    feasible, positive, point = _lp_extent(cons, len(N))
    if not feasible:
        return None
    if positive:
        return ("component", {"pairs": [list(p) for p in pairs], "dimension": len(N), "base": [float(x) for x in p0],
                              "directions": [[float(x) for x in col] for col in N]})
    # zero-width polyhedron: pin it down with its tight constraints
    tight = [c for c in cons if abs(float(c[0]) + sum(float(b) * s for b, s in zip(c[1], point))) < 1e-7]
    rows = [list(beta) for _, beta, _ in tight]
    if _linalg.rank(rows) < len(N):
        return None
    s_sol = _linalg.solve_consistent(rows, [-alpha for alpha, _, _ in tight])
    if s_sol is None or s_sol[1]:
        return None
    s = s_sol[0]
    v = tuple(p + sum((ExactLogValue.coerce(si) * Fraction(col[k]) for si, col in zip(s, N)), ExactLogValue())
              for k, p in enumerate(p0))
    return ("point", v) if _verify(F, v) else None


def tropical_intersection(F, n_jobs=None):
    """``(points, components)`` of ``ArchTrop(f_1) cap ... cap ArchTrop(f_n)``.

    ``components`` describes the tie-pair tuples whose solution sets meet
    every tropical hypersurface in positive dimension.
    """
    F = list(F)
    if not F:
        raise DimensionMismatch("empty system")
    n = F[0].n
    if any(f.n != n for f in F):
        raise DimensionMismatch("all polynomials must have the same number of variables")
    if len(F) != n:
        raise DimensionMismatch(f"need a square system, got {len(F)} polynomials in {n} variables")
    per_poly = [_tie_pairs(f) for f in F]
    tuples = list(product(*per_poly))
    if n_jobs in (None, 1):
        results = [_solve_tuple(F, tp) for tp in tuples]
    else:
        from joblib import Parallel, delayed

        results = Parallel(n_jobs=n_jobs, prefer="threads")(delayed(_solve_tuple)(F, tp) for tp in tuples)
    points, components = [], []
    for tp, res in zip(tuples, results):
        if res is None:
            continue
        kind, payload = res
        if kind == "component":
            components.append(payload)
            continue
        cand = CandidatePoint(payload, tp)
        if not any(cand.same_point(p) for p in points):
            points.append(cand)
    points.sort(key=lambda p: tuple(float(c) for c in p.coords))
    return points, components


def intersect_tropical(F, n_jobs=None):
    """Isolated intersection points; raises :class:`NonIsolatedComponent` on positive-dimensional overlap."""
    points, components = tropical_intersection(F, n_jobs)
    if components:
        raise NonIsolatedComponent(
            f"{len(components)} tie-pair tuples meet in positive dimension", points, components
        )
    return points


# ------------------------------------------------------------- regions


@dataclass(frozen=True, eq=False)
class IsolationRegion:
    """``center + B_{r_1}`` cap ... cap ``center + B_{r_n}`` with ``r_i = log(t_i - 1)``."""

    center: CandidatePoint
    radii: tuple
    supports: tuple = ()
    complete: bool = True

    @property
    def radius(self):
        """The ball intersection is the ball of the smallest radius."""
        best = self.radii[0]
        for r in self.radii[1:]:
            if r < best:
                best = r
        return best

    def shape(self):
        c = self.center.floats()
        r = float(self.radius)
        out = {"kind": "ball_intersection", "radius": r, "box": [[float(x) - r, float(x) + r] for x in c]}
        normals = []
        for f, r_i, (i, j) in zip(self.supports, self.radii, self.center.witness):
            normals.append(([a - b for a, b in zip(f[i], f[j])], float(r_i)))
        rows = [nv for nv, _ in normals]
        if rows and _linalg.rank(rows) == len(c):
            out["parallelepiped"] = [
                {"normal": nv, "half_width": hw * math.sqrt(sum(x * x for x in nv))} for nv, hw in normals
            ]
        return out

    def to_json(self):
        return {
            "center": self.center.to_json(),
            "radii": [{"float": float(r), "exact": str(r)} for r in self.radii],
            "shape": self.shape(),
            "complete": self.complete,
        }


def isolation_regions(points, F, complete=True):
    """One region per candidate; ``complete=False`` records a positive-dimensional overlap."""
    radii = tuple(ExactLogValue.log(f.t - 1) for f in F)
    supports = tuple(tuple(f.support) for f in F)
    return [IsolationRegion(p, radii, supports, complete) for p in points]


def _exact_distance_verdict(center, w, r):
    diffs = [ExactLogValue.coerce(x) - c for x, c in zip(w, center.coords)]
    nonzero = [d for d in diffs if not d.is_zero()]
    if not nonzero:
        return IN
    if len(nonzero) == 1:
        d = nonzero[0]
        gap = r - (d if d.sign() > 0 else -d)
        return IN if gap.sign() >= 0 else OUT
    import mpmath

    ctx = mpmath.MPContext()
    for prec in (128, 512, 2048):
        ctx.prec = prec + 32
        total_lo = total_hi = ctx.mpf(0)
        for d in nonzero:
            lo, hi = (ctx.make_mpf(x) for x in d.interval(prec))
            sq = [lo * lo, hi * hi]
            s_lo = ctx.mpf(0) if lo <= 0 <= hi else min(sq)
            total_lo += s_lo
            total_hi += max(sq)
        rlo, rhi = (ctx.make_mpf(x) for x in r.interval(prec))
        slack = ctx.mpf(2) ** (-prec)
        if total_hi + slack < rlo * rlo:
            return IN
        if total_lo - slack > rhi * rhi:
            return OUT
    return UNKNOWN


def region_contains(regions, w, err=0.0):
    """``In`` / ``Out`` / ``Unknown`` per region for a log-space point ``w``.

    Exact coordinates (rationals or :class:`ExactLogValue`) with ``err=0``
    are decided exactly when one coordinate differs from the center, and
    with escalating interval precision otherwise.
    """
    exact = err == 0 and all(isinstance(x, (ExactLogValue, int, Fraction)) for x in w)
    wf = np.array([float(x) for x in w])
    out = []
    for reg in regions:
        if exact:
            out.append(_exact_distance_verdict(reg.center, w, reg.radius))
            continue
        d = float(np.linalg.norm(wf - reg.center.floats()))
        slack = err + reg.center.err * math.sqrt(len(wf)) + 4 * np.finfo(float).eps * (1 + d)
        r = float(reg.radius)
        if d + slack <= r:
            out.append(IN)
        elif d - slack > r:
            out.append(OUT)
        else:
            out.append(UNKNOWN)
    return out


def isolation_report(F, n_jobs=None):
    """Candidates, regions and completeness in one pass (no exception on overlap)."""
    points, components = tropical_intersection(F, n_jobs)
    regions = isolation_regions(points, F, complete=not components)
    return {"candidates": points, "regions": regions, "components": components}
