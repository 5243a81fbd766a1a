"""Numerical amoeba oracle.

Univariate roots come from Aberth iteration started on circles of radius
``e**sigma`` for the lower-hull slopes ``sigma``.  Terms are evaluated in log
scale (every term divided by the largest one) so coefficients like
``16**-18`` never underflow.  Error radii are Weierstrass inclusion disks:
``|z - z_i| <= d * |W_i|`` with ``W_i = p(z_i) / (c_t * prod_{j != i}(z_i - z_j))``
contain all roots, and a connected union of ``m`` disks contains exactly
``m`` of them.  When a cluster is wider than the target, the iteration is
repeated in mpmath at doubling precision.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import mpmath
import numpy as np
from scipy.optimize import brentq
from scipy.spatial import cKDTree

from .exceptions import ConvergenceFailure, DegenerateFiber, EmptySet, NotPlanar
from .polynomial import LogPolar
from .tropical import TropicalCurve, UnivariateArchTrop, archtrop_2d, distance_to

EPS = np.finfo(float).eps
DEFAULT_TARGET = 1e-12
MAX_BITS = 1024


@dataclass(frozen=True)
class Root:
    value: complex
    error_radius: float
    multiplicity: int = 1

    @property
    def log_norm(self):
        return math.log(abs(self.value))

    @property
    def log_error(self):
        """Radius of the log-norm interval implied by ``error_radius``."""
        r = self.error_radius / abs(self.value)
        return math.inf if r >= 1 else -math.log1p(-r)


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    degree_accounted: int
    meets_target: bool = True
    bits: int = 53

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    @property
    def values(self):
        return np.array([r.value for r in self.roots])

    def expanded_log_norms(self):
        """One log-norm per root, counting multiplicity."""
        out = []
        for r in self.roots:
            out.extend([r.log_norm] * r.multiplicity)
        return np.array(sorted(out))

    def to_json(self):
        return {
            "roots": [
                {"re": r.value.real, "im": r.value.imag, "err": r.error_radius, "multiplicity": r.multiplicity}
                for r in self.roots
            ],
            "degree_accounted": self.degree_accounted,
            "meets_target": self.meets_target,
            "bits": self.bits,
        }


# ------------------------------------------------------ numeric sparse


@dataclass(frozen=True)
class _Sparse:
    """Univariate sparse data with exponents shifted to start at 0."""

    a: np.ndarray
    logc: np.ndarray
    arg: np.ndarray
    exact: tuple = ()


def _coefficient_data(c):
    if isinstance(c, LogPolar):
        return float(c.log_mag), math.pi * float(c.phase)
    z = complex(c)
    return float(c.log_abs()), math.atan2(z.imag, z.real) if z.imag else (0.0 if c.re > 0 else math.pi)


def _sparse_from_poly(f):
    f.require_univariate()
    a0 = f.terms[0].exponent[0]
    a = np.array([t.exponent[0] - a0 for t in f], dtype=np.int64)
    data = [_coefficient_data(t.coeff) for t in f]
    return _Sparse(a, np.array([d[0] for d in data]), np.array([d[1] for d in data]),
                   tuple((int(e), t.coeff) for e, t in zip(a, f)))


def _float_hull_edges(a, logc):
    """``(slope, length)`` of the lower hull of ``(a, -logc)`` in floats."""
    pts = sorted(zip(a.tolist(), (-logc).tolist()))
    chain = []
    for p in pts:
        while len(chain) >= 2:
            (x1, y1), (x2, y2) = chain[-2], chain[-1]
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                chain.pop()
            else:
                break
        chain.append(p)
    return [((q[1] - p[1]) / (q[0] - p[0]), q[0] - p[0]) for p, q in zip(chain, chain[1:])]


def _initial_guesses(sp):
    z = []
    for j, (sigma, m) in enumerate(_float_hull_edges(sp.a, sp.logc)):
        r = math.exp(sigma)
        off = 0.4 + 1.3 * j
        z.extend(r * np.exp(1j * (2 * math.pi * np.arange(m) + off) / m))
    return np.array(z, dtype=complex)


def _np_terms(sp, z):
    L = np.log(np.abs(z))
    th = np.angle(z)
    E = sp.logc[None, :] + sp.a[None, :] * L[:, None]
    M = E.max(axis=1)
    T = np.exp(E - M[:, None] + 1j * (sp.arg[None, :] + sp.a[None, :] * th[:, None]))
    return T, M


def _aberth_np(sp, z, max_iter=600):
    d = len(z)
    best = math.inf
    stall = 0
    for _ in range(max_iter):
        T, _ = _np_terms(sp, z)
        s = T.sum(axis=1)
        ds = (T * sp.a[None, :]).sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            N = z * s / ds
            D = z[:, None] - z[None, :]
            np.fill_diagonal(D, np.inf)
            S = (1.0 / D).sum(axis=1)
            w = N / (1.0 - N * S)
        w = np.where(np.isfinite(w), w, 1e-8 * z)
        z = z - w
        if not np.all(np.isfinite(z)) or np.any(z == 0):
            raise ConvergenceFailure("Aberth iteration left the domain", None)
        rel = float(np.max(np.abs(w) / np.abs(z))) if d else 0.0
        if rel < 4 * EPS:
            break
        if rel < best * 0.9:
            best, stall = rel, 0
        else:
            stall += 1
            if stall > 40:
                break
    return z


def _log_weierstrass_np(sp, z):
    """Upper bounds on ``log |W_i|`` in floats."""
    T, M = _np_terms(sp, z)
    s = np.abs(T.sum(axis=1))
    err = (4 * len(sp.a) + 4 * float(sp.a.max()) + 8) * EPS * np.abs(T).sum(axis=1)
    logp = M + np.log(s + err)
    D = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(D, 1.0)
    with np.errstate(divide="ignore"):
        logprod = np.log(D).sum(axis=1)
    return logp - sp.logc[-1] - logprod


def _cluster(z, radii):
    """Connected components of overlapping disks, as index lists."""
    d = len(z)
    parent = list(range(d))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(d):
        for j in range(i + 1, d):
            if abs(z[i] - z[j]) <= radii[i] + radii[j]:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(d):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: min(g))


def _roots_from_clusters(z, radii):
    roots = []
    for g in _cluster(z, radii):
        pts = [z[i] for i in g]
        c = sum(pts) / len(pts)
        R = max(abs(p - c) + radii[i] for p, i in zip(pts, g))
        roots.append((c, R, len(g)))
    return roots


def _finish(raw, d, target, bits, to_complex=complex, to_float=float):
    roots = []
    ok = True
    for c, R, m in raw:
        cz = to_complex(c)
        Rf = float(to_float(R)) + 2 * EPS * abs(cz)
        if not Rf <= target * abs(cz):
            ok = False
        roots.append(Root(cz, Rf, m))
    roots.sort(key=lambda r: (abs(r.value), math.atan2(r.value.imag, r.value.real)))
    return RootSet(tuple(roots), d, ok, bits)


def _solve_numeric(sp, target=DEFAULT_TARGET):
    d = int(sp.a[-1])
    if d == 0:
        return RootSet((), 0)
    z = _aberth_np(sp, _initial_guesses(sp))
    radii = d * np.exp(_log_weierstrass_np(sp, z))
    return _finish(_roots_from_clusters(list(z), list(radii)), d, target, 53)


# ------------------------------------------------------------- mpmath


def _mp_coeff(ctx, c):
    if isinstance(c, LogPolar):
        return ctx.exp(ctx.mpf(c.log_mag.numerator) / c.log_mag.denominator) * ctx.expjpi(
            ctx.mpf(c.phase.numerator) / c.phase.denominator
        )
    re = ctx.mpf(c.re.numerator) / c.re.denominator
    im = ctx.mpf(c.im.numerator) / c.im.denominator
    return ctx.mpc(re, im)


def _mp_stage(sp, z0, target, max_bits):
    ctx = mpmath.MPContext()
    d = int(sp.a[-1])
    z = [ctx.mpc(complex(v)) for v in z0]
    bits = 128
    while True:
        ctx.prec = bits
        coeffs = [(a, _mp_coeff(ctx, c)) for a, c in sp.exact]
        lead = abs(coeffs[-1][1])
        tol = ctx.mpf(2) ** (8 - bits)
        best, stall = None, 0
        for _ in range(60 + bits):
            N = []
            for zi in z:
                pw = {a: zi**a for a, _ in coeffs}
                p = ctx.fsum(c * pw[a] for a, c in coeffs)
                dp = ctx.fsum(a * c * pw[a] / zi for a, c in coeffs if a)
                N.append(p / dp if dp != 0 else ctx.mpf(0))
            w = []
            for i, zi in enumerate(z):
                S = ctx.fsum(1 / (zi - zj) for j, zj in enumerate(z) if j != i and zi != zj)
                w.append(N[i] / (1 - N[i] * S))
            z = [zi - wi for zi, wi in zip(z, w)]
            rel = max(abs(wi) / abs(zi) for wi, zi in zip(w, z))
            if rel < tol:
                break
            if best is None or rel < best * ctx.mpf(0.9):
                best, stall = rel, 0
            else:
                stall += 1
                if stall > 30:
                    break
        radii = []
        unit = ctx.mpf(2) ** (4 - bits)
        for i, zi in enumerate(z):
            vals = [c * zi**a for a, c in coeffs]
            s = abs(ctx.fsum(vals))
            err = (len(coeffs) + 2) * unit * ctx.fsum(abs(v) for v in vals)
            prod = ctx.fprod(abs(zi - zj) for j, zj in enumerate(z) if j != i)
            radii.append(d * (s + err) / (lead * prod) if prod else ctx.inf)
        raw = _roots_from_clusters(z, radii)
        rs = _finish(raw, d, target, bits, to_complex=lambda c: complex(c), to_float=lambda r: float(r))
        if rs.meets_target or bits >= max_bits:
            return rs
        bits *= 2


def roots_1d(f, target=DEFAULT_TARGET, max_bits=MAX_BITS):
    """All nonzero roots of a univariate polynomial with certified radii.

    ``target`` is the wanted relative radius; clusters wider than that are
    refined in multiprecision up to ``max_bits``.  The returned set records
    whether the target was met.
    """
    if f.t < 2:
        f.require_univariate()
        return RootSet((), 0)
    sp = _sparse_from_poly(f)
    rs = _solve_numeric(sp, target)
    if rs.meets_target or max_bits <= 53:
        return rs
    z0 = []
    for r in rs.roots:
        # spread each cluster back out so the refinement sees distinct seeds
        for k in range(r.multiplicity):
            jitter = r.error_radius * 0.5 * complex(math.cos(2 * math.pi * k / r.multiplicity + 0.3),
                                                      math.sin(2 * math.pi * k / r.multiplicity + 0.3))
            z0.append(r.value + (jitter if r.multiplicity > 1 else 0))
    return _mp_stage(sp, z0, target, max_bits)


class AmoebaPoint(NamedTuple):
    log_norm: float
    multiplicity: int
    error_radius: float


def amoeba_1d(f, target=DEFAULT_TARGET):
    """Sorted log-norms of the roots; roots whose log-norm intervals overlap are merged."""
    rs = roots_1d(f, target)
    pts = sorted((r.log_norm, r.multiplicity, r.log_error) for r in rs)
    merged = []
    for x, m, e in pts:
        if merged:
            px, pm, pe = merged[-1]
            if x - e <= px + pe:
                lo, hi = min(px - pe, x - e), max(px + pe, x + e)
                cx = (px * pm + x * m) / (pm + m)
                merged[-1] = (cx, pm + m, max(cx - lo, hi - cx))
                continue
        merged.append((x, m, e))
    return [AmoebaPoint(x, m, e) for x, m, e in merged]


# ---------------------------------------------------------- fibers (n=2)


@dataclass(frozen=True)
class FiberGrid:
    """Log-moduli and phase count for the fixed variable; ``free`` is solved for."""

    log_moduli: tuple
    n_phases: int = 8
    free: int = 0

    def __post_init__(self):
        object.__setattr__(self, "log_moduli", tuple(float(u) for u in self.log_moduli))
        if not self.log_moduli or self.n_phases < 1:
            raise ValueError("a fiber grid needs at least one modulus and one phase")

    @property
    def phases(self):
        return tuple(2 * math.pi * k / self.n_phases for k in range(self.n_phases))

    def fibers(self):
        k = 0
        for u in self.log_moduli:
            for th in self.phases:
                yield k, u, th
                k += 1

    @classmethod
    def default_for(cls, f, n_moduli=16, n_phases=8):
        """Moduli spanning the curve's bounding box in the fixed coordinate, widened by ``2*log(t-1)``."""
        T = archtrop_2d(f)
        ys = [float(v.coords[1]) for v in T.vertices] + [float(c.point[1]) for c in T.lines]
        if not ys:
            ys = [0.0]
        pad = 2 * math.log(f.t - 1) if f.t > 2 else 0.0
        lo, hi = min(ys) - pad, max(ys) + pad
        if hi - lo < 1e-9:
            lo, hi = lo - 1.0, hi + 1.0
        return cls(tuple(np.linspace(lo, hi, n_moduli)), n_phases)

    def to_json(self):
        return {"log_moduli": list(self.log_moduli), "n_phases": self.n_phases, "free": self.free}


def _poly_arrays(f):
    exps = np.array(f.support, dtype=np.int64)
    data = [_coefficient_data(t.coeff) for t in f]
    return exps, np.array([d[0] for d in data]), np.array([d[1] for d in data])


def _specialize(arrays, free, fixed_logs, fixed_args):
    """Sparse univariate data after fixing every coordinate except ``free``."""
    exps, logc, argc = arrays
    a = exps[:, free]
    others = np.delete(exps, free, axis=1)
    lt = logc + others @ np.asarray(fixed_logs, dtype=float)
    ph = argc + others @ np.asarray(fixed_args, dtype=float)
    out_a, out_l, out_p = [], [], []
    for e in np.unique(a):
        mask = a == e
        M = lt[mask].max()
        s = np.exp(lt[mask] - M + 1j * ph[mask]).sum()
        if abs(s) <= 8 * EPS * mask.sum():
            continue
        out_a.append(int(e))
        out_l.append(M + math.log(abs(s)))
        out_p.append(math.atan2(s.imag, s.real))
    if len(out_a) < 2:
        raise DegenerateFiber("the specialised polynomial has no nonzero roots")
    a0 = out_a[0]
    return _Sparse(np.array(out_a) - a0, np.array(out_l), np.array(out_p))


def fiber_roots(f, fixed_logs, fixed_args, free=0, target=DEFAULT_TARGET):
    """Roots in ``x_free`` after fixing the other coordinates ``exp(u + i*theta)``."""
    return _solve_numeric(_specialize(_poly_arrays(f), free, fixed_logs, fixed_args), target)


@dataclass(frozen=True, eq=False)
class AmoebaCloud:
    points: np.ndarray
    errors: np.ndarray
    fiber_ids: np.ndarray
    grid: FiberGrid
    skipped: int = 0
    fibers: tuple = field(default=(), repr=False)

    def __len__(self):
        return len(self.points)

    def to_csv(self, handle=None):
        buf = handle if handle is not None else io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        n = self.points.shape[1] if len(self.points) else 2
        w.writerow([f"x{k + 1}" for k in range(n)] + ["err", "fiber_id"])
        for p, e, fid in zip(self.points, self.errors, self.fiber_ids):
            w.writerow([repr(float(x)) for x in p] + [repr(float(e)), int(fid)])
        return buf.getvalue() if handle is None else None

    def to_json(self):
        return {
            "metadata": {
                "grid": self.grid.to_json(),
                "skipped_fibers": self.skipped,
                "fibers": [{"id": k, "log_modulus": u, "phase": th} for k, u, th in self.fibers],
            },
            "points": [
                {"coords": [float(x) for x in p], "err": float(e), "fiber_id": int(fid)}
                for p, e, fid in zip(self.points, self.errors, self.fiber_ids)
            ],
        }

    def dumps(self):
        return json.dumps(self.to_json())


def _solve_fiber(arrays, free, k, u, th):
    try:
        rs = _solve_numeric(_specialize(arrays, free, [u], [th]))
    except DegenerateFiber:
        return k, None
    pts = []
    for r in rs.roots:
        coords = [0.0, 0.0]
        coords[free] = r.log_norm
        coords[1 - free] = u
        pts.extend([(coords, r.log_error)] * r.multiplicity)
    return k, pts


def sample_amoeba_2d(f, grid=None, n_jobs=None):
    """Amoeba points from fiber solves over a grid of moduli and phases."""
    if f.n != 2:
        raise NotPlanar(f"fiber sampling needs two variables, got {f.n}")
    grid = grid or FiberGrid.default_for(f)
    arrays = _poly_arrays(f)
    fibers = tuple(grid.fibers())
    if n_jobs in (None, 1):
        results = [_solve_fiber(arrays, grid.free, k, u, th) for k, u, th in fibers]
    else:
        from joblib import Parallel, delayed

        results = Parallel(n_jobs=n_jobs, prefer="threads")(
            delayed(_solve_fiber)(arrays, grid.free, k, u, th) for k, u, th in fibers
        )
    results.sort(key=lambda r: r[0])
    pts, errs, ids = [], [], []
    skipped = 0
    for k, res in results:
        if res is None:
            skipped += 1
            continue
        for coords, e in res:
            pts.append(coords)
            errs.append(e)
            ids.append(k)
    return AmoebaCloud(np.array(pts, dtype=float).reshape(-1, 2), np.array(errs), np.array(ids, dtype=int),
                       grid, skipped, fibers)


def _sorted_log_norms(arrays, free, u, th):
    sp = _specialize(arrays, free, [u], [th])
    # small dense solve: scale so the extreme hull slopes are balanced
    edges = _float_hull_edges(sp.a, sp.logc)
    s = 0.5 * (edges[0][0] + edges[-1][0])
    d = int(sp.a[-1])
    lc = sp.logc + sp.a * s
    dense = np.zeros(d + 1, dtype=complex)
    dense[sp.a] = np.exp(lc - lc.max() + 1j * sp.arg)
    r = np.roots(dense[::-1])
    return np.sort(np.log(np.abs(r)) + s)


def _simplex_phases(arrays, v):
    """Phases ``phi`` with ``f(exp(v + i*phi)) = 0`` for a trinomial with triangle support.

    The three term moduli at ``v`` must close up into a triangle; its angles
    fix the term phases, and the affinely independent exponents turn those
    into ``phi`` by a 2x2 solve.  ``None`` when the support is not a triangle
    or the moduli violate the triangle inequality.
    """
    exps, logc, argc = arrays
    if exps.shape != (3, 2):
        return None
    M = (exps[1:] - exps[0]).astype(float)
    if round(abs(np.linalg.det(M))) == 0:
        return None
    lv = logc + exps @ np.asarray(v, dtype=float)
    m = np.exp(lv - lv.max())
    if 2 * m.max() > m.sum() * (1 + 1e-12):
        return None
    cos1 = np.clip((m[2] ** 2 - m[0] ** 2 - m[1] ** 2) / (2 * m[0] * m[1]), -1.0, 1.0)
    psi1 = math.acos(cos1)
    w2 = -m[0] - m[1] * np.exp(1j * psi1)
    psi = np.array([psi1, math.atan2(w2.imag, w2.real)])
    return np.linalg.solve(M, psi - (argc[1:] - argc[0]))


def _fiber_point(arrays, free, v, phase):
    try:
        rs = _solve_numeric(_specialize(arrays, free, [v[1 - free]], [phase]))
    except DegenerateFiber:
        return None
    best = min(rs.roots, key=lambda r: abs(r.log_norm - v[free]))
    p = list(v)
    p[free] = best.log_norm
    return np.array(p), best.log_error


def amoeba_point_near(f, v, n_phases=64, tol=1e-9):
    """An amoeba point of a planar ``f`` matching ``v`` in all coordinates, or ``None``.

    The fixed coordinate keeps ``v``'s log-modulus.  Its phase is
    constructed directly for triangle-support trinomials; otherwise it is
    scanned and refined by root bracketing until the ``j``-th smallest root
    log-norm equals ``v`` in the free coordinate.  Either way the returned
    point comes from solving that fiber.  Returns ``(point, err)``.
    """
    arrays = _poly_arrays(f)
    v = [float(x) for x in v]
    phi = _simplex_phases(arrays, v)
    if phi is not None:
        for free in (0, 1):
            res = _fiber_point(arrays, free, v, phi[1 - free])
            if res is not None and abs(res[0][free] - v[free]) <= tol + res[1]:
                return res
    thetas = np.linspace(0.0, 2 * math.pi, n_phases + 1)
    for free in (0, 1):
        u = v[1 - free]
        target = v[free]

        def branch(th, j):
            try:
                ln = _sorted_log_norms(arrays, free, u, th)
            except DegenerateFiber:
                return None
            return ln[j] - target if j < len(ln) else None

        try:
            table = [_sorted_log_norms(arrays, free, u, th) for th in thetas]
        except DegenerateFiber:
            continue
        sizes = {len(row) for row in table}
        if len(sizes) != 1:
            continue
        H = np.array(table) - target
        for j in np.argsort(np.abs(H).min(axis=0)):
            col = H[:, j]
            k0 = int(np.argmin(np.abs(col)))
            if abs(col[k0]) < tol:
                found = thetas[k0]
            else:
                found = None
                for k in range(n_phases):
                    if col[k] * col[k + 1] < 0:
                        th = brentq(lambda x: branch(x, int(j)), thetas[k], thetas[k + 1], xtol=1e-15)
                        h = branch(th, int(j))
                        if h is not None and abs(h) < tol:
                            found = th
                            break
            if found is None:
                continue
            res = _fiber_point(arrays, free, v, found)
            if res is not None:
                return res
    return None


# ----------------------------------------------------------- distances


class HausdorffEstimate(NamedTuple):
    value: float
    err: float
    caveat: str = ""


def _as_points(A):
    A = np.asarray(A, dtype=float)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    return A


def _is_tropical(B):
    return isinstance(B, (UnivariateArchTrop, TropicalCurve))


def directed_hausdorff(A, B, a_err=None, sampled=False):
    """``sup_{a in A} inf_{b in B} |a - b|`` with an error bound.

    ``B`` is a tropical set (exact cells) or a point array.  ``a_err`` holds
    per-point error radii.  With ``sampled=True`` the result is labelled as a
    lower estimate of the true sup over the set ``A`` was sampled from.
    """
    A = _as_points(A)
    if len(A) == 0:
        raise EmptySet("empty source set")
    errs = np.zeros(len(A)) if a_err is None else np.broadcast_to(np.asarray(a_err, dtype=float), (len(A),))
    if _is_tropical(B):
        dists = [distance_to(a, B) for a in A]
        vals = np.array([d.value for d in dists])
        derr = np.array([d.err for d in dists])
    else:
        Bp = _as_points(B)
        if len(Bp) == 0:
            raise EmptySet("empty target set")
        vals, _ = cKDTree(Bp).query(A)
        derr = np.full(len(A), 4 * EPS) * (1 + np.abs(A).max())
    k = int(np.argmax(vals))
    caveat = "sampled source: lower estimate of the true directed distance" if sampled else ""
    return HausdorffEstimate(float(vals[k]), float(np.max(errs + derr)), caveat)


def hausdorff(A, B, a_err=None, b_err=None):
    """Symmetric Hausdorff distance between finite sets (a univariate ArchTrop counts)."""
    if isinstance(B, UnivariateArchTrop):
        Bp, b_err = B.floats().reshape(-1, 1), np.array([s.error_radius for s in B.slopes])
    elif isinstance(B, TropicalCurve):
        raise TypeError("sample the curve first; curves are not finite sets")
    else:
        Bp = _as_points(B)
    ab = directed_hausdorff(A, Bp, a_err)
    ba = directed_hausdorff(Bp, _as_points(A), b_err)
    extra = float(np.max(a_err)) if a_err is not None and np.size(a_err) else 0.0
    if ab.value >= ba.value:
        return HausdorffEstimate(ab.value, ab.err + (0.0 if b_err is None else float(np.max(b_err))))
    return HausdorffEstimate(ba.value, ba.err + extra)


def amoeba_points_1d(f, target=DEFAULT_TARGET):
    """``(log_norms, errors)`` arrays from :func:`amoeba_1d`, one entry per merged point."""
    pts = amoeba_1d(f, target)
    return np.array([p.log_norm for p in pts]), np.array([p.error_radius for p in pts])


def fraction_log(q):
    """Float ``log`` of a positive rational without overflow."""
    q = Fraction(q)
    return math.log(q.numerator) - math.log(q.denominator)
