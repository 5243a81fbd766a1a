"""scikit-learn style wrappers.

``fit`` takes a polynomial (object or text) in place of a data matrix; query
points play the role of samples.
"""

from __future__ import annotations

from contextlib import nullcontext

import numpy as np
from scipy.spatial import cKDTree
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .geometry import arch_newton, lower_hull
from .logvalue import working_precision
from .oracle import DEFAULT_TARGET, FiberGrid, amoeba_1d, sample_amoeba_2d
from .tropical import archtrop, distance_to, member
from .validation import check_log_points, check_polynomial, check_query_points


class ArchimedeanTropicalVariety(BaseEstimator):
    """``ArchTrop(f)`` with exact membership as ``predict``.

    ``transform`` maps float log-space points to their distance from the
    tropical set (one or two variables only).
    """

    def __init__(self, exact=False, precision_bits=None):
        self.exact = exact
        self.precision_bits = precision_bits

    def _precision(self):
        return working_precision(self.precision_bits) if self.precision_bits else nullcontext()

    def fit(self, X, y=None):
        f = check_polynomial(X)
        with self._precision():
            self.poly_ = f
            self.lifted_ = arch_newton(f)
            self.lower_faces_ = lower_hull(self.lifted_)
            self.tropical_ = archtrop(f) if f.n <= 2 and f.t >= 2 else None
        self.n_features_in_ = f.n
        return self

    def verdicts(self, X):
        check_is_fitted(self, "poly_")
        pts = check_query_points(X, self.n_features_in_)
        with self._precision():
            return [member(self.poly_, q, exact=self.exact) for q in pts]

    def predict(self, X):
        """``True`` where ``Log|v|`` lies in ``ArchTrop(f)``."""
        return np.array([v.inside for v in self.verdicts(X)])

    def transform(self, X):
        check_is_fitted(self, "tropical_")
        if self.tropical_ is None:
            raise ValueError("distances need a one- or two-variable polynomial with at least two terms")
        pts = check_log_points(X, self.n_features_in_)
        return np.array([[distance_to(p, self.tropical_).value] for p in pts])


class AmoebaSampler(BaseEstimator):
    """Numerical amoeba points; ``transform`` gives distances to the sample."""

    def __init__(self, grid=None, n_jobs=None, target=DEFAULT_TARGET):
        self.grid = grid
        self.n_jobs = n_jobs
        self.target = target

    def fit(self, X, y=None):
        f = check_polynomial(X)
        self.poly_ = f
        self.n_features_in_ = f.n
        if f.n == 1:
            pts = amoeba_1d(f, self.target)
            self.points_ = np.array([[p.log_norm] for p in pts])
            self.errors_ = np.array([p.error_radius for p in pts])
            self.multiplicities_ = np.array([p.multiplicity for p in pts])
            self.cloud_ = None
        else:
            grid = self.grid if isinstance(self.grid, FiberGrid) or self.grid is None else FiberGrid(*self.grid)
            self.cloud_ = sample_amoeba_2d(f, grid, self.n_jobs)
            self.points_ = self.cloud_.points
            self.errors_ = self.cloud_.errors
            self.multiplicities_ = np.ones(len(self.points_), dtype=int)
        self._tree = cKDTree(self.points_) if len(self.points_) else None
        return self

    def transform(self, X):
        check_is_fitted(self, "points_")
        pts = check_log_points(X, self.n_features_in_)
        if self._tree is None:
            return np.full((len(pts), 1), np.inf)
        d, _ = self._tree.query(pts)
        return d.reshape(-1, 1)

