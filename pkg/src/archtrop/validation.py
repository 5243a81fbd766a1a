"""Input checks shared by the estimators and the CLI."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.utils.validation import check_array

from .exceptions import DimensionMismatch, NonpositiveQuery
from .logvalue import as_fraction
from .parser import parse_laurent
from .polynomial import LaurentPoly
from .tropical import LogPoint


def check_polynomial(f, n=None):
    """Return a :class:`LaurentPoly`, parsing text if needed."""
    if isinstance(f, str):
        return parse_laurent(f, n)
    if not isinstance(f, LaurentPoly):
        raise TypeError(f"expected a LaurentPoly or polynomial text, got {type(f).__name__}")
    if n is not None and f.n != n:
        raise DimensionMismatch(f"polynomial has {f.n} variables, expected {n}")
    return f


def _parse_coordinate(x):
    if isinstance(x, str):
        return Fraction(x.strip())
    return as_fraction(x)


def check_query_points(X, n):
    """Exact query points: each row is a :class:`LogPoint` or ``n`` positive rationals."""
    if isinstance(X, LogPoint) or (len(X) and not hasattr(X[0], "__len__") and not isinstance(X[0], LogPoint)):
        X = [X]
    out = []
    for row in X:
        if isinstance(row, LogPoint):
            q = row
        else:
            q = tuple(_parse_coordinate(x) for x in row)
            if any(c <= 0 for c in q):
                raise NonpositiveQuery(f"query {q} has a nonpositive coordinate")
        if len(q.coords if isinstance(q, LogPoint) else q) != n:
            raise DimensionMismatch(f"query point has the wrong length, expected {n}")
        out.append(q)
    return out


def check_log_points(X, n):
    """Float log-space points as an ``(m, n)`` array."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1) if n == 1 else arr.reshape(1, -1)
    arr = check_array(arr, dtype=float, ensure_2d=True)
    if arr.shape[1] != n:
        raise DimensionMismatch(f"points have {arr.shape[1]} coordinates, expected {n}")
    return arr
