"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`~fractions.Fraction`.  Right-hand sides
may be :class:`~archtrop.logvalue.ExactLogValue` vectors, since every
operation applied to them is a rational linear combination.
"""

from fractions import Fraction

from .logvalue import ExactLogValue


def to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form and pivot columns."""
    m = to_fractions(rows)
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def independent_columns(rows):
    """Pivot columns: a maximal set of linearly independent columns."""
    if not rows:
        return []
    return rref(rows)[1]


def independent_rows(rows):
    """Indices of a maximal linearly independent subset of rows, greedy in order."""
    chosen = []
    basis = []
    for i, row in enumerate(rows):
        if rank(basis + [row]) > len(basis):
            basis.append(row)
            chosen.append(i)
    return chosen


def inverse(rows):
    n = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(to_fractions(rows))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def det(rows):
    m = to_fractions(rows)
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return out


def matvec(rows, vec):
    """Rational matrix times a vector of rationals or exact log values."""
    out = []
    for row in rows:
        acc = ExactLogValue()
        for a, x in zip(row, vec):
            if a:
                acc = acc + ExactLogValue.coerce(x) * a
        out.append(acc)
    return out


def dot(row, vec):
    acc = ExactLogValue()
    for a, x in zip(row, vec):
        if a:
            acc = acc + ExactLogValue.coerce(x) * a
    return acc


def nullspace(rows, ncols):
    """Basis of the right null space (list of rational vectors)."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve_consistent(rows, rhs):
    """Solve ``rows @ v = rhs`` with exact log right-hand side.

    Returns ``(particular, null_basis)`` or ``None`` when inconsistent.  The
    particular solution has zeros in the free coordinates.
    """
    ncols = len(rows[0])
    aug_rows = to_fractions(rows)
    # track row operations through an identity block so rhs stays symbolic
    k = len(aug_rows)
    aug = [r + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(aug_rows)]
    red, pivots = rref(aug)
    pivots = [p for p in pivots if p < ncols]
    transformed = matvec([row[ncols:] for row in red], rhs)
    for r in range(len(pivots), k):
        if transformed[r].sign() != 0:
            return None
    v = [ExactLogValue()] * ncols
    for r, pc in enumerate(pivots):
        v[pc] = transformed[r]
    return v, nullspace(rows, ncols)
