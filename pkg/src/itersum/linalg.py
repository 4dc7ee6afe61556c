"""Exact integer and rational linear algebra for small dense matrices.

Matrices are tuples of row tuples of Python ints; everything stays exact.
Rationals are :class:`fractions.Fraction`, which is always stored reduced
with a positive denominator.
"""

from fractions import Fraction
import math

from .errors import DimensionError, SingularMatrixError

MAX_SIZE = 16


def as_matrix(m):
    """Validate ``m`` and return it as a tuple of integer row tuples."""
    rows = tuple(tuple(row) for row in m)
    if not rows or not rows[0]:
        raise DimensionError("matrix must have at least one row and one column")
    ncols = len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise DimensionError("ragged matrix")
    if len(rows) > MAX_SIZE or ncols > MAX_SIZE:
        raise DimensionError(f"matrix {len(rows)}x{ncols} exceeds the {MAX_SIZE}x{MAX_SIZE} cap")
    for row in rows:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise DimensionError(f"non-integer entry {x!r}")
    return rows


def from_columns(vectors):
    """Matrix whose columns are the given integer vectors."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise DimensionError("no columns")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionError("columns of unequal length")
    return as_matrix([[v[i] for v in vectors] for i in range(n)])


def transpose(m):
    return tuple(zip(*m))


def matvec(m, x):
    return tuple(sum(a * b for a, b in zip(row, x)) for row in m)


def det_int(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = as_matrix(m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError(f"determinant of non-square {n}x{len(m[0])} matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _eliminate(m, rhs):
    """Gauss-Jordan on the augmented matrix over the rationals.

    Returns (reduced rows, pivot columns).
    """
    ncols = len(m[0])
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(m, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def solve_rational(m, rhs):
    """Unique rational solution of ``m x = rhs`` for square nonsingular ``m``."""
    m = as_matrix(m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("solve_rational needs a square matrix")
    if len(rhs) != n:
        raise DimensionError(f"right-hand side has length {len(rhs)}, expected {n}")
    a, pivots = _eliminate(m, rhs)
    if len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return tuple(a[i][n] for i in range(n))


def solve_full_column_rank(m, rhs):
    """Solve an overdetermined system whose columns are independent.

    Returns the unique solution, or ``None`` if the system is inconsistent.
    Raises :class:`SingularMatrixError` if the columns are dependent.
    """
    m = as_matrix(m)
    ncols = len(m[0])
    if len(rhs) != len(m):
        raise DimensionError("right-hand side length does not match row count")
    a, pivots = _eliminate(m, rhs)
    if len(pivots) < ncols:
        raise SingularMatrixError("columns are linearly dependent")
    if any(row[ncols] != 0 for row in a[ncols:]):
        return None
    return tuple(a[i][ncols] for i in range(ncols))


def rank(m):
    m = as_matrix(m)
    _, pivots = _eliminate(m, [0] * len(m))
    return len(pivots)


def adjugate(m):
    """Integer adjugate ``adj`` with ``m @ adj == det(m) * I``."""
    m = as_matrix(m)
    n = len(m)
    if n == 1:
        return ((1,),)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            adj[j][i] = (-1) ** (i + j) * det_int(minor)
    return tuple(tuple(row) for row in adj)


def lattice_index(vectors):
    """Index in Z^d of the integer span of ``vectors``; ``math.inf`` if rank < d.

    Uses integer row echelon reduction (Euclid on rows), so the result is
    the absolute product of the echelon pivots.
    """
    rows = [list(v) for v in vectors]
    if not rows:
        raise DimensionError("lattice_index of an empty list")
    d = len(rows[0])
    if d == 0 or any(len(v) != d for v in rows):
        raise DimensionError("vectors must share a positive dimension")
    index = 1
    r = 0
    for c in range(d):
        # gather the gcd of column c into row r
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if len(nz) <= 1:
                break
            p = min(nz, key=lambda i: abs(rows[i][c]))
            for i in nz:
                if i != p:
                    q = rows[i][c] // rows[p][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[p])]
        nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
        if not nz:
            return math.inf
        rows[r], rows[nz[0]] = rows[nz[0]], rows[r]
        index *= abs(rows[r][c])
        r += 1
    return index
