"""Small exact-rational matrix routines used by the homology module.

Matrices are lists of rows of :class:`fractions.Fraction`.  Everything
is deterministic: row reduction always picks the leftmost usable pivot
column and the first nonzero row below it, so repeated runs give
identical bases and signs.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows, cols):
    return [[ZERO] * cols for _ in range(rows)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matvec(m, v):
    return [sum((row[j] * v[j] for j in range(len(v))), ZERO) for row in m]


def matmul(a, b):
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum((ra[k] * cb[k] for k in range(len(ra))), ZERO) for cb in bt]
            for ra in a]


def copy(m):
    return [list(row) for row in m]


def rref(m):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    r = copy(m)
    rows = len(r)
    cols = len(r[0]) if rows else 0
    pivots = []
    lead = 0
    for col in range(cols):
        pivot_row = None
        for i in range(lead, rows):
            if r[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        r[lead], r[pivot_row] = r[pivot_row], r[lead]
        pv = r[lead][col]
        r[lead] = [x / pv for x in r[lead]]
        for i in range(rows):
            if i != lead and r[i][col] != 0:
                f = r[i][col]
                r[i] = [a - f * b for a, b in zip(r[i], r[lead])]
        pivots.append(col)
        lead += 1
        if lead == rows:
            break
    return r, pivots


def rank(m):
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def kernel_basis(m, cols=None):
    """Basis of the null space, one vector per free column, in column
    order; each vector has a 1 at its free column."""
    rows = len(m)
    if cols is None:
        cols = len(m[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [[ONE if i == j else ZERO for i in range(cols)]
                for j in range(cols)]
    r, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(cols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [ZERO] * cols
        v[j] = ONE
        for row_idx, pc in enumerate(pivots):
            v[pc] = -r[row_idx][j]
        basis.append(v)
    return basis


def solve(m, b):
    """One exact solution of ``m x = b`` (free variables zero), or None."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return [ZERO] * cols if all(x == 0 for x in b) else None
    aug = [list(row) + [b[i]] for i, row in enumerate(m)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for row_idx, pc in enumerate(pivots):
        x[pc] = r[row_idx][cols]
    return x


def det(m):
    """Determinant by fraction-free-ish Gaussian elimination."""
    n = len(m)
    if n == 0:
        return ONE
    assert all(len(row) == n for row in m), "determinant needs a square matrix"
    a = copy(m)
    sign = ONE
    out = ONE
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if a[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            sign = -sign
        pv = a[col][col]
        out *= pv
        for i in range(col + 1, n):
            if a[i][col] != 0:
                f = a[i][col] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return sign * out


def columns_matrix(vectors):
    """Matrix whose columns are the given coordinate vectors."""
    if not vectors:
        return []
    rows = len(vectors[0])
    return [[vectors[j][i] for j in range(len(vectors))]
            for i in range(rows)]
