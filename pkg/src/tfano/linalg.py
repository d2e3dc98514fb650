"""Exact integer and rational linear algebra.

Vectors and matrices are plain tuples of Python ints (Fractions are
accepted wherever only ring arithmetic is used), so every value is
hashable, immutable and exact.  No floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(k, a):
    return tuple(k * x for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m) -> Mat:
    return tuple(zip(*m))


def mat_vec(m, v):
    """Apply m to the column vector v."""
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b) -> Mat:
    bt = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def is_primitive(v) -> bool:
    """True iff the gcd of the coordinates is exactly 1 (zero vector: False)."""
    if len(v) == 0:
        raise ValueError("empty vector")
    return math.gcd(*v) == 1


def primitivize(v) -> Vec:
    """Divide v by the gcd of its coordinates.

    The result is the primitive lattice vector generating the same ray.
    """
    g = math.gcd(*v)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(x // g for x in v)


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def det3(m):
    """Exact determinant of a 3x3 matrix (cofactor expansion)."""
    if len(m) != 3 or any(len(row) != 3 for row in m):
        raise ValueError("det3 requires a 3x3 matrix")
    a, b, c = m
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def adjugate3(m) -> Mat:
    """Adjugate of a 3x3 matrix: m @ adjugate3(m) == det3(m) * I."""
    a, b, c = m
    return (
        (b[1] * c[2] - b[2] * c[1], a[2] * c[1] - a[1] * c[2], a[1] * b[2] - a[2] * b[1]),
        (b[2] * c[0] - b[0] * c[2], a[0] * c[2] - a[2] * c[0], a[2] * b[0] - a[0] * b[2]),
        (b[0] * c[1] - b[1] * c[0], a[1] * c[0] - a[0] * c[1], a[0] * b[1] - a[1] * b[0]),
    )


def _row_echelon(rows: list[list[int]], track_u: bool):
    """In-place integer row reduction to Hermite form.

    Returns (pivot columns, U) where U is the accumulated unimodular
    transform when track_u, else None.  Pivots are positive and entries
    above each pivot are reduced into [0, pivot).  Ties in pivot
    selection go to the smallest row index.
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)] if track_u else None

    def add_multiple(i, j, q):
        rows[i] = [a - q * b for a, b in zip(rows[i], rows[j])]
        if track_u:
            u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def swap(i, j):
        rows[i], rows[j] = rows[j], rows[i]
        if track_u:
            u[i], u[j] = u[j], u[i]

    def negate(i):
        rows[i] = [-a for a in rows[i]]
        if track_u:
            u[i] = [-a for a in u[i]]

    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        while True:
            piv = None
            for i in range(r, nr):
                v = rows[i][c]
                if v != 0 and (piv is None or abs(v) < abs(rows[piv][c])):
                    piv = i
            if piv is None:
                break
            if piv != r:
                swap(r, piv)
            clean = True
            for i in range(r + 1, nr):
                if rows[i][c] != 0:
                    add_multiple(i, r, rows[i][c] // rows[r][c])
                    if rows[i][c] != 0:
                        clean = False
            if clean:
                break
        if rows[r][c] != 0:
            if rows[r][c] < 0:
                negate(r)
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    add_multiple(i, r, q)
            pivots.append(c)
            r += 1
    return pivots, u


def hnf(m) -> tuple[Mat, Mat]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular, H = U @ m, H in row echelon shape
    with positive pivots and entries above each pivot reduced modulo it.
    """
    if not m:
        raise ValueError("empty matrix")
    rows = [list(r) for r in m]
    _, u = _row_echelon(rows, track_u=True)
    return tuple(tuple(r) for r in rows), tuple(tuple(r) for r in u)


def rank(m) -> int:
    """Rank over Q of an integer matrix."""
    if not m:
        return 0
    rows = [list(r) for r in m]
    pivots, _ = _row_echelon(rows, track_u=False)
    return len(pivots)


def snf(m) -> tuple[Mat, Mat, Mat]:
    """Smith normal form.

    Returns (D, U, V) with U, V unimodular, D = U @ m @ V diagonal with
    nonnegative entries and d1 | d2 | ... along the diagonal.
    """
    if not m:
        raise ValueError("empty matrix")
    a = [list(r) for r in m]
    nr, nc = len(a), len(a[0])
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_add(i, j, q):
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_add(i, j, q):
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def min_nonzero(t):
        pos = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (pos is None or abs(a[i][j]) < abs(a[pos[0]][pos[1]])):
                    pos = (i, j)
        return pos

    def clear_at(t):
        while True:
            pos = min_nonzero(t)
            if pos is None:
                return
            if pos[0] != t:
                row_swap(t, pos[0])
            if pos[1] != t:
                col_swap(t, pos[1])
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    row_add(i, t, a[i][t] // a[t][t])
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    col_add(j, t, a[t][j] // a[t][t])
                    if a[t][j] != 0:
                        dirty = True
            if not dirty:
                return

    size = min(nr, nc)
    for t in range(size):
        clear_at(t)
    for t in range(size):
        if a[t][t] < 0:
            row_negate(t)

    # Enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(size - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if x != 0 and y % x != 0:
                row_add(i, i + 1, -1)
                clear_at(i)
                for t in (i, i + 1):
                    if a[t][t] < 0:
                        row_negate(t)
                changed = True
    return (
        tuple(tuple(r) for r in a),
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in v),
    )


def solve3_integral(b_cols: Mat, target):
    """Solve B @ y = target for the 3x3 integer matrix with columns b_cols.

    Returns the exact rational solution as a tuple of Fractions, or None
    when B is singular.
    """
    b = transpose(b_cols)
    d = det3(b)
    if d == 0:
        return None
    adj = adjugate3(b)
    return tuple(Fraction(dot(row, target), d) for row in adj)
