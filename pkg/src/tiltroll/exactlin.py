"""Exact linear algebra over the rationals.

Matrices are lists of rows whose entries are ``Fraction`` (ints are accepted
on input and promoted).  Vectors are plain lists.  Nothing here ever touches
floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, InconsistentSystem, NotSymmetric

Matrix = list  # list[list[Fraction]]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatMatrix:
    """Thin immutable wrapper pairing a shape with exact entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = [[Fraction(x) for x in row] for row in entries]
        if cols is None:
            cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != cols:
                raise DimensionMismatch("ragged matrix")
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    def tolist(self):
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"RatMatrix({self.entries!r})"


def _rows(m) -> list:
    if isinstance(m, RatMatrix):
        return m.tolist()
    return [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in m]


def ncols(m, default=0):
    if isinstance(m, RatMatrix):
        return m.cols
    return len(m[0]) if m else default


def zeros(r, c):
    return [[_ZERO] * c for _ in range(r)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = _ONE
    return out


def transpose(m, nrows_if_empty=0):
    m = _rows(m)
    if not m:
        return [[] for _ in range(nrows_if_empty)]
    return [list(col) for col in zip(*m)]


def matmul(a, b, cols=None):
    """Product a*b.  ``cols`` gives the result width when the inner size is 0."""
    if not a:
        return []
    k = len(a[0])
    if len(b) != k:
        raise DimensionMismatch(f"matmul {len(a)}x{k} by {len(b)}x?")
    if k == 0:
        return zeros(len(a), cols or 0)
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), _ZERO) for col in bt] for row in a]


def matvec(a, v):
    if a and len(a[0]) != len(v):
        raise DimensionMismatch("matvec")
    return [sum((x * y for x, y in zip(row, v) if x and y), _ZERO) for row in a]


def rref(m):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    r = _rows(m)
    nr = len(r)
    nc = len(r[0]) if r else 0
    pivots = []
    row = 0
    for col in range(nc):
        if row >= nr:
            break
        p = None
        for i in range(row, nr):
            if r[i][col] != 0:
                p = i
                break
        if p is None:
            continue
        r[row], r[p] = r[p], r[row]
        pv = r[row][col]
        if pv != 1:
            inv = 1 / pv
            r[row] = [x * inv for x in r[row]]
        prow = r[row]
        nz = [j for j in range(col, nc) if prow[j] != 0]
        for i in range(nr):
            if i != row:
                f = r[i][col]
                if f != 0:
                    ri = r[i]
                    for j in nz:
                        ri[j] -= f * prow[j]
        pivots.append(col)
        row += 1
    return r, pivots


def rank(m):
    if not m:
        return 0
    return len(rref(m)[1])


def kernel_basis(m, cols=None):
    """Basis of the right null space {x : m x = 0}."""
    nc = ncols(m, cols if cols is not None else 0)
    if cols is not None and m and nc != cols:
        raise DimensionMismatch("kernel_basis column count")
    if not m:
        return [[_ONE if i == j else _ZERO for i in range(nc)] for j in range(nc)]
    r, piv = rref(m)
    pivset = set(piv)
    basis = []
    for free in range(nc):
        if free in pivset:
            continue
        v = [_ZERO] * nc
        v[free] = _ONE
        for i, pc in enumerate(piv):
            v[pc] = -r[i][free]
        basis.append(v)
    return basis


def solve(a, b):
    """One exact solution x of a x = b (free variables set to zero)."""
    a = _rows(a)
    if len(a) != len(b):
        raise DimensionMismatch("solve: rhs length")
    nc = len(a[0]) if a else 0
    aug = [row + [Fraction(bi)] for row, bi in zip(a, b)]
    r, piv = rref(aug)
    if piv and piv[-1] == nc:
        raise InconsistentSystem("no solution")
    x = [_ZERO] * nc
    for i, pc in enumerate(piv):
        x[pc] = r[i][nc]
    return x


def solve_many(a, bs, cols=None):
    """Solve a x = b for every column vector b in ``bs`` at once."""
    a = _rows(a)
    nc = len(a[0]) if a else (cols or 0)
    if not bs:
        return []
    if not a:
        for b in bs:
            if any(b):
                raise InconsistentSystem("no solution")
        return [[_ZERO] * nc for _ in bs]
    k = len(bs)
    aug = [row + [Fraction(b[i]) for b in bs] for i, row in enumerate(a)]
    r, piv = rref(aug)
    if piv and piv[-1] >= nc:
        raise InconsistentSystem("no solution")
    out = []
    for j in range(k):
        x = [_ZERO] * nc
        for i, pc in enumerate(piv):
            x[pc] = r[i][nc + j]
        out.append(x)
    return out


def image_basis(m):
    """Basis (as vectors) of the column space of m."""
    m = _rows(m)
    if not m:
        return []
    _, piv = rref(m)
    return [[row[c] for row in m] for c in piv]


def row_space_basis(vectors):
    """Echelon basis of the span of the given vectors."""
    vs = [list(v) for v in vectors if any(v)]
    if not vs:
        return []
    r, piv = rref(vs)
    return r[: len(piv)]


def subspace_sum(u, w):
    return row_space_basis(list(u) + list(w))


def subspace_intersection(u, w, dim=None):
    u = row_space_basis(u)
    w = row_space_basis(w)
    if not u or not w:
        return []
    # solve sum a_i u_i = sum b_j w_j
    n = len(u[0])
    cols = [list(x) for x in u] + [[-y for y in x] for x in w]
    mat = transpose(cols)
    ker = kernel_basis(mat, len(cols))
    out = []
    for k in ker:
        v = [_ZERO] * n
        for a, x in zip(k[: len(u)], u):
            if a:
                for i in range(n):
                    v[i] += a * x[i]
        out.append(v)
    return row_space_basis(out)


def quotient_representatives(v, w):
    """Vectors of V (given by a spanning list) completing a basis of W to V.

    W must lie inside V; a DimensionMismatch is raised otherwise.
    """
    wb = row_space_basis(w)
    vb = row_space_basis(v)
    if wb and rank(vb + wb) != len(vb):
        raise DimensionMismatch("W is not contained in V")
    reps = []
    cur = list(wb)
    cur_rank = len(wb)
    for x in vb:
        if rank(cur + [x]) > cur_rank:
            cur.append(x)
            cur_rank += 1
            reps.append(list(x))
    return reps


def complement_indices(vectors, n):
    """Unit-vector indices S such that span(vectors) + span(e_S) = k^n directly."""
    vs = [list(v) for v in vectors if any(v)]
    m = vs + [[_ONE if i == j else _ZERO for i in range(n)] for j in range(n)]
    # column-wise: put vectors as columns and find pivots
    _, piv = rref(transpose(m, n))
    nv = len(vs)
    return [p - nv for p in piv if p >= nv]


def determinant(m):
    m = _rows(m)
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("determinant of non-square matrix")
    det = _ONE
    for col in range(n):
        p = None
        for i in range(col, n):
            if m[i][col] != 0:
                p = i
                break
        if p is None:
            return _ZERO
        if p != col:
            m[col], m[p] = m[p], m[col]
            det = -det
        pv = m[col][col]
        det *= pv
        for i in range(col + 1, n):
            f = m[i][col] / pv
            if f:
                for j in range(col, n):
                    m[i][j] -= f * m[col][j]
    return det


def is_symmetric(m):
    m = _rows(m)
    n = len(m)
    return all(len(r) == n for r in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n)
    )


def leading_principal_minors(m):
    m = _rows(m)
    if not is_symmetric(m):
        raise NotSymmetric("leading_principal_minors expects a symmetric matrix")
    return [determinant([row[:k] for row in m[:k]]) for k in range(1, len(m) + 1)]


def is_zero(m):
    return all(x == 0 for row in m for x in row)


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def in_span(basis, v) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(list(basis))


def coordinates(basis: Sequence, v):
    """Coordinates of v in terms of an independent list ``basis``."""
    if not basis:
        if any(v):
            raise InconsistentSystem("vector not in span")
        return []
    return solve(transpose(basis), list(v))
