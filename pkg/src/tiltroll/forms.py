"""Euler and Tits forms, quasi-Cartan companions and positivity."""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from . import exactlin as el
from .errors import CompanionMismatch, CyclicQuiver, DimensionMismatch, NotSymmetric
from .quiver_core import Presentation, Quiver, oriented_chordless_cycles


def _arrow_counts(q: Quiver):
    n = len(q.vertices)
    cnt = [[0] * n for _ in range(n)]
    for a in q.arrows:
        cnt[q.vindex[a.source]][q.vindex[a.target]] += 1
    return cnt


def euler_form_hereditary(q: Quiver):
    """Matrix E with <e_i, e_j> = delta_ij - #(arrows i -> j)."""
    if not q.is_acyclic():
        raise CyclicQuiver(f"quiver {q.name!r} has an oriented cycle")
    n = len(q.vertices)
    cnt = _arrow_counts(q)
    return [[Fraction(int(i == j) - cnt[i][j]) for j in range(n)] for i in range(n)]


def bilinear(m, x, y):
    """x^T m y."""
    return sum((Fraction(xi) * m[i][j] * y[j] for i, xi in enumerate(x) if xi for j in range(len(y)) if y[j]), Fraction(0))


def euler_form_from_cartan(cartan):
    """Euler form of an algebra of finite global dimension from its Cartan matrix.

    ``cartan[i][j] = dim e_j A e_i`` (the dimension vector of P_i is row i).  The
    form is <x, y> = x C^{-1} y^T, the dimension vectors of projectives being
    the rows of C.
    """
    n = len(cartan)
    inv = el.solve_many(el.transpose(cartan), el.identity(n), n)
    # solve_many returns columns of (C^T)^{-1}; transpose back to C^{-1}
    return [list(r) for r in inv]


class QuasiCartan:
    """Symmetric matrix with 2 on the diagonal."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        m = [[Fraction(x) for x in row] for row in matrix]
        if not el.is_symmetric(m):
            raise NotSymmetric("quasi-Cartan matrix must be symmetric")
        if any(m[i][i] != 2 for i in range(len(m))):
            raise DimensionMismatch("quasi-Cartan diagonal must be 2")
        self.matrix = m

    @property
    def n(self):
        return len(self.matrix)

    def value(self, x):
        return bilinear(self.matrix, x, x) / 2

    def tolist(self):
        return [[int(v) if v.denominator == 1 else str(v) for v in row] for row in self.matrix]

    def __eq__(self, other):
        return isinstance(other, QuasiCartan) and self.matrix == other.matrix

    def __repr__(self):
        return f"QuasiCartan({self.tolist()})"


class TitsForm(NamedTuple):
    companion: QuasiCartan
    vertices: list

    def __call__(self, x):
        return self.companion.value(x)


def tits_form(p: Presentation | Quiver, ext2_dims=None) -> TitsForm:
    """q(x) = sum x_i^2 - sum_arrows x_s x_t + sum ext2[i][j] x_i x_j."""
    q = p.quiver if isinstance(p, Presentation) else p
    n = len(q.vertices)
    if ext2_dims is None:
        ext2_dims = [[0] * n for _ in range(n)]
    if len(ext2_dims) != n or any(len(r) != n for r in ext2_dims):
        raise DimensionMismatch("ext2_dims must be n x n")
    cnt = _arrow_counts(q)
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = Fraction(2)
        for j in range(n):
            if i != j:
                a[i][j] = Fraction(-cnt[i][j] - cnt[j][i] + ext2_dims[i][j] + ext2_dims[j][i])
    return TitsForm(QuasiCartan(a), list(q.vertices))


def symmetrize(m):
    n = len(m)
    return [[Fraction(m[i][j]) + Fraction(m[j][i]) for j in range(n)] for i in range(n)]


def is_positive_definite(a) -> bool:
    m = a.matrix if isinstance(a, QuasiCartan) else a
    return all(d > 0 for d in el.leading_principal_minors(m))


def sign_condition_check(q: Quiver, a) -> bool:
    """Each oriented chordless cycle carries exactly one arrow i->j with A_ij > 0."""
    m = a.matrix if isinstance(a, QuasiCartan) else [[Fraction(x) for x in r] for r in a]
    cnt = _arrow_counts(q)
    n = len(q.vertices)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(m[i][j]) != cnt[i][j] + cnt[j][i]:
                u, v = q.vertices[i], q.vertices[j]
                raise CompanionMismatch(
                    f"|A[{u}][{v}]| = {abs(m[i][j])} but there are {cnt[i][j] + cnt[j][i]} arrows"
                )
    for cyc in oriented_chordless_cycles(q):
        pos = 0
        for aid in cyc.arrows:
            arr = q.arrow[aid]
            if m[q.vindex[arr.source]][q.vindex[arr.target]] > 0:
                pos += 1
        if pos != 1:
            return False
    return True


def companion_from_cut(q: Quiver, cut_arrows):
    """Quasi-Cartan companion with +1 on cut arrows and -1 on the others."""
    n = len(q.vertices)
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = Fraction(2)
    cut_arrows = set(cut_arrows)
    for arr in q.arrows:
        i, j = q.vindex[arr.source], q.vindex[arr.target]
        s = 1 if arr.id in cut_arrows else -1
        a[i][j] += s
        a[j][i] += s
    return QuasiCartan(a)


__all__ = [
    "QuasiCartan",
    "TitsForm",
    "bilinear",
    "companion_from_cut",
    "euler_form_from_cartan",
    "euler_form_hereditary",
    "is_positive_definite",
    "sign_condition_check",
    "symmetrize",
    "tits_form",
]
