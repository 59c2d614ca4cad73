from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from tiltroll import exactlin as el
from tiltroll.errors import DimensionMismatch, InconsistentSystem, NotSymmetric

small = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[Fraction(draw(small)) for _ in range(c)] for _ in range(r)]


def test_kernel_of_rank_one():
    ker = el.kernel_basis([[1, 1], [1, 1]])
    assert len(ker) == 1
    assert ker[0][0] == -ker[0][1] != 0


def test_rank_identity():
    assert el.rank(el.identity(5)) == 5


def test_solve_is_exact():
    assert el.solve([[2]], [3]) == [Fraction(3, 2)]


def test_solve_inconsistent():
    with pytest.raises(InconsistentSystem):
        el.solve([[1, 1], [1, 1]], [0, 1])


def test_solve_rhs_mismatch():
    with pytest.raises(DimensionMismatch):
        el.solve([[1, 0]], [1, 2])


def test_ragged_matrix():
    with pytest.raises(DimensionMismatch):
        el.RatMatrix([[1, 2], [3]])


def test_leading_minors():
    assert el.leading_principal_minors(el.identity(3)) == [1, 1, 1]
    assert el.leading_principal_minors([[2, -1], [-1, 2]]) == [2, 3]
    assert el.leading_principal_minors([[2, -1, 1], [-1, 2, -1], [1, -1, 2]]) == [2, 3, 4]


def test_minors_need_symmetry():
    with pytest.raises(NotSymmetric):
        el.leading_principal_minors([[1, 2], [0, 1]])


def test_quotient_representatives():
    v = el.identity(3)
    w = [[1, 1, 0]]
    reps = el.quotient_representatives(v, w)
    assert len(reps) == 2
    assert el.rank(w + reps) == 3
    with pytest.raises(DimensionMismatch):
        el.quotient_representatives([[1, 0, 0]], [[0, 1, 0]])


def test_intersection_and_sum():
    u = [[1, 0, 0], [0, 1, 0]]
    w = [[0, 1, 0], [0, 0, 1]]
    inter = el.subspace_intersection(u, w)
    assert len(inter) == 1 and inter[0][0] == 0 and inter[0][2] == 0
    assert len(el.subspace_sum(u, w)) == 3


@given(matrices())
def test_rank_nullity(m):
    cols = len(m[0])
    ker = el.kernel_basis(m, cols)
    assert el.rank(m) + len(ker) == cols
    for v in ker:
        assert all(x == 0 for x in el.matvec(m, v))


@given(matrices())
def test_rank_matches_sympy(m):
    assert el.rank(m) == sympy.Matrix(m).rank()


@given(matrices(4, 4), st.lists(small, min_size=4, max_size=4))
def test_solve_recomputes(m, x0):
    x0 = [Fraction(v) for v in x0[: len(m[0])]]
    b = el.matvec(m, x0)
    x = el.solve(m, b)
    assert el.matvec(m, x) == b


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_sympy(m):
    assert el.determinant(m) == sympy.Matrix(m).det()


@given(matrices(4, 4), matrices(4, 4))
def test_intersection_dimension_formula(a, b):
    if len(a[0]) != len(b[0]):
        return
    du, dw = el.rank(a), el.rank(b)
    dsum = len(el.subspace_sum(a, b))
    assert len(el.subspace_intersection(a, b)) == du + dw - dsum
