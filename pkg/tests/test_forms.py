from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tiltroll.catalog import a3_one_relation, d8_rolled_presentations, three_cycle
from tiltroll.corpus import cluster_instances, cut_instances, tilted_instances
from tiltroll.dynkincut import tits_form_of
from tiltroll.endoalg import algebra_from_presentation, ext_dims
from tiltroll.errors import CompanionMismatch, CyclicQuiver, DimensionMismatch, NotSymmetric
from tiltroll.forms import (
    QuasiCartan,
    bilinear,
    companion_from_cut,
    euler_form_from_cartan,
    euler_form_hereditary,
    is_positive_definite,
    sign_condition_check,
    symmetrize,
    tits_form,
)
from tiltroll.quiver_core import Quiver, enumerate_admissible_cuts
from tiltroll.repcat import ext1_dim, hom_dim, projective, quiver_A, simple


def test_euler_form_a2():
    q = quiver_A(2)
    e = euler_form_hereditary(q)
    assert bilinear(e, (1, 1), (1, 0)) == 1 == hom_dim(projective(q, "1"), simple(q, "1"))
    assert bilinear(e, (1, 0), (0, 1)) == -1
    assert ext1_dim(simple(q, "1"), simple(q, "2")) == 1
    assert all(e[i][i] == 1 for i in range(2))


def test_euler_form_needs_acyclic():
    with pytest.raises(CyclicQuiver):
        euler_form_hereditary(three_cycle())


def test_tits_form_hereditary_a3():
    tf = tits_form(quiver_A(3))
    assert tf.companion.matrix == symmetrize(euler_form_hereditary(quiver_A(3)))
    assert is_positive_definite(tf.companion)


def test_tits_form_one_relation():
    tf = tits_form_of(a3_one_relation())
    assert tf.companion.tolist() == [[2, -1, 1], [-1, 2, -1], [1, -1, 2]]
    assert is_positive_definite(tf.companion)
    assert tf((1, 1, 1)) == 2


def test_tits_form_shape_check():
    with pytest.raises(DimensionMismatch):
        tits_form(a3_one_relation(), [[0]])


def test_positive_definite_examples():
    assert is_positive_definite(QuasiCartan([[2, 0], [0, 2]]))
    assert not is_positive_definite(QuasiCartan([[2, -2], [-2, 2]]))


def test_quasi_cartan_validation():
    with pytest.raises(NotSymmetric):
        QuasiCartan([[2, 1], [0, 2]])
    with pytest.raises(DimensionMismatch):
        QuasiCartan([[1, 0], [0, 2]])


def test_sign_condition():
    q = three_cycle()
    assert sign_condition_check(q, companion_from_cut(q, ["a"]))
    assert not sign_condition_check(q, QuasiCartan([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]))
    tree = quiver_A(3)
    assert sign_condition_check(tree, QuasiCartan([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]))
    with pytest.raises(CompanionMismatch):
        sign_condition_check(tree, QuasiCartan([[2, 0, 0], [0, 2, -1], [0, -1, 2]]))


def _gldim2_corpus():
    out = [a3_one_relation()] + d8_rolled_presentations()
    for ci in cut_instances([c.synthesized for c in cluster_instances("A4")]):
        if ci.gldim <= 2:
            out.append(ci.quotient)
    return out


def test_euler_equals_tits_for_gldim_two():
    for b in _gldim2_corpus():
        alg = algebra_from_presentation(b)
        chi = symmetrize(euler_form_from_cartan(alg.cartan()))
        q = tits_form(b, ext_dims(alg)).companion.matrix
        assert chi == q, b.name


def test_cut_companions_pass_sign_condition():
    for ci in cluster_instances("A4"):
        q = ci.synthesized.quiver
        for cut in enumerate_admissible_cuts(q):
            assert sign_condition_check(q, companion_from_cut(q, cut.arrows))


def test_tilted_tits_forms_positive_definite():
    for ti in tilted_instances("A4"):
        assert is_positive_definite(tits_form_of(ti.presentation).companion)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_euler_form_matches_hom_minus_ext_on_simples(x, y):
    # bilinearity plus the values on simples determine the form
    q = quiver_A(3)
    e = euler_form_hereditary(q)
    vs = q.vertices
    total = Fraction(0)
    for i, a in enumerate(vs):
        for j, b in enumerate(vs):
            si, sj = simple(q, a), simple(q, b)
            total += x[i] * y[j] * (hom_dim(si, sj) - ext1_dim(si, sj))
    assert bilinear(e, x, y) == total


def test_companion_needs_no_cycle_for_tree():
    q = Quiver("12", [("x", "1", "2")])
    assert companion_from_cut(q, []).tolist() == [[2, -1], [-1, 2]]
