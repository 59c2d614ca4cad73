import itertools

import pytest

from tiltroll.catalog import three_cycle
from tiltroll.corpus import (
    cluster_instances,
    cut_instances,
    exchange_matrix,
    mutate,
    mutation_class,
    reorientations,
    run_cut_suite,
    tilted_instances,
)
from tiltroll.quiver_core import quivers_isomorphic, schurian_iso
from tiltroll.repcat import enumerate_tilting_modules, quiver_A, quiver_D

# sizes of the mutation classes, up to isomorphism, from the literature
MUTATION_CLASS = {"A3": 4, "A4": 6, "A5": 19, "D4": 6}


def _path_orientations(n):
    # Burnside over reversing the path: fixed strings need s_i = flip(s_{n-i})
    strings = list(itertools.product("<>", repeat=n - 1))
    fixed = sum(all(s[i] != s[n - 2 - i] for i in range(n - 1)) for s in strings)
    return (len(strings) + fixed) // 2


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_reorientations_of_paths(n):
    assert len(reorientations(quiver_A(n))) == _path_orientations(n)


def test_reorientations_of_star():
    # classified by the number of outgoing arrows at the centre
    assert len(reorientations(quiver_D(4))) == 4


def test_mutation_is_an_involution():
    q = three_cycle()
    for v in q.vertices:
        assert exchange_matrix(mutate(mutate(q, v), v)) == exchange_matrix(q)
    # mutating the oriented 3-cycle at any vertex gives an orientation of A3
    m = mutate(q, "1")
    assert m.is_acyclic() and any(quivers_isomorphic(m, o) for o in reorientations(quiver_A(3)))


@pytest.mark.parametrize("name,q", [("A3", quiver_A(3)), ("A4", quiver_A(4)), ("D4", quiver_D(4)), ("A5", quiver_A(5))])
def test_mutation_class_sizes(name, q):
    assert len(mutation_class(q)) == MUTATION_CLASS[name]


@pytest.mark.parametrize("name", ["A3", "A4", "D4"])
def test_cluster_tilted_quivers_fill_the_mutation_class(name):
    distinct = []
    for ci in cluster_instances(name):
        q = ci.synthesized.quiver
        if not any(quivers_isomorphic(q, o) for o in distinct):
            distinct.append(q)
    assert len(distinct) == MUTATION_CLASS[name]


def test_tilted_instances_a3():
    # the five tilting modules over the linear orientation already give distinct algebras
    assert len(enumerate_tilting_modules(quiver_A(3))) == 5
    found = tilted_instances("A3")
    for a, b in itertools.combinations(found, 2):
        assert schurian_iso(a.presentation, b.presentation) is None


def test_cut_instances_are_quotients():
    clusters = [ci.synthesized for ci in cluster_instances("A3")]
    for ci in cut_instances(clusters):
        assert len(ci.quotient.quiver.arrows) == len(ci.cluster.quiver.arrows) - len(ci.cut)


@pytest.mark.parametrize("name", ["A3", "A5"])
def test_cut_suite(name):
    rep = run_cut_suite(name)
    assert rep["ok"], rep["failures"][:3]
    assert rep["cluster_tilted"] == rep["mutation_class"] == MUTATION_CLASS[name]
