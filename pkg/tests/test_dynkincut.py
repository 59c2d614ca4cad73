import pytest

from tiltroll.catalog import (
    a3_one_relation,
    a5_two_zero_relations,
    affine_a3_bad_cut,
    d8_rolled_presentations,
    d8_rolling_complex,
    d8_relation_extension_quiver,
    pentagon_extension_quiver,
    pentagon_two_relations,
    three_cycle,
)
from tiltroll.corpus import run_equivalence_suite
from tiltroll.dynkincut import (
    augmented_quiver,
    check_idempotent_quotient,
    cond_bc_check,
    cond_d_check,
    find_cut_realization,
    idempotent_quotient,
    inherited_relation_conflicts,
    iterated_tilted_dynkin_decision,
    realize_by_search,
    synth_cluster_relations,
    validate_cluster_quiver,
)
from tiltroll.errors import NotClusterQuiver
from tiltroll.quiver_core import Quiver, cut_quotient, enumerate_admissible_cuts, quivers_isomorphic, schurian_iso
from tiltroll.repcat import quiver_A


def test_synth_three_cycle():
    c = synth_cluster_relations(three_cycle())
    assert sorted(str(r) for r in c.relations) == ["a*c", "b*a", "c*b"]
    assert c.dim() == 6


def test_synth_acyclic_has_no_relations():
    assert synth_cluster_relations(quiver_A(4)).relations == []


def test_synth_rejects_non_cluster_quivers():
    square = Quiver("1234", [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "4"), ("d", "4", "3")])
    assert not validate_cluster_quiver(square).ok
    with pytest.raises(NotClusterQuiver):
        synth_cluster_relations(square)
    kron = Quiver("12", [("x", "1", "2"), ("y", "1", "2")])
    with pytest.raises(NotClusterQuiver):
        synth_cluster_relations(kron)


def test_d8_steps_are_cuts_of_one_algebra():
    c = synth_cluster_relations(d8_relation_extension_quiver())
    known = d8_rolled_presentations()
    # cutting the three arrows added to B1 gives B1 back
    assert schurian_iso(cut_quotient(c, ["r", "s", "t"]), known[1]) is not None
    for h, b in enumerate(known):
        cut = find_cut_realization(b, c)
        assert cut is not None, h
        assert schurian_iso(cut_quotient(c, cut), b) is not None


def test_idempotent_quotients():
    c = synth_cluster_relations(three_cycle())
    assert idempotent_quotient(c, []) is c
    q = idempotent_quotient(c, ["3"])
    assert quivers_isomorphic(q.quiver, quiver_A(2)) and q.relations == []
    assert check_idempotent_quotient(c, ["3"]).agrees


def test_pentagon_inherited_conflicts():
    b = pentagon_two_relations()
    q = pentagon_extension_quiver()
    bad = {v: inherited_relation_conflicts(b, q, [v]) for v in q.vertices}
    assert {v for v, c in bad.items() if c} == {"3", "5"}
    assert bad["3"][0].relation == "x*w" and bad["5"][0].relation == "e*d"


def test_find_cut_realization():
    c = synth_cluster_relations(three_cycle())
    cut = find_cut_realization(a3_one_relation(), c)
    assert cut is not None and len(cut.arrows) == 1
    assert find_cut_realization(pentagon_two_relations(), synth_cluster_relations(pentagon_extension_quiver())) is None


def test_augmented_quiver():
    q, new = augmented_quiver(a3_one_relation())
    assert list(new) == ["eta1"] and str(new["eta1"]) == "b*a"
    assert quivers_isomorphic(q, three_cycle())


def test_cond_d():
    assert cond_d_check(a3_one_relation()).holds
    d = cond_d_check(a5_two_zero_relations())
    assert not d.holds and d.violation["mu_length"] == 0


def test_cond_bc():
    _, t = realize_by_search(a3_one_relation(), (0,))
    ok = cond_bc_check(t)
    assert ok.holds and ok.holds_b and ok.pi_kernel_zero and ok.witness is None
    bad = cond_bc_check(d8_rolling_complex())
    assert not bad.holds and bad.consistent and bad.witness is not None


@pytest.mark.parametrize("make,verdict,stage", [
    (a3_one_relation, True, "accepted"),
    (a5_two_zero_relations, True, "accepted"),
    (pentagon_two_relations, False, "tits"),
    (affine_a3_bad_cut, False, "cluster"),
])
def test_decision(make, verdict, stage):
    d = iterated_tilted_dynkin_decision(make())
    assert d.verdict is verdict and d.stage == stage
    assert d.to_json()["verdict"] == ("YES" if verdict else "NO")


def test_pentagon_later_stages_also_fail():
    d = iterated_tilted_dynkin_decision(pentagon_two_relations(), stop_at_first=False)
    stages = d.certificate["stages"]
    assert not d.verdict and d.stage == "tits"
    assert stages["cluster"]["ok"] and not stages["cut"]["ok"]


def test_cut_counts_three_cycle():
    assert len(enumerate_admissible_cuts(three_cycle())) == 3


@pytest.mark.parametrize("name", ["A3", "A4"])
def test_equivalence_suite(name):
    rep = run_equivalence_suite(name)
    assert rep["ok"], rep.get("failures", [])[:3]
