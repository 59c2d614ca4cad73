import os
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tiltroll.catalog import a3_one_relation, d8_rolled_presentations, no_cut_quiver, three_cycle
from tiltroll.dynkincut import synth_cluster_relations
from tiltroll.errors import NotAdmissibleCut, NotSchurian, ParseError, TruncationTooSmall
from tiltroll.quiver_core import (
    Quiver,
    basis_of_quotient,
    chordless_cycles,
    cut_quotient,
    enumerate_admissible_cuts,
    format_presentation,
    is_admissible_cut,
    make_presentation,
    minimal_relations,
    oriented_chordless_cycles,
    parse_presentation,
    relabel,
    schurian_iso,
    shortest_antiparallel_paths,
    to_dot,
)

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def bowtie():
    """alpha':1->2, alpha'':2->3, alpha:1->3, beta:3->4, gamma:4->1."""
    return Quiver("1234", [("ap", "1", "2"), ("app", "2", "3"), ("al", "1", "3"), ("be", "3", "4"), ("ga", "4", "1")], "Bow")


def test_three_cycle_is_one_oriented_cycle():
    cycles = chordless_cycles(three_cycle())
    assert len(cycles) == 1
    assert set(cycles[0].vertices) == {"1", "2", "3"} and cycles[0].oriented


def test_bowtie_cycles():
    cycles = chordless_cycles(bowtie())
    got = {(frozenset(c.vertices), c.oriented) for c in cycles}
    assert got == {(frozenset("123"), False), (frozenset("134"), True)}


def test_tree_has_no_cycles():
    q = Quiver("1234", [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")])
    assert chordless_cycles(q) == []
    assert [c.arrows for c in enumerate_admissible_cuts(q)] == [frozenset()]


def test_three_cycle_cuts():
    cuts = enumerate_admissible_cuts(three_cycle())
    assert sorted(c.sorted_ids() for c in cuts) == [["a"], ["b"], ["c"]]


def test_no_cut_quiver():
    q = no_cut_quiver()
    assert len(q.vertices) == 11 and len(q.arrows) == 16
    oriented = oriented_chordless_cycles(q)
    assert len(oriented) == 7
    assert sorted(len(c.vertices) for c in oriented) == [3, 5, 5, 5, 6, 6, 6]
    # the triangle alpha_1 alpha_2 alpha_3
    assert {"a1", "a2", "a3"} in [set(c.arrows) for c in oriented]
    assert enumerate_admissible_cuts(q) == []


def test_cut_of_three_cycle():
    c = synth_cluster_relations(three_cycle())
    b = cut_quotient(c, ["c"])
    assert [a.id for a in b.quiver.arrows] == ["a", "b"]
    assert schurian_iso(b, a3_one_relation()) is not None
    assert cut_quotient(make_presentation("12", [("x", "1", "2")]), []).dim() == 3


def test_cut_quotient_rejects_bad_cut():
    c = synth_cluster_relations(three_cycle())
    with pytest.raises(NotAdmissibleCut):
        cut_quotient(c, ["a", "b"])
    with pytest.raises(NotAdmissibleCut):
        cut_quotient(c, ["zz"])


def test_presentation_dependent_cut():
    q = bowtie()
    arrows = [(a.id, a.source, a.target) for a in q.arrows]
    p1 = make_presentation(q.vertices, arrows, ["be*al", "ga*be"], "B1")
    p2 = make_presentation(q.vertices, arrows, ["be*al - be*app*ap", "ga*be"], "B2")
    b1 = cut_quotient(p1, ["al"])
    b2 = cut_quotient(p2, ["al"])
    assert {str(r) for r in minimal_relations(b1)} == {"ga*be"}
    assert {str(r) for r in minimal_relations(b2)} == {"be*app*ap", "ga*be"}
    assert b2.dim() < b1.dim()
    assert schurian_iso(b1, b2) is None


def test_quotient_bases():
    assert basis_of_quotient(a3_one_relation()).dim == 5
    assert synth_cluster_relations(three_cycle()).dim() == 6
    assert make_presentation("12", [("x", "1", "2")]).dim() == 3


def test_truncation_too_small():
    # the oriented 3-cycle without relations is infinite dimensional
    p = make_presentation("123", [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")], [], "free")
    with pytest.raises(TruncationTooSmall):
        basis_of_quotient(p)


def test_schurian_iso_basics():
    c = synth_cluster_relations(three_cycle())
    iso = schurian_iso(c, c)
    assert iso.vertex_map == {v: v for v in "123"}
    rot = relabel(c, {"1": "2", "2": "3", "3": "1"}, {"a": "b", "b": "c", "c": "a"})
    iso = schurian_iso(c, rot)
    assert iso is not None and iso.vertex_map["1"] == "2"


def test_schurian_iso_rejects_non_schurian():
    kron = make_presentation("12", [("x", "1", "2"), ("y", "1", "2")])
    with pytest.raises(NotSchurian):
        schurian_iso(kron, kron)


def test_shortest_antiparallel():
    q = three_cycle()
    paths = shortest_antiparallel_paths(q, "a")
    assert [p.arrows for p in paths] == [("c", "b")]
    g22 = Quiver(["v1", "v2", "w2", "v3"], [("p1", "v1", "v2"), ("p2", "v2", "v3"), ("q1", "v1", "w2"),
                                             ("q2", "w2", "v3"), ("eta", "v3", "v1")])
    assert len(shortest_antiparallel_paths(g22, "eta")) == 2
    tree = Quiver("123", [("a", "1", "2"), ("b", "3", "2")])
    assert shortest_antiparallel_paths(tree, "a") == []


def test_text_roundtrip():
    b0 = d8_rolled_presentations()[0]
    text = format_presentation(b0)
    again = parse_presentation(text)
    assert format_presentation(again) == text
    assert schurian_iso(again, b0) is not None


def test_parse_error_location():
    text = "quiver Q\nvertices 1 2\narrows\n  x: 1 -> 2\nrelations\n  x + + \n"
    with pytest.raises(ParseError) as err:
        parse_presentation(text)
    assert err.value.line == 6
    with pytest.raises(ParseError):
        parse_presentation("vertices 1 2\n")
    with pytest.raises(ParseError):
        parse_presentation("quiver Q\nvertices 1 2\narrows\n  x 1 2\n")


@pytest.mark.parametrize("name,obj", [
    ("a2", Quiver("12", [("x", "1", "2")], "A2")),
    ("three_cycle", synth_cluster_relations(three_cycle())),
    ("b0", d8_rolled_presentations()[0]),
])
def test_dot_golden(name, obj):
    with open(os.path.join(GOLDEN, f"{name}.dot")) as fh:
        assert to_dot(obj) == fh.read()


# ------------------------------------------------------------- properties


@st.composite
def small_quivers(draw):
    n = draw(st.integers(3, 6))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=n - 1, max_size=2 * n, unique=True))
    arrows = []
    seen = set()
    for i, j in chosen:
        if frozenset((i, j)) in seen:
            continue
        seen.add(frozenset((i, j)))
        arrows.append((f"a{i}{j}", str(i), str(j)))
    return Quiver([str(i) for i in range(n)], arrows)


@given(small_quivers())
def test_chordless_cycles_have_degree_two(q):
    for c in chordless_cycles(q):
        vs = set(c.vertices)
        inside = [a for a in q.arrows if a.source in vs and a.target in vs]
        assert sorted(a.id for a in inside) == sorted(c.arrows)
        for v in vs:
            assert sum(v in (a.source, a.target) for a in inside) == 2


@given(small_quivers())
def test_cuts_hit_each_oriented_cycle_once(q):
    cycles = oriented_chordless_cycles(q)
    for cut in enumerate_admissible_cuts(q):
        assert is_admissible_cut(q, cut.arrows)
        for c in cycles:
            assert len(cut.arrows & set(c.arrows)) == 1


def _iso_corpus():
    base = [synth_cluster_relations(three_cycle()), a3_one_relation()] + d8_rolled_presentations()[:2]
    rng = random.Random(7)
    out = []
    for p in base:
        vs = list(p.quiver.vertices)
        perm = vs[:]
        rng.shuffle(perm)
        out.append(p)
        out.append(relabel(p, dict(zip(vs, perm)), name=p.name + "'"))
    return out


def test_schurian_iso_is_an_equivalence():
    corpus = _iso_corpus()
    rel = [[schurian_iso(a, b) is not None for b in corpus] for a in corpus]
    n = len(corpus)
    for i in range(n):
        assert rel[i][i]
        for j in range(n):
            assert rel[i][j] == rel[j][i]
            for k in range(n):
                if rel[i][j] and rel[j][k]:
                    assert rel[i][k]
    for i in range(0, n, 2):
        assert rel[i][i + 1]


def test_cut_quotient_shrinks():
    from tiltroll.corpus import cluster_instances

    for ci in cluster_instances("A4"):
        c = ci.synthesized
        for cut in enumerate_admissible_cuts(c.quiver):
            b = cut_quotient(c, cut)
            assert set(b.quiver.vertices) == set(c.quiver.vertices)
            assert b.dim() <= c.dim()


@given(small_quivers())
def test_chordless_cycles_match_networkx(q):
    nx = pytest.importorskip("networkx")
    g = nx.Graph()
    g.add_nodes_from(q.vertices)
    g.add_edges_from((a.source, a.target) for a in q.arrows)
    expected = {frozenset(c) for c in nx.chordless_cycles(g) if len(c) >= 3}
    assert {frozenset(c.vertices) for c in chordless_cycles(q)} == expected
