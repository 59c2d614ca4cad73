"""Named worked examples: complexes, presentations and quivers.

Complexes are placed by (orbit, length) in the repetition quiver, the
length being the distance from the bottom of the diagram in half steps.
"""
from __future__ import annotations

from .derived import DComplex, derived_category, standard_quiver
from .quiver_core import Quiver, make_presentation

_V8 = [str(i) for i in range(1, 9)]


def _place(cat, spots):
    """Objects at (orbit, length) where length = 2n + c_orbit - 1."""
    out = []
    for orbit, length in spots:
        o = str(orbit)
        out.append(cat.object_at((o, (length + 1 - cat.c[o]) // 2)))
    return out


def d8_rolling_complex() -> DComplex:
    """Tilting complex over D8 whose rolls reach a tilted algebra after three steps."""
    cat = derived_category(standard_quiver("D8"))
    spots = [(1, 1), (1, 13), (3, 15), (1, 25), (5, 29), (7, 29), (8, 31), (8, 43)]
    return DComplex(cat, _place(cat, spots))


def d8_rolled_presentations():
    """Endomorphism algebras of the first four rolls of d8_rolling_complex()."""
    return [
        make_presentation(_V8, [("a", 1, 2), ("b", 2, 3), ("c", 3, 4), ("d", 4, 5), ("e", 5, 7), ("f", 6, 7), ("g", 7, 8)],
                          ["b*a", "d*c", "g*e", "g*f"], "B0"),
        make_presentation(_V8, [("a", 1, 2), ("b", 2, 3), ("c", 3, 4), ("d", 4, 5), ("e", 5, 7), ("f", 6, 7), ("p", 8, 5), ("q", 8, 6)],
                          ["b*a", "d*c", "e*p - f*q"], "B1"),
        make_presentation(_V8, [("a", 1, 2), ("b", 2, 3), ("c", 5, 3), ("d", 4, 5), ("e", 5, 7), ("f", 6, 7), ("g", 7, 8)],
                          ["b*a", "g*f", "g*e", "c*d"], "B2"),
        make_presentation(_V8, [("a", 1, 2), ("b", 2, 3), ("c", 5, 3), ("d", 4, 5), ("e", 5, 7), ("f", 6, 7), ("p", 8, 5), ("q", 8, 6)],
                          ["b*a", "e*p - f*q", "c*d"], "B3"),
    ]


def d8_relation_extension_quiver() -> Quiver:
    """Common quiver of the relation extensions along the D8 rolling sequence."""
    return Quiver(_V8, [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"), ("d", "4", "5"), ("e", "5", "7"),
                        ("f", "6", "7"), ("p", "8", "5"), ("q", "8", "6"), ("r", "3", "1"), ("s", "5", "3"),
                        ("t", "7", "8")], "R8")


def a4_non_preserving_complex() -> DComplex:
    """Tilting complex over A4 with gldim End = 3 whose roll is not tilting."""
    cat = derived_category(standard_quiver("A4"))
    return DComplex(cat, _place(cat, [(1, 2), (4, 5), (1, 8), (4, 11)]))


def three_cycle() -> Quiver:
    return Quiver("123", [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")], "C3")


def a3_one_relation():
    return make_presentation("123", [("a", "1", "2"), ("b", "2", "3")], ["b*a"], "A3rel")


def pentagon_two_relations():
    """Non-oriented 5-cycle with two zero relations; not iterated tilted.

    Its relation extension has the oriented triangle g, eta1, eta2, so the
    arrows added for the relations never form an admissible cut.
    """
    return make_presentation(
        "12345",
        [("g", "1", "2"), ("d", "1", "3"), ("e", "3", "4"), ("w", "4", "5"), ("x", "5", "2")],
        ["e*d", "x*w"],
        "Pent",
    )


def pentagon_extension_quiver() -> Quiver:
    """Quiver of the relation extension of pentagon_two_relations()."""
    q = pentagon_two_relations().quiver
    arrows = [(a.id, a.source, a.target) for a in q.arrows] + [("al", "2", "4"), ("be", "4", "1")]
    return Quiver(q.vertices, arrows, "PentExt")


def a5_two_zero_relations():
    """Linear A5 with two consecutive zero relations sharing vertex 3."""
    return make_presentation(
        "12345",
        [("al", "1", "2"), ("be", "2", "3"), ("ga", "3", "4"), ("de", "4", "5")],
        ["be*al", "de*ga"],
        "A5rel2",
    )


def a5_two_zero_relations_cluster_quiver() -> Quiver:
    q = a5_two_zero_relations().quiver
    arrows = [(a.id, a.source, a.target) for a in q.arrows] + [("psi", "3", "1"), ("phi", "5", "3")]
    return Quiver(q.vertices, arrows, "A5rel2C")


def no_cut_quiver() -> Quiver:
    """Eleven vertices, sixteen arrows, seven oriented chordless cycles and no admissible cut."""
    arrows = [
        ("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 1), ("g", 4, 5),
        ("d1", 5, 7), ("d1p", 7, 1), ("b3", 1, 6), ("b3p", 6, 4),
        ("d2", 5, 9), ("d2p", 9, 2), ("b2", 3, 8), ("b2p", 8, 4),
        ("b1", 2, 11), ("b1p", 11, 4), ("d3", 5, 10), ("d3p", 10, 3),
    ]
    return Quiver([str(i) for i in range(1, 12)], [(a, str(s), str(t)) for a, s, t in arrows], "NoCut")


def affine_a3_tilted():
    """Tilted algebra of affine type A3 with one zero relation."""
    return make_presentation("1234", [("x", "1", "2"), ("y", "1", "3"), ("be", "3", "2"), ("al", "4", "3")],
                             ["be*al"], "AffA3")


def affine_a3_bad_cut():
    """Cut of the relation extension of affine_a3_tilted() that is not iterated tilted."""
    return make_presentation("1234", [("x", "1", "2"), ("y", "1", "3"), ("al", "4", "3"), ("ga", "2", "4")],
                             ["al*ga"], "AffA3cut")


EXAMPLES = {
    "d8-rolling": d8_rolling_complex,
    "a4-non-preserving": a4_non_preserving_complex,
    "a3-one-relation": a3_one_relation,
    "pentagon": pentagon_two_relations,
    "a5-two-relations": a5_two_zero_relations,
    "affine-a3": affine_a3_tilted,
    "affine-a3-cut": affine_a3_bad_cut,
}


__all__ = [
    "EXAMPLES",
    "a3_one_relation",
    "a4_non_preserving_complex",
    "a5_two_zero_relations",
    "a5_two_zero_relations_cluster_quiver",
    "affine_a3_bad_cut",
    "affine_a3_tilted",
    "d8_relation_extension_quiver",
    "d8_rolled_presentations",
    "d8_rolling_complex",
    "no_cut_quiver",
    "pentagon_extension_quiver",
    "pentagon_two_relations",
    "three_cycle",
]
