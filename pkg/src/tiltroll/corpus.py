"""Exhaustive instance generation by Dynkin type and the invariant suites run on it."""
from __future__ import annotations

import itertools
from typing import NamedTuple

from .derived import derived_category, enumerate_tilting_complexes, standard_quiver
from .dynkincut import (
    cond_bc_check,
    cond_d_check,
    iterated_tilted_dynkin_decision,
    synth_cluster_relations,
    tits_form_of,
    with_adequate_bound,
)
from .errors import TiltRollError
from .endoalg import (
    algebra_from_presentation,
    cluster_algebra_of,
    end_algebra,
    extract_presentation,
    gldim,
    projection_pi,
    quivers_match,
    relation_extension,
)
from .forms import is_positive_definite
from .quiver_core import (
    Quiver,
    chordless_cycles,
    cut_quotient,
    enumerate_admissible_cuts,
    oriented_chordless_cycles,
    quivers_isomorphic,
    schurian_iso,
    shortest_antiparallel_paths,
)
from .rolling import roll_to_tilted


# ------------------------------------------------------------------ quivers


def reorientations(q: Quiver):
    """All orientations of the underlying graph of q, one per isomorphism class."""
    out = []
    for flips in itertools.product((False, True), repeat=len(q.arrows)):
        arrows = [(a.id, a.target, a.source) if f else (a.id, a.source, a.target) for a, f in zip(q.arrows, flips)]
        cand = Quiver(q.vertices, arrows, q.name)
        if not any(quivers_isomorphic(cand, o) for o in out):
            out.append(cand)
    return out


def exchange_matrix(q: Quiver):
    n = len(q.vertices)
    b = [[0] * n for _ in range(n)]
    for a in q.arrows:
        i, j = q.vindex[a.source], q.vindex[a.target]
        b[i][j] += 1
        b[j][i] -= 1
    return b


def quiver_from_exchange(vertices, b, name="Q"):
    arrows = []
    n = len(vertices)
    for i in range(n):
        for j in range(n):
            for k in range(max(b[i][j], 0)):
                arrows.append((f"m{vertices[i]}_{vertices[j]}" + (f"_{k + 1}" if k else ""), vertices[i], vertices[j]))
    return Quiver(vertices, arrows, name)


def mutate(q: Quiver, v) -> Quiver:
    """Quiver mutation at vertex v."""
    b = exchange_matrix(q)
    k = q.vindex[str(v)]
    n = len(b)
    nb = [row[:] for row in b]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                nb[i][j] = -b[i][j]
            else:
                nb[i][j] = b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2
    return quiver_from_exchange(list(q.vertices), nb, q.name)


def mutation_class(q: Quiver, limit=500):
    """Quivers mutation equivalent to q, one per isomorphism class."""
    found = [q]
    todo = [q]
    while todo:
        cur = todo.pop()
        for v in cur.vertices:
            nq = mutate(cur, v)
            if not any(quivers_isomorphic(nq, f) for f in found):
                found.append(nq)
                todo.append(nq)
                if len(found) > limit:
                    raise ValueError("mutation class exceeds the limit")
    return found


# --------------------------------------------------------------- instances


class TiltedInstance(NamedTuple):
    complex: object
    presentation: object


def _dedup(items, key):
    out = []
    for it in items:
        p = key(it)
        if not any(schurian_iso(key(o), p) is not None for o in out):
            out.append(it)
    return out


def tilted_instances(name):
    """Tilted algebras of the named Dynkin type from tilting modules over every orientation."""
    found = []
    for oq in reorientations(standard_quiver(name)):
        cat = derived_category(oq)
        for t in enumerate_tilting_complexes(cat, (0,)):
            p = extract_presentation(end_algebra(t)).presentation
            found.append(TiltedInstance(t, p))
    return _dedup(found, lambda x: x.presentation)


def iterated_tilted_complexes(name, shifts=(0, 1), max_gldim=2):
    """Tilting complexes over the standard orientation with gldim End <= max_gldim."""
    cat = derived_category(standard_quiver(name))
    out = []
    for t in enumerate_tilting_complexes(cat, shifts):
        if gldim(end_algebra(t)) <= max_gldim:
            out.append(t)
    return out


class ClusterInstance(NamedTuple):
    tilted: TiltedInstance
    relation_extension: object  # Presentation
    new_arrows: list
    synthesized: object  # Presentation on the same quiver


def cluster_instances(name, tilted=None):
    """Cluster-tilted algebras as relation extensions of tilted algebras, deduplicated."""
    tilted = tilted if tilted is not None else tilted_instances(name)
    out = []
    for ti in tilted:
        r = relation_extension(ti.complex)
        out.append(ClusterInstance(ti, r.presentation, r.new_arrows, synth_cluster_relations(r.presentation.quiver)))
    return out


class CutInstance(NamedTuple):
    cluster: object  # Presentation
    cut: list
    quotient: object
    gldim: float


def cut_instances(clusters):
    out = []
    for c in clusters:
        for cut in enumerate_admissible_cuts(c.quiver):
            quo = with_adequate_bound(cut_quotient(c, cut))
            out.append(CutInstance(c, cut.sorted_ids(), quo, gldim(algebra_from_presentation(quo))))
    return out


# ------------------------------------------------------------------ checks


def chordless_cycles_from_g(cluster_quiver: Quiver, cut, quotient_quiver: Quiver):
    """Every chordless cycle of the cut quotient is a G(a,b) with its eta removed."""
    cut = set(cut)
    for cyc in chordless_cycles(quotient_quiver):
        vs = set(cyc.vertices)
        extra = [a for a in cluster_quiver.arrows if a.source in vs and a.target in vs
                 and a.id not in quotient_quiver.arrow]
        if len(extra) != 1 or extra[0].id not in cut:
            return False
        if len(shortest_antiparallel_paths(cluster_quiver, extra[0].id)) != 2:
            return False
    return True


def relations_pair_with_arrows(c):
    """Each relation is antiparallel to exactly one arrow."""
    q = c.quiver
    for r in c.relations:
        anti = [a for a in q.arrows if a.source == r.target and a.target == r.source]
        if len(anti) != 1:
            return False
    return True


def run_cut_suite(name):
    """Generate the cluster-tilted algebras of a type and test every gldim <= 2 cut."""
    tilted = tilted_instances(name)
    clusters = cluster_instances(name, tilted)
    rep = {"type": name, "tilted": len(tilted), "failures": []}
    fails = rep["failures"]
    for ci in clusters:
        if schurian_iso(ci.synthesized, ci.relation_extension) is None:
            fails.append({"check": "synth_matches_relation_extension", "tilted": ci.tilted.presentation.to_json()})
        if not relations_pair_with_arrows(ci.synthesized):
            fails.append({"check": "relation_arrow_pairing", "cluster": ci.synthesized.to_json()})
        back = cut_quotient(ci.synthesized, ci.new_arrows)
        if schurian_iso(back, ci.tilted.presentation) is None:
            fails.append({"check": "cut_by_new_arrows_returns_b", "tilted": ci.tilted.presentation.to_json()})
    distinct = _dedup([ci.synthesized for ci in clusters], lambda x: x)
    rep["cluster_tilted"] = len(distinct)
    mclass = mutation_class(standard_quiver(name))
    rep["mutation_class"] = len(mclass)
    covered = all(any(quivers_isomorphic(m, c.quiver) for c in distinct) for m in mclass)
    if not covered or len(mclass) != len(distinct):
        fails.append({"check": "mutation_class_coverage", "mutation_class": len(mclass), "cluster_tilted": len(distinct)})
    cuts = cut_instances(distinct)
    rep["cuts"] = len(cuts)
    good = [ci for ci in cuts if ci.gldim <= 2]
    rep["cuts_gldim_le_2"] = len(good)
    yes = 0
    for ci in good:
        q = ci.quotient.quiver
        tf = tits_form_of(ci.quotient)
        row = {"cluster": ci.cluster.name, "cut": ci.cut}
        if not is_positive_definite(tf.companion):
            fails.append(dict(row, check="tits_positive_definite"))
        if not q.is_acyclic():
            fails.append(dict(row, check="directed"))
        if oriented_chordless_cycles(q):
            fails.append(dict(row, check="no_oriented_chordless_cycle"))
        if not chordless_cycles_from_g(ci.cluster.quiver, ci.cut, q):
            fails.append(dict(row, check="chordless_cycles_from_g"))
        if iterated_tilted_dynkin_decision(ci.quotient).verdict:
            yes += 1
        else:
            fails.append(dict(row, check="decision_yes"))
    rep["decision_yes"] = yes
    rep["ok"] = not fails
    return rep


def run_equivalence_suite(name, shifts=(0, 1)):
    """Conditions (b), (c), (d) and the kernel of pi agree on every instance."""
    counts = {}
    fails = []
    for t in iterated_tilted_complexes(name, shifts):
        bc = cond_bc_check(t)
        p = extract_presentation(end_algebra(t)).presentation
        d = cond_d_check(p)
        key = "holds" if bc.holds_c else "fails"
        counts[key] = counts.get(key, 0) + 1
        if not (bc.consistent and d.holds == bc.holds_c):
            fails.append({"complex": t.describe(), "bc": bc.to_json(), "d": d.to_json()})
    return {"type": name, "counts": counts, "failures": fails, "ok": not fails}


def run_pi_suite(name, shifts=(0, 1, 2)):
    """The projection C(B) -> R(B) on every gldim <= 2 tilting complex in the window."""
    fails = []
    n = 0
    for t in iterated_tilted_complexes(name, shifts):
        n += 1
        c = cluster_algebra_of(t)
        r = end_algebra(t, (0, 1))
        rep = projection_pi(c, r)
        ok = rep.multiplicative and rep.split and rep.kernel_in_rad2 and rep.kernel_is_eta_square and quivers_match(c, r)
        if not ok:
            fails.append({"complex": t.describe(), "pi": rep.to_json()})
    return {"type": name, "instances": n, "failures": fails, "ok": not fails}


def run_roll_suite(name, shifts=(0, 1, 2), max_steps=30):
    """roll_to_tilted on every gldim <= 2 tilting complex; potentials are checked on the way."""
    lengths = {}
    fails = []
    for t in iterated_tilted_complexes(name, shifts):
        try:
            tr = roll_to_tilted(t, max_steps)
        except TiltRollError as e:
            fails.append({"complex": t.describe(), "error": f"{type(e).__name__}: {e}"})
            continue
        pots = [s.potential for s in tr.steps]
        if not potentials_monotone(pots):
            fails.append({"complex": t.describe(), "potentials": pots})
        k = len(tr.steps) - 1
        lengths[k] = lengths.get(k, 0) + 1
    return {"type": name, "rolls_needed": {str(k): v for k, v in sorted(lengths.items())}, "failures": fails, "ok": not fails}


def potentials_monotone(pots):
    for a, b in zip(pots, pots[1:]):
        if a > 0 and not b < a:
            return False
        if a == 0 and b != 0:
            return False
    return True


__all__ = [
    "ClusterInstance",
    "CutInstance",
    "TiltedInstance",
    "chordless_cycles_from_g",
    "cluster_instances",
    "cut_instances",
    "exchange_matrix",
    "iterated_tilted_complexes",
    "mutate",
    "mutation_class",
    "potentials_monotone",
    "relations_pair_with_arrows",
    "reorientations",
    "run_cut_suite",
    "run_equivalence_suite",
    "run_pi_suite",
    "run_roll_suite",
    "tilted_instances",
]
