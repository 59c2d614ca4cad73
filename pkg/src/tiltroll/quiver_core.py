"""Quivers, paths, relation ideals, chordless cycles and admissible cuts.

Paths are written right to left: the path ``("d", "c")`` means first ``c``
then ``d``.  Ideal membership is decided inside the path algebra truncated at
length N (paths of length > N are treated as zero); the admissibility witness
is that every path of length N reduces to zero, which makes the truncation
exact for admissible ideals.
"""
from __future__ import annotations

import re
from collections import defaultdict, deque
from fractions import Fraction
from typing import NamedTuple

from .errors import NotAdmissibleCut, NotSchurian, ParseError, TruncationTooSmall


class Arrow(NamedTuple):
    id: str
    source: str
    target: str


class Quiver:
    """Finite quiver without loops.  Immutable after construction."""

    def __init__(self, vertices, arrows, name="Q"):
        self.name = name
        self.vertices = tuple(str(v) for v in vertices)
        self.arrows = tuple(Arrow(str(a), str(s), str(t)) for a, s, t in arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifier")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow identifier")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.id} has an undeclared endpoint")
            if a.source == a.target:
                raise ValueError(f"arrow {a.id} is a loop")
        self.arrow = {a.id: a for a in self.arrows}
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        self._out = defaultdict(list)
        self._in = defaultdict(list)
        for a in self.arrows:
            self._out[a.source].append(a)
            self._in[a.target].append(a)

    def out_arrows(self, v):
        return self._out.get(v, [])

    def in_arrows(self, v):
        return self._in.get(v, [])

    def arrows_between(self, x, y):
        return [a for a in self._out.get(x, []) if a.target == y]

    def without_arrows(self, ids):
        ids = set(ids)
        return Quiver(self.vertices, [a for a in self.arrows if a.id not in ids], self.name)

    def full_subquiver(self, verts):
        verts = [v for v in self.vertices if v in set(verts)]
        vs = set(verts)
        return Quiver(verts, [a for a in self.arrows if a.source in vs and a.target in vs], self.name)

    def opposite(self):
        return Quiver(self.vertices, [(a.id, a.target, a.source) for a in self.arrows], self.name + "op")

    def is_acyclic(self):
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        queue = deque(v for v in self.vertices if indeg[v] == 0)
        seen = 0
        while queue:
            v = queue.popleft()
            seen += 1
            for a in self.out_arrows(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    queue.append(a.target)
        return seen == len(self.vertices)

    def is_connected(self):
        if not self.vertices:
            return True
        adj = defaultdict(set)
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def to_json(self):
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "arrows": [{"id": a.id, "source": a.source, "target": a.target} for a in self.arrows],
        }

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and set(self.arrows) == set(other.arrows)
        )

    def __hash__(self):
        return hash((self.vertices, frozenset(self.arrows)))

    def __repr__(self):
        return f"Quiver({list(self.vertices)}, {[tuple(a) for a in self.arrows]})"


class Path(NamedTuple):
    """A path; ``arrows`` is in right-to-left notation order."""

    source: str
    target: str
    arrows: tuple

    def __len__(self):
        return len(self.arrows)

    @property
    def length(self):
        return len(self.arrows)

    def compose(self, first):
        """self after ``first`` (``first`` is applied first)."""
        if first.target != self.source:
            raise ValueError("paths do not compose")
        return Path(first.source, self.target, self.arrows + first.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e{self.source}"
        return "*".join(self.arrows)


def trivial_path(v):
    return Path(v, v, ())


def path_from_arrows(q: Quiver, ids):
    """Build a path from arrow ids in right-to-left order, checking composability."""
    ids = tuple(ids)
    if not ids:
        raise ValueError("use trivial_path for length-0 paths")
    for later, earlier in zip(ids, ids[1:]):
        if q.arrow[earlier].target != q.arrow[later].source:
            raise ValueError(f"arrows {later} and {earlier} do not compose")
    return Path(q.arrow[ids[-1]].source, q.arrow[ids[0]].target, ids)


def path_vertices(q: Quiver, p: Path):
    """Vertices visited, in order of traversal."""
    out = [p.source]
    for a in reversed(p.arrows):
        out.append(q.arrow[a].target)
    return out


def path_sort_key(p: Path):
    return (len(p.arrows), p.arrows, p.source)


class Relation:
    """Linear combination of parallel paths of length >= 2."""

    def __init__(self, terms):
        merged = defaultdict(Fraction)
        for c, p in terms:
            merged[p] += Fraction(c)
        self.terms = [(c, p) for p, c in sorted(merged.items(), key=lambda kv: path_sort_key(kv[0])) if c != 0]
        if not self.terms:
            raise ValueError("relation has no nonzero coefficient")
        ends = {(p.source, p.target) for _, p in self.terms}
        if len(ends) != 1:
            raise ValueError("relation paths are not parallel")
        for _, p in self.terms:
            if len(p) < 2:
                raise ValueError(f"relation term {p} has length < 2")
        self.source, self.target = next(iter(ends))

    def as_dict(self):
        return {p: c for c, p in self.terms}

    def is_monomial(self):
        return len(self.terms) == 1

    def __eq__(self, other):
        return isinstance(other, Relation) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms))

    def __str__(self):
        return format_relation(self)

    def __repr__(self):
        return f"Relation({format_relation(self)})"


class Presentation:
    """A quiver with relations and a truncation bound N."""

    def __init__(self, quiver: Quiver, relations=(), truncation_bound=None, name=None):
        self.quiver = quiver
        self.relations = list(relations)
        for r in self.relations:
            for _, p in r.terms:
                for a in p.arrows:
                    if a not in quiver.arrow:
                        raise ValueError(f"relation uses unknown arrow {a}")
        self.truncation_bound = truncation_bound or max(2 * len(quiver.vertices), 2)
        self.name = name or quiver.name
        self._qb = None

    def with_bound(self, n):
        return Presentation(self.quiver, self.relations, n, self.name)

    def quotient_basis(self):
        if self._qb is None:
            self._qb = basis_of_quotient(self)
        return self._qb

    def dim(self):
        return self.quotient_basis().dim

    def to_json(self):
        return {
            "name": self.name,
            "quiver": self.quiver.to_json(),
            "relations": [format_relation(r) for r in self.relations],
            "truncation_bound": self.truncation_bound,
        }

    def __repr__(self):
        rels = ", ".join(format_relation(r) for r in self.relations)
        return f"Presentation({self.quiver!r}, [{rels}])"


# ---------------------------------------------------------------- text format

_TERM_RE = re.compile(r"\s*([+-])?\s*([^+\-\s][^+\-]*)")


def format_relation(r: Relation) -> str:
    out = []
    for k, (c, p) in enumerate(r.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = "*".join(p.arrows)
        if mag != 1:
            body = f"{mag}*{body}"
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def parse_relation(q: Quiver, text: str, line=None) -> Relation:
    text = text.strip()
    pos = 0
    terms = []
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse relation term near {text[pos:]!r}", line, pos + 1)
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2).strip()
        factors = [f.strip() for f in body.split("*")]
        coef = Fraction(1)
        if factors and re.fullmatch(r"\d+(/\d+)?", factors[0]):
            coef = Fraction(factors[0])
            factors = factors[1:]
        if not factors or any(not f for f in factors):
            raise ParseError(f"empty path in term {body!r}", line, m.start(2) + 1)
        for f in factors:
            if f not in q.arrow:
                raise ParseError(f"unknown arrow {f!r}", line, text.find(f, m.start(2)) + 1)
        try:
            p = path_from_arrows(q, factors)
        except ValueError as exc:
            raise ParseError(str(exc), line, m.start(2) + 1) from None
        terms.append((sign * coef, p))
        pos = m.end()
    if not terms:
        raise ParseError("empty relation", line, 1)
    try:
        return Relation(terms)
    except ValueError as exc:
        raise ParseError(str(exc), line, 1) from None


def parse_presentation(text: str, truncation_bound=None) -> Presentation:
    name = None
    vertices = None
    arrows = []
    rel_lines = []
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        s = line.strip()
        head = s.split()[0]
        if head == "quiver":
            parts = s.split(None, 1)
            name = parts[1].strip() if len(parts) > 1 else "Q"
            section = None
        elif head == "vertices":
            vertices = s.split()[1:]
            section = None
        elif s == "arrows":
            section = "arrows"
        elif s == "relations":
            section = "relations"
        elif section == "arrows":
            m = re.fullmatch(r"\s*([^\s:]+)\s*:\s*(\S+)\s*->\s*(\S+)\s*", line)
            if not m:
                raise ParseError(f"bad arrow line {s!r}", lineno, 1)
            arrows.append((m.group(1), m.group(2), m.group(3)))
        elif section == "relations":
            rel_lines.append((lineno, s))
        else:
            raise ParseError(f"unexpected line {s!r}", lineno, 1)
    if name is None:
        raise ParseError("missing 'quiver <name>' header", 1, 1)
    if vertices is None:
        raise ParseError("missing 'vertices' line", 1, 1)
    try:
        q = Quiver(vertices, arrows, name)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    rels = [parse_relation(q, s, lineno) for lineno, s in rel_lines]
    return Presentation(q, rels, truncation_bound, name)


def format_presentation(p: Presentation) -> str:
    q = p.quiver
    lines = [f"quiver {p.name}", "vertices " + " ".join(q.vertices), "arrows"]
    for a in q.arrows:
        lines.append(f"  {a.id}: {a.source} -> {a.target}")
    lines.append("relations")
    for r in p.relations:
        lines.append("  " + format_relation(r))
    return "\n".join(lines) + "\n"


def to_dot(obj) -> str:
    """Deterministic DOT text; relations become dashed constraint edges."""
    if isinstance(obj, Presentation):
        q, rels, name = obj.quiver, obj.relations, obj.name
    else:
        q, rels, name = obj, [], obj.name
    safe = re.sub(r"[^A-Za-z0-9_]", "_", name) or "Q"
    lines = [f"digraph {safe} {{", "  rankdir=LR;"]
    for v in q.vertices:
        lines.append(f'  "{v}";')
    for a in q.arrows:
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.id}"];')
    for r in rels:
        lines.append(
            f'  "{r.source}" -> "{r.target}" [style=dashed, arrowhead=none, constraint=true, label="{format_relation(r)}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ path spaces


def paths_from(q: Quiver, v, max_len):
    """All paths starting at v of length <= max_len (including e_v)."""
    out = [trivial_path(v)]
    frontier = [trivial_path(v)]
    for _ in range(max_len):
        nxt = []
        for p in frontier:
            for a in q.out_arrows(p.target):
                nxt.append(Path(p.source, a.target, (a.id,) + p.arrows))
        out.extend(nxt)
        frontier = nxt
    return out


def _mul_paths(q, later: Path, earlier: Path):
    if earlier.target != later.source:
        return None
    return Path(earlier.source, later.target, later.arrows + earlier.arrows)


def _lc_mul(later, earlier, bound):
    """Product of two sparse path combinations, truncated above ``bound``."""
    out = defaultdict(Fraction)
    for p, c in later.items():
        for r, d in earlier.items():
            if r.target != p.source:
                continue
            if len(p.arrows) + len(r.arrows) > bound:
                continue
            out[Path(r.source, p.target, p.arrows + r.arrows)] += c * d
    return {k: v for k, v in out.items() if v != 0}


class _Echelon:
    """Sparse echelon basis of a space of path combinations.

    The pivot of each stored vector is its largest path in (length, arrows)
    order, so reduction rewrites long paths in terms of shorter ones.
    """

    def __init__(self):
        self.rows = {}

    def reduce(self, vec, full=False):
        v = dict(vec)
        if full:
            # eliminate every pivot term, largest first
            while True:
                cands = [p for p in v if p in self.rows]
                if not cands:
                    return v
                p = max(cands, key=path_sort_key)
                c = v[p]
                for r, d in self.rows[p].items():
                    nv = v.get(r, 0) - c * d
                    if nv:
                        v[r] = nv
                    else:
                        v.pop(r, None)
        while v:
            p = max(v, key=path_sort_key)
            if p not in self.rows:
                return v
            c = v[p]
            for r, d in self.rows[p].items():
                nv = v.get(r, 0) - c * d
                if nv:
                    v[r] = nv
                else:
                    v.pop(r, None)
        return v

    def add(self, vec):
        v = self.reduce(vec)
        if not v:
            return None
        p = max(v, key=path_sort_key)
        c = v[p]
        v = {r: d / c for r, d in v.items()}
        self.rows[p] = v
        return v


class QuotientBasis:
    """Basis of kQ/I by normal-form paths, with a reduction map."""

    def __init__(self, pres: Presentation, echelon: _Echelon, bound: int, paths_by_pair):
        self.presentation = pres
        self.bound = bound
        self._ech = echelon
        basis = []
        for key in sorted(paths_by_pair):
            for p in paths_by_pair[key]:
                if p not in echelon.rows and len(p) < bound:
                    basis.append(p)
        basis.sort(key=lambda p: (pres.quiver.vindex[p.source], pres.quiver.vindex[p.target], path_sort_key(p)))
        self.basis = basis
        self.index = {p: i for i, p in enumerate(basis)}
        self.dim = len(basis)
        self._cache = {}

    def reduce(self, combo):
        """Coordinates (dict index -> coefficient) of a path or path combination."""
        if isinstance(combo, Path):
            hit = self._cache.get(combo)
            if hit is not None:
                return dict(hit)
            if len(combo) >= self.bound:
                self._cache[combo] = {}
                return {}
            red = self._ech.reduce({combo: Fraction(1)}, full=True)
            out = {}
            for p, c in red.items():
                if len(p) >= self.bound:
                    continue
                out[self.index[p]] = c
            self._cache[combo] = out
            return dict(out)
        out = defaultdict(Fraction)
        for p, c in combo.items():
            for i, d in self.reduce(p).items():
                out[i] += c * d
        return {i: c for i, c in out.items() if c != 0}

    def is_zero(self, p):
        return not self.reduce(p)

    def block(self, x, y):
        """Indices of basis paths from x to y."""
        return [i for i, p in enumerate(self.basis) if p.source == x and p.target == y]

    def is_schurian(self):
        counts = defaultdict(int)
        for p in self.basis:
            counts[(p.source, p.target)] += 1
        return all(c <= 1 for c in counts.values())


def _ideal_closure(pres: Presentation, gens, bound):
    """Echelon basis of the ideal generated by ``gens`` modulo paths longer than bound."""
    q = pres.quiver
    ech = _Echelon()
    queue = deque(gens)
    while queue:
        v = queue.popleft()
        v = {p: c for p, c in v.items() if len(p) <= bound}
        if not v:
            continue
        row = ech.add(v)
        if row is None:
            continue
        some = next(iter(row))
        x, y = some.source, some.target
        for a in q.out_arrows(y):
            nv = {Path(p.source, a.target, (a.id,) + p.arrows): c for p, c in row.items() if len(p) < bound}
            if nv:
                queue.append(nv)
        for a in q.in_arrows(x):
            nv = {Path(a.source, p.target, p.arrows + (a.id,)): c for p, c in row.items() if len(p) < bound}
            if nv:
                queue.append(nv)
    return ech


def basis_of_quotient(pres: Presentation, bound=None) -> QuotientBasis:
    """Basis of kQ/I with the admissibility witness check.

    Raises TruncationTooSmall when some path of length N does not lie in I.
    """
    n = bound or pres.truncation_bound
    q = pres.quiver
    gens = [r.as_dict() for r in pres.relations]
    ech = _ideal_closure(pres, gens, n)
    by_pair = defaultdict(list)
    for v in q.vertices:
        for p in paths_from(q, v, n):
            by_pair[(q.vindex[p.source], q.vindex[p.target])].append(p)
    for plist in by_pair.values():
        for p in plist:
            if len(p) == n and ech.reduce({p: Fraction(1)}, full=True):
                raise TruncationTooSmall(f"path {p} of length {n} is not in the ideal; raise N")
    return QuotientBasis(pres, ech, n, by_pair)


def zero_length(pres: Presentation):
    """Smallest L such that every path of length L lies in the ideal."""
    qb = pres.quotient_basis()
    q = pres.quiver
    for length in range(0, qb.bound + 1):
        ok = True
        for v in q.vertices:
            for p in paths_from(q, v, length):
                if len(p) == length and qb.reduce(p):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return length
    return qb.bound


def minimal_relations(pres: Presentation, candidates=None):
    """Minimal generating relations: a basis of I/(JI + IJ).

    Candidates (defaults to the given relations) are preferred, so that a
    natural generating set is kept whenever it is already minimal.
    """
    q = pres.quiver
    L = zero_length(pres)
    bound = max(pres.truncation_bound, L + 1)
    gens = [r.as_dict() for r in pres.relations]
    ideal = _ideal_closure(pres, gens, bound)
    prods = []
    for row in ideal.rows.values():
        some = next(iter(row))
        for a in q.out_arrows(some.target):
            nv = {Path(p.source, a.target, (a.id,) + p.arrows): c for p, c in row.items() if len(p) < bound}
            if nv:
                prods.append(nv)
        for a in q.in_arrows(some.source):
            nv = {Path(a.source, p.target, p.arrows + (a.id,)): c for p, c in row.items() if len(p) < bound}
            if nv:
                prods.append(nv)
    sub = _Echelon()
    for v in prods:
        sub.add(v)
    chosen = []
    cands = [r.as_dict() for r in (candidates if candidates is not None else pres.relations)]
    cands += [dict(v) for v in ideal.rows.values()]
    for v in cands:
        v = {p: c for p, c in v.items() if len(p) <= bound}
        if not v:
            continue
        if sub.add(v) is not None:
            chosen.append(v)
    out = []
    for v in chosen:
        v = {p: c for p, c in v.items() if len(p) < bound}
        if v:
            out.append(_normalize_relation(v))
    out.sort(key=lambda r: (q.vindex[r.source], q.vindex[r.target], [path_sort_key(p) for _, p in r.terms]))
    return out


def _normalize_relation(v):
    terms = sorted(v.items(), key=lambda kv: path_sort_key(kv[0]))
    lead = terms[0][1]
    return Relation([(c / lead, p) for p, c in terms])


def minimize_presentation(pres: Presentation) -> Presentation:
    return Presentation(pres.quiver, minimal_relations(pres), pres.truncation_bound, pres.name)


# ------------------------------------------------------------- chordless cycles


class ChordlessCycle(NamedTuple):
    vertices: tuple
    oriented: bool
    arrows: tuple


def _undirected_counts(q: Quiver):
    cnt = defaultdict(int)
    for a in q.arrows:
        cnt[frozenset((a.source, a.target))] += 1
    return cnt


def chordless_cycles(q: Quiver):
    """All chordless cycles, each reported once, with an orientation flag."""
    cnt = _undirected_counts(q)
    order = {v: i for i, v in enumerate(q.vertices)}
    nbrs = defaultdict(set)
    for key in cnt:
        u, v = tuple(key)
        nbrs[u].add(v)
        nbrs[v].add(u)
    found = []

    def arrows_on(cyc):
        vs = set(cyc)
        return tuple(a.id for a in q.arrows if a.source in vs and a.target in vs)

    def oriented(cyc, arrs):
        ins = defaultdict(int)
        outs = defaultdict(int)
        for aid in arrs:
            a = q.arrow[aid]
            outs[a.source] += 1
            ins[a.target] += 1
        return all(ins[v] == 1 and outs[v] == 1 for v in cyc)

    for key, c in cnt.items():
        if c == 2:
            cyc = tuple(sorted(key, key=order.get))
            arrs = arrows_on(cyc)
            found.append(ChordlessCycle(cyc, oriented(cyc, arrs), arrs))

    def single(u, v):
        return cnt.get(frozenset((u, v)), 0) == 1

    def extend(path):
        s = path[0]
        last = path[-1]
        for w in sorted(nbrs[last], key=order.get):
            if order[w] <= order[s] or w in path or not single(last, w):
                continue
            # w may not touch interior vertices of the path
            if any(w in nbrs[u] for u in path[1:-1]):
                continue
            if s in nbrs[w]:
                if len(path) >= 2 and single(w, s) and order[path[1]] < order[w]:
                    cyc = tuple(path) + (w,)
                    arrs = arrows_on(cyc)
                    found.append(ChordlessCycle(cyc, oriented(cyc, arrs), arrs))
                continue
            extend(path + [w])

    for s in q.vertices:
        for v in sorted(nbrs[s], key=order.get):
            if order[v] > order[s] and single(s, v):
                extend([s, v])
    found.sort(key=lambda c: (len(c.vertices), [order[v] for v in c.vertices]))
    return found


def oriented_chordless_cycles(q: Quiver):
    return [c for c in chordless_cycles(q) if c.oriented]


class Cut(NamedTuple):
    arrows: frozenset

    def sorted_ids(self):
        return sorted(self.arrows)


def enumerate_admissible_cuts(q: Quiver):
    """Arrow sets meeting every oriented chordless cycle in exactly one arrow.

    Only arrows lying on some oriented chordless cycle are ever used.
    """
    cycles = [frozenset(c.arrows) for c in oriented_chordless_cycles(q)]
    order = {a.id: i for i, a in enumerate(q.arrows)}
    results = []

    def rec(chosen):
        counts = [len(c & chosen) for c in cycles]
        if any(k > 1 for k in counts):
            return
        todo = [i for i, k in enumerate(counts) if k == 0]
        if not todo:
            results.append(frozenset(chosen))
            return
        cyc = cycles[todo[0]]
        for a in sorted(cyc, key=order.get):
            if any(a in c and len(c & chosen) > 0 for c in cycles):
                continue
            rec(chosen | {a})

    rec(frozenset())
    results.sort(key=lambda s: sorted(order[a] for a in s))
    return [Cut(s) for s in results]


def is_admissible_cut(q: Quiver, arrows) -> bool:
    arrows = frozenset(arrows)
    cycles = oriented_chordless_cycles(q)
    on_cycle = set()
    for c in cycles:
        on_cycle |= set(c.arrows)
        if len(arrows & set(c.arrows)) != 1:
            return False
    return arrows <= on_cycle


def cut_quotient(pres: Presentation, cut) -> Presentation:
    """kQ/<I u Delta> presented on the quiver without the cut arrows."""
    arrows = frozenset(cut.arrows if isinstance(cut, Cut) else cut)
    q = pres.quiver
    unknown = [a for a in arrows if a not in q.arrow]
    if unknown:
        raise NotAdmissibleCut(f"unknown arrows {sorted(unknown)}")
    if not is_admissible_cut(q, arrows):
        raise NotAdmissibleCut(f"{sorted(arrows)} is not an admissible cut")
    if not arrows:
        return pres
    q2 = q.without_arrows(arrows)
    gens = []
    for r in pres.relations:
        terms = [(c, p) for c, p in r.terms if not (set(p.arrows) & arrows)]
        if terms:
            gens.append(Relation(terms))
    p2 = Presentation(q2, gens, pres.truncation_bound, pres.name + "_cut")
    return minimize_presentation(p2)


# -------------------------------------------------------- parallel paths


def simple_paths(q: Quiver, x, y, max_len=None):
    """Paths from x to y visiting pairwise distinct vertices."""
    out = []
    limit = max_len if max_len is not None else len(q.vertices)
    if x == y:
        return out

    def rec(v, arrs, seen):
        if len(arrs) >= limit:
            return
        for a in q.out_arrows(v):
            if a.target == y:
                out.append(Path(x, y, tuple(reversed(arrs + [a.id]))))
            elif a.target not in seen:
                rec(a.target, arrs + [a.id], seen | {a.target})

    rec(x, [], {x})
    return out


def parallel_paths(q: Quiver, arrow_id):
    a = q.arrow[arrow_id]
    return [p for p in simple_paths(q, a.source, a.target) if p.arrows != (arrow_id,)]


def antiparallel_paths(q: Quiver, arrow_id):
    a = q.arrow[arrow_id]
    return simple_paths(q, a.target, a.source)


def _is_shortest(q: Quiver, p: Path, arrow_id):
    vs = path_vertices(q, p)
    if len(set(vs)) != len(vs):
        return False
    allowed = set(p.arrows) | {arrow_id}
    full = q.full_subquiver(vs)
    return all(b.id in allowed for b in full.arrows)


def shortest_parallel_paths(q: Quiver, arrow_id):
    return [p for p in parallel_paths(q, arrow_id) if _is_shortest(q, p, arrow_id)]


def shortest_antiparallel_paths(q: Quiver, arrow_id):
    return [p for p in antiparallel_paths(q, arrow_id) if _is_shortest(q, p, arrow_id)]


# ----------------------------------------------------------- schurian isomorphism


class Isomorphism(NamedTuple):
    vertex_map: dict
    arrow_map: dict
    scalars: dict  # arrow id -> Fraction, or None when only algebraic scalars exist


def _path_data(pres: Presentation):
    """Nonzero paths with their coefficient on the block basis, and minimal zero paths."""
    qb = pres.quotient_basis()
    q = pres.quiver
    nonzero = {}
    minimal_zero = []
    frontier = [trivial_path(v) for v in q.vertices]
    for p in frontier:
        nonzero[p] = Fraction(1)
    while frontier:
        nxt = []
        for p in frontier:
            for a in q.out_arrows(p.target):
                np_ = Path(p.source, a.target, (a.id,) + p.arrows)
                red = qb.reduce(np_)
                if not red:
                    # zero; minimal if the other maximal proper subpath is nonzero
                    sub = Path(q.arrow[np_.arrows[-1]].target, np_.target, np_.arrows[:-1])
                    if len(np_) == 1 or qb.reduce(sub):
                        minimal_zero.append(np_)
                    continue
                if len(red) != 1:
                    raise NotSchurian(f"{pres.name}: block {np_.source}->{np_.target} has dimension > 1")
                (idx, c), = red.items()
                nonzero[np_] = c
                nxt.append(np_)
        frontier = nxt
    return nonzero, minimal_zero


def _map_path(q2: Quiver, amap, p: Path, vmap):
    if not p.arrows:
        return trivial_path(vmap[p.source])
    return Path(vmap[p.source], vmap[p.target], tuple(amap[a] for a in p.arrows))


def _int_nth_root(n, k):
    if n < 0:
        if k % 2 == 0:
            return None
        r = _int_nth_root(-n, k)
        return -r if r is not None else None
    lo, hi = 0, 1
    while hi ** k <= n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == n else None


def _rat_root(x: Fraction, k):
    if k == 1:
        return x
    a = _int_nth_root(x.numerator, k)
    b = _int_nth_root(x.denominator, k)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def solve_monomial_system(nvars, equations):
    """Solve prod_j x_j^{e_j} = r for nonzero x over an algebraically closed field.

    ``equations`` is a list of (exponent list, Fraction r).  Returns
    (solvable, rational solution or None).  Integer row reduction with
    unimodular operations keeps the right-hand sides multiplicative.
    """
    rows = [([int(e) for e in exps], Fraction(r)) for exps, r in equations]
    pivots = []
    prow = 0
    for col in range(nvars):
        # gcd-reduce column col among rows prow..
        while True:
            nz = [i for i in range(prow, len(rows)) if rows[i][0][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(rows[i][0][col]))
            rows[prow], rows[i0] = rows[i0], rows[prow]
            done = True
            pe, pr = rows[prow]
            for i in range(prow + 1, len(rows)):
                e, r = rows[i]
                if e[col] != 0:
                    f = e[col] // pe[col]
                    ne = [a - f * b for a, b in zip(e, pe)]
                    nr = r / pr ** f if f >= 0 else r * pr ** (-f)
                    rows[i] = (ne, nr)
                    if ne[col] != 0:
                        done = False
            if done:
                break
        nz = [i for i in range(prow, len(rows)) if rows[i][0][col] != 0]
        if nz:
            pivots.append((prow, col))
            prow += 1
    for i in range(prow, len(rows)):
        if rows[i][1] != 1:
            return False, None
    x = [Fraction(1)] * nvars
    rational = True
    for prow_i, col in reversed(pivots):
        e, r = rows[prow_i]
        rest = Fraction(1)
        for j in range(col + 1, nvars):
            if e[j]:
                if x[j] is None:
                    rest = None
                    break
                rest *= x[j] ** e[j]
        if rest is None:
            x[col] = None
            rational = False
            continue
        target = r / rest
        k = e[col]
        if k < 0:
            k, target = -k, 1 / target
        root = _rat_root(target, k)
        if root is None:
            x[col] = None
            rational = False
        else:
            x[col] = root
    return True, (x if rational else None)


def _vertex_bijections(q1: Quiver, q2: Quiver):
    """Backtracking over vertex bijections preserving arrow counts."""
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return

    def cnt(q):
        c = defaultdict(int)
        for a in q.arrows:
            c[(a.source, a.target)] += 1
        return c

    c1, c2 = cnt(q1), cnt(q2)

    def sig(q, v):
        return (len(q.out_arrows(v)), len(q.in_arrows(v)))

    # visit order: BFS so that each new vertex is adjacent to placed ones
    order = []
    seen = set()
    adj = defaultdict(set)
    for a in q1.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    for s in q1.vertices:
        if s in seen:
            continue
        seen.add(s)
        dq = deque([s])
        while dq:
            v = dq.popleft()
            order.append(v)
            for w in sorted(adj[v], key=q1.vindex.get):
                if w not in seen:
                    seen.add(w)
                    dq.append(w)
    cands = {v: [w for w in q2.vertices if sig(q2, w) == sig(q1, v)] for v in q1.vertices}
    vmap = {}
    used = set()

    def rec(k):
        if k == len(order):
            yield dict(vmap)
            return
        v = order[k]
        for w in cands[v]:
            if w in used:
                continue
            ok = True
            for u, wu in vmap.items():
                if c1.get((u, v), 0) != c2.get((wu, w), 0) or c1.get((v, u), 0) != c2.get((w, wu), 0):
                    ok = False
                    break
            if not ok:
                continue
            vmap[v] = w
            used.add(w)
            yield from rec(k + 1)
            del vmap[v]
            used.discard(w)

    yield from rec(0)


def quiver_isomorphisms(q1: Quiver, q2: Quiver):
    """Vertex maps of quiver isomorphisms (arrow maps are forced when no multi-arrows)."""
    return _vertex_bijections(q1, q2)


def quivers_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    return next(iter(_vertex_bijections(q1, q2)), None) is not None


def schurian_iso(p1: Presentation, p2: Presentation):
    """An isomorphism of the presented algebras, or None.

    Both algebras must be schurian (NotSchurian otherwise) unless their
    dimensions already differ.
    """
    q1, q2 = p1.quiver, p2.quiver
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return None
    if p1.dim() != p2.dim():
        return None
    for p in (p1, p2):
        if not p.quotient_basis().is_schurian():
            raise NotSchurian(f"{p.name} is not schurian")
    nz1, mz1 = _path_data(p1)
    nz2, _ = _path_data(p2)
    aidx = {a.id: i for i, a in enumerate(q1.arrows)}
    by_pair = defaultdict(list)
    for p in nz1:
        by_pair[(p.source, p.target)].append(p)
    for vmap in _vertex_bijections(q1, q2):
        amap = {}
        for a in q1.arrows:
            cands = q2.arrows_between(vmap[a.source], vmap[a.target])
            amap[a.id] = cands[0].id
        if any(_map_path(q2, amap, p, vmap) in nz2 for p in mz1):
            continue
        if any(_map_path(q2, amap, p, vmap) not in nz2 for p in nz1):
            continue
        eqs = []
        for plist in by_pair.values():
            ref = plist[0]
            dr, dr2 = nz1[ref], nz2[_map_path(q2, amap, ref, vmap)]
            for p in plist[1:]:
                dp, dp2 = nz1[p], nz2[_map_path(q2, amap, p, vmap)]
                exps = [0] * len(aidx)
                for a in p.arrows:
                    exps[aidx[a]] += 1
                for a in ref.arrows:
                    exps[aidx[a]] -= 1
                ratio = (dp * dr2) / (dr * dp2)
                if not any(exps):
                    if ratio != 1:
                        eqs = None
                        break
                    continue
                eqs.append((exps, ratio))
            if eqs is None:
                break
        if eqs is None:
            continue
        ok, sol = solve_monomial_system(len(aidx), eqs)
        if not ok:
            continue
        scalars = None if sol is None else {a.id: sol[aidx[a.id]] for a in q1.arrows}
        return Isomorphism(vmap, amap, scalars)
    return None


def is_schurian(p: Presentation) -> bool:
    return p.quotient_basis().is_schurian()


def iso_or_none(p1, p2):
    """schurian_iso that returns None instead of raising for non-schurian input."""
    try:
        return schurian_iso(p1, p2)
    except NotSchurian:
        return None


def relabel(p: Presentation, vmap, amap=None, name=None) -> Presentation:
    """Copy of p with vertices (and optionally arrows) renamed."""
    amap = amap or {a.id: a.id for a in p.quiver.arrows}
    q = p.quiver
    q2 = Quiver([vmap[v] for v in q.vertices], [(amap[a.id], vmap[a.source], vmap[a.target]) for a in q.arrows], name or q.name)
    rels = []
    for r in p.relations:
        rels.append(Relation([(c, Path(vmap[pp.source], vmap[pp.target], tuple(amap[a] for a in pp.arrows))) for c, pp in r.terms]))
    return Presentation(q2, rels, p.truncation_bound, name or p.name)


def make_presentation(vertices, arrows, relations=(), name="Q", truncation_bound=None):
    """Convenience constructor; relations are strings in the text grammar."""
    q = Quiver(vertices, arrows, name)
    rels = [parse_relation(q, r) if isinstance(r, str) else r for r in relations]
    return Presentation(q, rels, truncation_bound, name)


def all_paths(q: Quiver, max_len):
    out = []
    for v in q.vertices:
        out.extend(paths_from(q, v, max_len))
    return out


__all__ = [
    "Arrow", "Quiver", "Path", "Relation", "Presentation", "Cut", "ChordlessCycle",
    "QuotientBasis", "Isomorphism", "trivial_path", "path_from_arrows", "parse_presentation",
    "format_presentation", "parse_relation", "format_relation", "to_dot", "basis_of_quotient",
    "chordless_cycles", "oriented_chordless_cycles", "enumerate_admissible_cuts",
    "is_admissible_cut", "cut_quotient", "schurian_iso", "parallel_paths",
    "antiparallel_paths", "shortest_parallel_paths", "shortest_antiparallel_paths",
    "minimal_relations", "minimize_presentation", "make_presentation", "relabel",
    "quivers_isomorphic", "quiver_isomorphisms", "iso_or_none", "is_schurian",
]
