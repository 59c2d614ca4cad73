"""Concrete finite-dimensional algebras.

An algebra is stored by a basis whose elements each live in one block
e_t A e_s (written as a morphism s -> t), a table of structure constants, and
an integer degree per basis element.  The product x*y means "x after y", so it
is nonzero only when source(x) == target(y).  With this convention the path
b*a of a presentation evaluates to lift(b) * lift(a).
"""
from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from typing import NamedTuple

from . import exactlin as el
from .errors import GldimTooLarge, GradingMismatch, NotBasic, WindowTooSmall
from .quiver_core import (
    Path,
    Presentation,
    Quiver,
    Relation,
    all_paths,
    basis_of_quotient,
    minimal_relations,
    path_sort_key,
    quivers_isomorphic,
)

_ONE = Fraction(1)
_ZERO = Fraction(0)


class BasisLabel(NamedTuple):
    source: object
    target: object
    degree: int
    tag: object


class ConcreteAlgebra:
    def __init__(self, vertices, labels, table, idempotents, name="A"):
        """``table[(i, j)]`` is a dict k -> coefficient for basis_i * basis_j."""
        self.vertices = list(vertices)
        self.vindex = {v: k for k, v in enumerate(self.vertices)}
        self.labels = [BasisLabel(*lb) for lb in labels]
        self.dim = len(self.labels)
        self.table = {k: v for k, v in table.items() if v}
        self.idempotents = dict(idempotents)  # vertex -> basis index
        self.name = name
        self._by_source = defaultdict(list)
        self._by_target = defaultdict(list)
        for k, lb in enumerate(self.labels):
            self._by_source[lb.source].append(k)
            self._by_target[lb.target].append(k)
        self._radical = None

    # ----- arithmetic -----

    def unit_vector(self, k):
        v = [_ZERO] * self.dim
        v[k] = _ONE
        return v

    def mul_basis(self, i, j):
        return self.table.get((i, j), {})

    def mul(self, x, y):
        out = [_ZERO] * self.dim
        xs = [(i, c) for i, c in enumerate(x) if c]
        ys = [(j, c) for j, c in enumerate(y) if c]
        for i, a in xs:
            for j, b in ys:
                for k, c in self.table.get((i, j), {}).items():
                    out[k] += a * b * c
        return out

    def one(self):
        v = [_ZERO] * self.dim
        for k in self.idempotents.values():
            v[k] = _ONE
        return v

    def degrees(self):
        return sorted({lb.degree for lb in self.labels})

    def block(self, source, target, degree=None):
        return [k for k in self._by_source[source]
                if self.labels[k].target == target and (degree is None or self.labels[k].degree == degree)]

    def cartan(self):
        """cartan[i][j] = dim e_j A e_i (row i is the dimension vector of A e_i)."""
        n = len(self.vertices)
        c = [[0] * n for _ in range(n)]
        for lb in self.labels:
            c[self.vindex[lb.source]][self.vindex[lb.target]] += 1
        return c

    # ----- checks -----

    def check_idempotents(self):
        one = self.one()
        for k in range(self.dim):
            e = self.unit_vector(k)
            if self.mul(one, e) != e or self.mul(e, one) != e:
                return False
        for v, k in self.idempotents.items():
            for w, m in self.idempotents.items():
                want = self.unit_vector(k) if v == w else [_ZERO] * self.dim
                if self.mul(self.unit_vector(k), self.unit_vector(m)) != want:
                    return False
        return True

    def check_associative(self, triples):
        for i, j, k in triples:
            a, b, c = self.unit_vector(i), self.unit_vector(j), self.unit_vector(k)
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                return False
        return True

    def check_grading(self):
        for (i, j), prod in self.table.items():
            d = self.labels[i].degree + self.labels[j].degree
            if any(self.labels[k].degree != d for k in prod):
                return False
        return True

    # ----- radical -----

    def radical(self):
        """Basis (vectors) of the radical: kernel of the trace form tr(L_{xy})."""
        if self._radical is None:
            # trace of left multiplication by each basis element
            trl = [_ZERO] * self.dim
            for (i, j), prod in self.table.items():
                c = prod.get(j)
                if c:
                    trl[i] += c
            gram = [[_ZERO] * self.dim for _ in range(self.dim)]
            for (i, j), prod in self.table.items():
                gram[i][j] = sum((c * trl[k] for k, c in prod.items()), _ZERO)
            ker = el.kernel_basis(gram, self.dim)
            # split into blocks; the radical is a two-sided ideal so block parts stay inside
            blocks = defaultdict(list)
            for v in ker:
                parts = defaultdict(lambda: [_ZERO] * self.dim)
                for k, c in enumerate(v):
                    if c:
                        lb = self.labels[k]
                        parts[(lb.source, lb.target, lb.degree)][k] = c
                for key, part in parts.items():
                    blocks[key].append(part)
            rad = []
            for key in sorted(blocks, key=str):
                rad.extend(el.row_space_basis(blocks[key]))
            self._radical = rad
        return [list(v) for v in self._radical]

    def radical_power(self, r):
        """Basis of rad^r."""
        rad = self.radical()
        cur = rad
        for _ in range(r - 1):
            if not cur:
                return []
            cur = el.row_space_basis([self.mul(a, b) for a in rad for b in cur])
        return cur

    def loewy_length(self):
        rad = self.radical()
        cur = rad
        r = 1
        while cur:
            cur = el.row_space_basis([self.mul(a, b) for a in rad for b in cur])
            r += 1
        return r

    def is_basic(self):
        if not self.check_idempotents():
            return False
        rad = self.radical()
        for v, k in self.idempotents.items():
            loc = self.block(v, v)
            in_rad = [r for r in rad if any(r[j] for j in loc)]
            if len(loc) - len(in_rad) != 1:
                return False
        return True

    def to_json(self):
        def num(c):
            return int(c) if c.denominator == 1 else str(c)

        return {
            "name": self.name,
            "vertices": [str(v) for v in self.vertices],
            "basis": [{"source": str(lb.source), "target": str(lb.target), "degree": lb.degree,
                       "tag": str(lb.tag)} for lb in self.labels],
            "idempotents": {str(v): k for v, k in self.idempotents.items()},
            "products": [[i, j, {str(k): num(c) for k, c in sorted(prod.items())}]
                         for (i, j), prod in sorted(self.table.items())],
        }


# ----------------------------------------------------------------- builders


def algebra_from_presentation(p: Presentation) -> ConcreteAlgebra:
    """kQ/I with the normal-form path basis."""
    qb = basis_of_quotient(p)
    labels = [(b.source, b.target, 0, str(b) if len(b) else f"e{b.source}") for b in qb.basis]
    table = {}
    for i, x in enumerate(qb.basis):
        for j, y in enumerate(qb.basis):
            if x.source != y.target:
                continue
            prod = Path(y.source, x.target, x.arrows + y.arrows)
            red = qb.reduce(prod)
            if red:
                table[(i, j)] = red
    idem = {v: qb.index[Path(v, v, ())] for v in p.quiver.vertices}
    alg = ConcreteAlgebra(p.quiver.vertices, labels, table, idem, p.name)
    alg.path_basis = qb
    return alg


def end_algebra(t, degrees=(0,), check_boundary=False, name=None) -> ConcreteAlgebra:
    """(+)_{d in degrees} Hom(T, F^d T) with g*f = F^{deg f}(g) o f.

    Products landing outside ``degrees`` are dropped.  With ``check_boundary``
    the window must contain every degree where Hom(T, F^d T) is nonzero;
    WindowTooSmall is raised otherwise.
    """
    cat = t.cat
    degrees = sorted(set(degrees))
    summ = list(t.summands)
    coords = [cat.coordinate(x) for x in summ]
    n = len(summ)
    verts = list(range(1, n + 1))
    if check_boundary:
        lo, hi = degrees[0], degrees[-1]
        for d in (lo, hi):
            if any(cat.hom_dim_coord(coords[a], cat.F_coord(coords[b], d))
                   for a in range(n) for b in range(n)) and d != 0:
                raise WindowTooSmall(f"Hom(T, F^{d} T) is nonzero at the window boundary")
        for d in range(2 * lo - 1, 2 * hi + 2):
            if d in degrees:
                continue
            if any(cat.hom_dim_coord(coords[a], cat.F_coord(coords[b], d)) for a in range(n) for b in range(n)):
                raise WindowTooSmall(f"Hom(T, F^{d} T) is nonzero outside the window")
    labels = []
    morph = []
    idem = {}
    for d in degrees:
        for a in range(n):
            for b in range(n):
                for k, f in enumerate(cat.hom_basis_coord(coords[a], cat.F_coord(coords[b], d))):
                    if d == 0 and a == b:
                        idem[verts[a]] = len(labels)
                    labels.append((verts[a], verts[b], d, k))
                    morph.append(f)
    index = {(lb[0], lb[1], lb[2], lb[3]): i for i, lb in enumerate(labels)}
    by_src = defaultdict(list)
    for i, lb in enumerate(labels):
        by_src[lb[0]].append(i)
    transported = {}

    def Fmorph(j, d):
        key = (j, d)
        if key not in transported:
            transported[key] = cat.F_morphism(morph[j], d) if d else morph[j]
        return transported[key]

    dset = set(degrees)
    table = {}
    for j, lf in enumerate(labels):  # f: a -> F^{df} b
        a, b, df, _ = lf
        for i in by_src[b]:  # g: b -> F^{dg} c
            _, c, dg, _ = labels[i]
            d = df + dg
            if d not in dset:
                continue
            prod = cat.compose(Fmorph(i, df), morph[j])
            out = {}
            for k, val in enumerate(prod.vec):
                if val:
                    out[index[(a, c, d, k)]] = val
            if out:
                table[(i, j)] = out
    alg = ConcreteAlgebra(verts, labels, table, idem, name or "End(T)")
    alg.complex = t
    return alg


# ----------------------------------------------------------------- extraction


class Extraction(NamedTuple):
    presentation: Presentation
    arrow_lift: dict  # arrow id -> vector in the algebra


def _arrow_reps(a: ConcreteAlgebra):
    """Representatives of rad/rad^2 per block and degree."""
    rad = a.radical()
    rad2 = el.row_space_basis([a.mul(x, y) for x in rad for y in rad])
    out = []
    keys = sorted({(lb.source, lb.target, lb.degree) for lb in a.labels},
                  key=lambda k: (a.vindex[k[0]], a.vindex[k[1]], k[2]))

    def part(vecs, key):
        idx = [k for k, lb in enumerate(a.labels) if (lb.source, lb.target, lb.degree) == key]
        res = []
        for v in vecs:
            w = [_ZERO] * a.dim
            for k in idx:
                w[k] = v[k]
            if any(w):
                res.append(w)
        return res

    for key in keys:
        rk = part(rad, key)
        if not rk:
            continue
        r2 = part(rad2, key)
        for v in el.quotient_representatives(rk, r2):
            out.append((key, v))
    return out


def extract_quiver(a: ConcreteAlgebra, name=None):
    """Gabriel quiver of a basic algebra with lifts of the arrows."""
    if not a.is_basic():
        raise NotBasic(f"{a.name} is not basic")
    arrows = []
    lift = {}
    counter = defaultdict(int)
    for (s, t, d), v in _arrow_reps(a):
        counter[(s, t)] += 1
        aid = f"x{s}_{t}" + (f"_{counter[(s, t)]}" if counter[(s, t)] > 1 else "")
        arrows.append((aid, s, t))
        lift[aid] = (v, d)
    q = Quiver(a.vertices, arrows, name or a.name)
    return q, {k: v for k, (v, _) in lift.items()}, {k: d for k, (_, d) in lift.items()}


def extract_presentation(a: ConcreteAlgebra, name=None) -> Extraction:
    """Quiver with relations presenting a basic algebra."""
    q, lift, _ = extract_quiver(a, name)
    L = a.loewy_length()
    bound = max(L + 1, 2)
    paths = [p for p in all_paths(q, L) if len(p) >= 2]
    paths.sort(key=lambda p: (q.vindex[p.source], q.vindex[p.target], path_sort_key(p)))
    values = {}

    def value(arrows):
        hit = values.get(arrows)
        if hit is None:
            if len(arrows) == 1:
                hit = lift[arrows[0]]
            else:
                hit = a.mul(value(arrows[:-1]), lift[arrows[-1]])
            values[arrows] = hit
        return hit

    by_pair = defaultdict(list)
    for p in sorted(paths, key=len):
        by_pair[(p.source, p.target)].append(p)
    rels = []
    for key in sorted(by_pair, key=lambda k: (q.vindex[k[0]], q.vindex[k[1]])):
        plist = sorted(by_pair[key], key=path_sort_key)
        mat = el.transpose([value(p.arrows) for p in plist], a.dim)
        for v in el.row_space_basis(el.kernel_basis(mat, len(plist))):
            rels.append(Relation([(c, p) for c, p in zip(v, plist) if c]))
    pres = Presentation(q, rels, bound, name or a.name)
    pres = Presentation(q, minimal_relations(pres, _prefer_simple(rels)), pres.truncation_bound, pres.name)
    if pres.dim() != a.dim:
        raise NotBasic(f"extracted presentation has dimension {pres.dim()}, algebra has {a.dim}")
    return Extraction(pres, lift)


def _prefer_simple(rels):
    return sorted(rels, key=lambda r: (len(r.terms), [path_sort_key(p) for _, p in r.terms]))


# ----------------------------------------------------------------- resolutions


class Resolution(NamedTuple):
    vertex: object
    terms: list  # list of dicts vertex -> multiplicity, P^0, P^1, ...
    complete: bool


def _left_action_on(a: ConcreteAlgebra, gens):
    """Linear map sending basis elements of (+)_g A e_{v_g} to sum b*g."""
    cols = []
    for g_vertex, g in gens:
        for b in a._by_source[g_vertex]:
            cols.append(a.mul(a.unit_vector(b), g))
    return cols


def minimal_resolution(a: ConcreteAlgebra, v, max_len=None) -> Resolution:
    """Minimal projective resolution of the simple at vertex v (multiplicities only)."""
    rad = a.radical()
    max_len = max_len if max_len is not None else 2 * a.dim + 2
    # a module is a subspace K of P = (+)_t A e_{w_t}, given by a spanning list of vectors
    # coordinates of P: concatenation over summands of the basis indices with source w_t
    terms = [{v: 1}]
    summands = [v]
    ker = [[x for x in r] for r in rad if any(r[k] for k in a._by_source[v])]
    ker = [[r[k] for k in a._by_source[v]] for r in ker]
    ker = el.row_space_basis(ker)
    for _ in range(max_len):
        if not ker:
            return Resolution(v, terms, True)
        offsets = []
        off = 0
        for w in summands:
            offsets.append(off)
            off += len(a._by_source[w])
        total = off

        def to_alg(vec):
            parts = []
            for w, o in zip(summands, offsets):
                u = [_ZERO] * a.dim
                for pos, k in enumerate(a._by_source[w]):
                    u[k] = vec[o + pos]
                parts.append(u)
            return parts

        def from_alg(parts):
            vec = [_ZERO] * total
            for w, o, u in zip(summands, offsets, parts):
                for pos, k in enumerate(a._by_source[w]):
                    vec[o + pos] = u[k]
            return vec

        def act(r, vec):
            return from_alg([a.mul(r, u) for u in to_alg(vec)])

        radk = el.row_space_basis([act(r, x) for r in rad for x in ker])
        gens = []
        for w in a.vertices:
            e = a.unit_vector(a.idempotents[w])
            ek = el.row_space_basis([act(e, x) for x in ker])
            if not ek:
                continue
            erk = el.row_space_basis([act(e, x) for x in radk])
            for g in el.quotient_representatives(ek, erk):
                gens.append((w, g))
        mult = defaultdict(int)
        for w, _ in gens:
            mult[w] += 1
        terms.append(dict(mult))
        # map (+)_g A e_w -> P, b |-> b*g
        cols = []
        for w, g in gens:
            parts = to_alg(g)
            for b in a._by_source[w]:
                ub = a.unit_vector(b)
                cols.append(from_alg([a.mul(ub, u) for u in parts]))
        mat = el.transpose(cols, total)
        ker = el.row_space_basis(el.kernel_basis(mat, len(cols)))
        summands = [w for w, _ in gens]
    return Resolution(v, terms, not ker)


def projective_dimension_of_simple(a, v, cap=None):
    r = minimal_resolution(a, v, cap)
    return len(r.terms) - 1 if r.complete else math.inf


def gldim(a: ConcreteAlgebra, cap=None):
    if not a.is_basic():
        raise NotBasic(f"{a.name} is not basic")
    return max(projective_dimension_of_simple(a, v, cap) for v in a.vertices)


def ext_dims(a: ConcreteAlgebra, degree=2, cap=None):
    """ext[i][j] = dim Ext^degree(S_i, S_j), read off minimal resolutions."""
    if not a.is_basic():
        raise NotBasic(f"{a.name} is not basic")
    n = len(a.vertices)
    out = [[0] * n for _ in range(n)]
    for i, v in enumerate(a.vertices):
        r = minimal_resolution(a, v, cap if cap is not None else degree + 1)
        if degree < len(r.terms):
            for w, m in r.terms[degree].items():
                out[i][a.vindex[w]] = m
    return out


# ----------------------------------------------------------------- bimodule, R(B), pi


class Bimodule(NamedTuple):
    algebra: ConcreteAlgebra  # B, degree 0
    basis: list  # labels of Hom(T, FT) inside the {0,1} truncation
    left: dict  # B basis index -> matrix acting on the bimodule coordinates
    right: dict
    block_dims: list  # block_dims[a][b] = dim Hom(T_a, F T_b)


def ext2_bimodule(t, cap=None) -> Bimodule:
    """Hom(T, FT) with left action F(g) o m and right action m o f."""
    r = end_algebra(t, (0, 1))
    b = end_algebra(t, (0,))
    if gldim(b, cap) > 2:
        raise GldimTooLarge("the endomorphism algebra has global dimension > 2")
    deg1 = [k for k, lb in enumerate(r.labels) if lb.degree == 1]
    deg0 = [k for k, lb in enumerate(r.labels) if lb.degree == 0]
    pos = {k: i for i, k in enumerate(deg1)}
    left, right = {}, {}
    for bi, k in enumerate(deg0):
        lm = [[_ZERO] * len(deg1) for _ in deg1]
        rm = [[_ZERO] * len(deg1) for _ in deg1]
        for m in deg1:
            for kk, c in r.mul_basis(k, m).items():
                lm[pos[kk]][pos[m]] += c
            for kk, c in r.mul_basis(m, k).items():
                rm[pos[kk]][pos[m]] += c
        left[bi] = lm
        right[bi] = rm
    n = len(r.vertices)
    dims = [[0] * n for _ in range(n)]
    for k in deg1:
        lb = r.labels[k]
        dims[r.vindex[lb.source]][r.vindex[lb.target]] += 1
    return Bimodule(b, [r.labels[k] for k in deg1], left, right, dims)


class RelationExtension(NamedTuple):
    algebra: ConcreteAlgebra
    presentation: Presentation
    new_arrows: list  # arrow ids of degree 1


def relation_extension(b_data, cap=None) -> RelationExtension:
    """B extended by Hom(T, FT) in degree 1 (squares to zero)."""
    t = b_data[1] if isinstance(b_data, tuple) else b_data
    b = end_algebra(t, (0,))
    if gldim(b, cap) > 2:
        raise GldimTooLarge("relation extension needs global dimension at most 2")
    r = end_algebra(t, (0, 1), name="R(B)")
    ext = extract_presentation(r, "R(B)")
    _, _, degs = extract_quiver(r)
    new = [aid for aid, d in degs.items() if d == 1]
    return RelationExtension(r, ext.presentation, new)


class PiReport(NamedTuple):
    multiplicative: bool
    kernel: list  # basis indices of C in the kernel
    kernel_in_rad2: bool
    kernel_is_eta_square: bool
    split: bool
    negative_degrees_vanish: bool
    kernel_dim: int

    def to_json(self):
        return {
            "multiplicative": self.multiplicative,
            "kernel_dim": self.kernel_dim,
            "kernel_in_rad2": self.kernel_in_rad2,
            "kernel_is_eta_square": self.kernel_is_eta_square,
            "split": self.split,
            "negative_degrees_vanish": self.negative_degrees_vanish,
        }


def cluster_algebra_of(t, window=(-3, 6)):
    """The orbit algebra (+)_d Hom(T, F^d T) over a checked window."""
    lo, hi = window
    return end_algebra(t, range(lo, hi + 1), check_boundary=True, name="C(B)")


def _label_map(c: ConcreteAlgebra, r: ConcreteAlgebra):
    rindex = {tuple(lb): k for k, lb in enumerate(r.labels)}
    m = {}
    for k, lb in enumerate(c.labels):
        if lb.degree in (0, 1):
            if tuple(lb) not in rindex:
                raise GradingMismatch(f"basis element {lb} of degree {lb.degree} missing from R")
            m[k] = rindex[tuple(lb)]
    for k, lb in enumerate(r.labels):
        if lb.degree not in (0, 1):
            raise GradingMismatch("R must be concentrated in degrees 0 and 1")
    if len(m) != r.dim:
        raise GradingMismatch("degree 0/1 parts of C and R differ")
    return m


def _span_products(a, xs, ys):
    return el.row_space_basis([a.mul(x, y) for x in xs for y in ys])


def _contained(sub, space):
    if not sub:
        return True
    return el.rank(space + sub) == el.rank(space) if space else False


def projection_pi(c: ConcreteAlgebra, r: ConcreteAlgebra) -> PiReport:
    """Projection C -> R killing every degree other than 0 and 1."""
    if not (c.check_grading() and r.check_grading()):
        raise GradingMismatch("structure constants do not respect the grading")
    lm = _label_map(c, r)

    def pi(vec):
        out = [_ZERO] * r.dim
        for k, val in enumerate(vec):
            if val and k in lm:
                out[lm[k]] += val
        return out

    mult = True
    for i in range(c.dim):
        for j in c._by_target[c.labels[i].source]:
            left = pi(c.mul(c.unit_vector(i), c.unit_vector(j)))
            right = r.mul(pi(c.unit_vector(i)), pi(c.unit_vector(j)))
            if left != right:
                mult = False
                break
        if not mult:
            break
    kernel = [k for k in range(c.dim) if k not in lm]
    kvecs = [c.unit_vector(k) for k in kernel]
    rad = c.radical()
    rad2 = _span_products(c, rad, rad)
    in_rad2 = _contained(kvecs, rad2)
    # eta: degree-1 arrows of C; <eta> the two-sided ideal they generate
    _, lift, degs = extract_quiver(c)
    etas = [lift[aid] for aid, d in degs.items() if d == 1]
    basis = [c.unit_vector(k) for k in range(c.dim)]
    ideal = el.row_space_basis([c.mul(c.mul(x, e), y) for e in etas for x in basis for y in basis])
    sq = _span_products(c, ideal, ideal)
    kspan = el.row_space_basis(kvecs)
    eta_sq = (len(sq) == len(kspan)) and _contained(sq, kspan)
    # split chain: B -> C -> R -> B is the identity, each map multiplicative
    split = True
    deg0c = [k for k in range(c.dim) if c.labels[k].degree == 0]
    for i in deg0c:
        for j in deg0c:
            prod_c = c.mul(c.unit_vector(i), c.unit_vector(j))
            if any(val and c.labels[k].degree != 0 for k, val in enumerate(prod_c)):
                split = False
            prod_r = r.mul(pi(c.unit_vector(i)), pi(c.unit_vector(j)))
            if pi(prod_c) != prod_r:
                split = False
    for k, rk in lm.items():
        if pi(c.unit_vector(k)) != r.unit_vector(rk):
            split = False
    neg = all(lb.degree >= 0 for lb in c.labels)
    return PiReport(mult, kernel, in_rad2, eta_sq, split, neg, len(kernel))


def quivers_match(a1: ConcreteAlgebra, a2: ConcreteAlgebra) -> bool:
    return quivers_isomorphic(extract_quiver(a1)[0], extract_quiver(a2)[0])


__all__ = [
    "Bimodule",
    "BasisLabel",
    "ConcreteAlgebra",
    "Extraction",
    "PiReport",
    "RelationExtension",
    "Resolution",
    "algebra_from_presentation",
    "cluster_algebra_of",
    "end_algebra",
    "ext2_bimodule",
    "ext_dims",
    "extract_presentation",
    "extract_quiver",
    "gldim",
    "minimal_resolution",
    "projection_pi",
    "quivers_match",
    "relation_extension",
]
