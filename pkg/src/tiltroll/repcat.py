"""Representations of Dynkin quivers: Hom, Ext^1, the AR translate, knitting.

A representation assigns a vector space k^{d_v} to each vertex and a matrix
(d_target x d_source) to each arrow.  The AR translate is computed from a
minimal projective presentation P1 -> P0 -> M -> 0 as the kernel of the
induced map between injectives nu(P1) -> nu(P0); its inverse uses the same
construction on the opposite quiver and duality.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import NamedTuple

from . import exactlin as el
from .errors import NotDynkin
from .quiver_core import Path, Quiver, paths_from

_ONE = Fraction(1)
_ZERO = Fraction(0)


# --------------------------------------------------------------- path tables


class PathTable:
    """All paths of an acyclic quiver, grouped by endpoints."""

    def __init__(self, q: Quiver):
        if not q.is_acyclic():
            raise ValueError("path table needs an acyclic quiver")
        self.quiver = q
        n = len(q.vertices)
        self.between = defaultdict(list)
        for v in q.vertices:
            for p in paths_from(q, v, n):
                self.between[(p.source, p.target)].append(p)
        self.pos = {}
        for key, plist in self.between.items():
            for i, p in enumerate(plist):
                self.pos[p] = i

    def paths(self, x, y):
        return self.between.get((x, y), [])

    def extend(self, p: Path, arrow_id):
        a = self.quiver.arrow[arrow_id]
        return Path(p.source, a.target, (arrow_id,) + p.arrows)


_TABLES = {}


def path_table(q: Quiver) -> PathTable:
    key = id(q)
    hit = _TABLES.get(key)
    if hit is None or hit[0] is not q:
        hit = (q, PathTable(q))
        _TABLES[key] = hit
    return hit[1]


# ------------------------------------------------------------ representations


class Representation:
    def __init__(self, quiver: Quiver, dims, maps, label=None):
        self.quiver = quiver
        self.dims = {v: int(dims[v]) for v in quiver.vertices}
        self.maps = {}
        for a in quiver.arrows:
            m = maps.get(a.id)
            if m is None:
                m = el.zeros(self.dims[a.target], self.dims[a.source])
            m = [[Fraction(x) for x in row] for row in m]
            if len(m) != self.dims[a.target] or any(len(r) != self.dims[a.source] for r in m):
                if not (self.dims[a.target] == 0 or self.dims[a.source] == 0):
                    raise ValueError(f"map for {a.id} has wrong shape")
                m = el.zeros(self.dims[a.target], self.dims[a.source])
            self.maps[a.id] = m
        self.label = label
        self._pres = None

    @property
    def dimvec(self):
        return tuple(self.dims[v] for v in self.quiver.vertices)

    def total_dim(self):
        return sum(self.dims.values())

    def is_zero(self):
        return self.total_dim() == 0

    def path_map(self, p: Path):
        d = self.dims[p.source]
        m = el.identity(d)
        for a in reversed(p.arrows):
            m = el.matmul(self.maps[a], m, d)
        return m

    def dual(self):
        """D M as a representation of the opposite quiver."""
        qop = opposite_quiver(self.quiver)
        maps = {a: el.transpose(m, self.dims[self.quiver.arrow[a].source]) for a, m in self.maps.items()}
        return Representation(qop, self.dims, maps)

    def __repr__(self):
        return f"Representation(dimvec={self.dimvec})"


_OPP = {}


def opposite_quiver(q: Quiver) -> Quiver:
    hit = _OPP.get(id(q))
    if hit is None or hit[0] is not q:
        qop = q.opposite()
        hit = (q, qop)
        _OPP[id(q)] = hit
        _OPP[id(qop)] = (qop, q)
    return hit[1]


class ModuleMorphism:
    def __init__(self, source: Representation, target: Representation, comps):
        self.source = source
        self.target = target
        self.comps = {v: comps[v] for v in source.quiver.vertices}

    def check(self):
        q = self.source.quiver
        for a in q.arrows:
            ds = self.source.dims[a.source]
            left = el.matmul(self.comps[a.target], self.source.maps[a.id], ds)
            right = el.matmul(self.target.maps[a.id], self.comps[a.source], ds)
            if left != right:
                return False
        return True

    def compose(self, first: "ModuleMorphism"):
        """self after first."""
        comps = {v: el.matmul(self.comps[v], first.comps[v], first.source.dims[v]) for v in self.source.quiver.vertices}
        return ModuleMorphism(first.source, self.target, comps)

    def flat(self):
        out = []
        for v in self.source.quiver.vertices:
            for row in self.comps[v]:
                out.extend(row)
        return out

    def is_zero(self):
        return all(x == 0 for x in self.flat())


def identity_morphism(m: Representation):
    return ModuleMorphism(m, m, {v: el.identity(m.dims[v]) for v in m.quiver.vertices})


def projective(q: Quiver, i) -> Representation:
    pt = path_table(q)
    dims = {x: len(pt.paths(i, x)) for x in q.vertices}
    maps = {}
    for a in q.arrows:
        src = pt.paths(i, a.source)
        tgt = pt.paths(i, a.target)
        m = el.zeros(len(tgt), len(src))
        for c, p in enumerate(src):
            m[pt.pos[pt.extend(p, a.id)]][c] = _ONE
        maps[a.id] = m
    return Representation(q, dims, maps, label=f"P{i}")


def injective(q: Quiver, i) -> Representation:
    pt = path_table(q)
    dims = {x: len(pt.paths(x, i)) for x in q.vertices}
    maps = {}
    for a in q.arrows:
        src = pt.paths(a.source, i)  # basis of (I_i)_{s(a)} dual to these
        tgt = pt.paths(a.target, i)
        m = el.zeros(len(tgt), len(src))
        for r, p2 in enumerate(tgt):
            full = Path(a.source, i, p2.arrows + (a.id,))
            m[r][pt.pos[full]] = _ONE
        maps[a.id] = m
    return Representation(q, dims, maps, label=f"I{i}")


def simple(q: Quiver, i) -> Representation:
    return Representation(q, {x: (1 if x == i else 0) for x in q.vertices}, {}, label=f"S{i}")


def direct_sum(ms):
    q = ms[0].quiver
    dims = {v: sum(m.dims[v] for m in ms) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        big = el.zeros(dims[a.target], dims[a.source])
        r0 = c0 = 0
        for m in ms:
            blk = m.maps[a.id]
            for i in range(m.dims[a.target]):
                for j in range(m.dims[a.source]):
                    big[r0 + i][c0 + j] = blk[i][j]
            r0 += m.dims[a.target]
            c0 += m.dims[a.source]
        maps[a.id] = big
    return Representation(q, dims, maps)


# ------------------------------------------------------------------ Hom, Ext


def _hom_system(m: Representation, n: Representation):
    q = m.quiver
    offs = {}
    k = 0
    for v in q.vertices:
        offs[v] = k
        k += n.dims[v] * m.dims[v]
    rows = []
    for a in q.arrows:
        s, t = a.source, a.target
        ds, dt = m.dims[s], m.dims[t]
        es, et = n.dims[s], n.dims[t]
        if ds == 0 or et == 0:
            continue
        Ma, Na = m.maps[a.id], n.maps[a.id]
        # (f_t Ma - Na f_s)[r][c] = 0 for r < et, c < ds
        for r in range(et):
            for c in range(ds):
                row = [_ZERO] * k
                for j in range(dt):
                    x = Ma[j][c]
                    if x:
                        row[offs[t] + r * dt + j] += x
                for j in range(es):
                    x = Na[r][j]
                    if x:
                        row[offs[s] + j * ds + c] -= x
                rows.append(row)
    return rows, offs, k


def hom_basis(m: Representation, n: Representation):
    """Basis of Hom(M, N) as ModuleMorphisms."""
    rows, offs, k = _hom_system(m, n)
    if k == 0:
        return []
    ker = el.kernel_basis(rows, k) if rows else el.kernel_basis([], k)
    out = []
    q = m.quiver
    for vec in ker:
        comps = {}
        for v in q.vertices:
            dv, ev = m.dims[v], n.dims[v]
            comps[v] = [[vec[offs[v] + r * dv + c] for c in range(dv)] for r in range(ev)]
        out.append(ModuleMorphism(m, n, comps))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    rows, offs, k = _hom_system(m, n)
    if k == 0:
        return 0
    return k - (el.rank(rows) if rows else 0)


class ProjPresentation:
    """Minimal projective presentation P1 -> P0 -> M -> 0.

    ``gens0`` lists (vertex, vector in M_vertex) generating M; ``gens1`` lists
    (vertex y, element of (P0)_y) generating the kernel, where (P0)_y has basis
    ``p0_basis(y)`` = [(k, path from gens0[k] vertex to y)].
    """

    def __init__(self, module: Representation, gens0, gens1):
        self.module = module
        self.gens0 = gens0
        self.gens1 = gens1
        self._b0 = {}

    def p0_basis(self, y):
        hit = self._b0.get(y)
        if hit is None:
            pt = path_table(self.module.quiver)
            hit = [(k, p) for k, (x, _) in enumerate(self.gens0) for p in pt.paths(x, y)]
            self._b0[y] = hit
        return hit

    def p1_basis(self, y):
        pt = path_table(self.module.quiver)
        return [(l, p) for l, (x, _) in enumerate(self.gens1) for p in pt.paths(x, y)]

    @property
    def p0_vertices(self):
        return [x for x, _ in self.gens0]

    @property
    def p1_vertices(self):
        return [x for x, _ in self.gens1]


def _cover_matrix(m: Representation, gens, y):
    pt = path_table(m.quiver)
    cols = []
    for k, (x, vec) in enumerate(gens):
        for p in pt.paths(x, y):
            cols.append(el.matvec(m.path_map(p), vec) if m.dims[y] else [])
    if m.dims[y] == 0:
        return []
    return el.transpose(cols, m.dims[y]) if cols else el.zeros(m.dims[y], 0)


def _top_generators(m: Representation):
    q = m.quiver
    gens = []
    for v in q.vertices:
        d = m.dims[v]
        if d == 0:
            continue
        rad = []
        for a in q.in_arrows(v):
            if m.dims[a.source]:
                rad.extend(el.image_basis(m.maps[a.id]))
        for idx in el.complement_indices(rad, d):
            vec = [_ZERO] * d
            vec[idx] = _ONE
            gens.append((v, vec))
    return gens


def _p0_action(pres: ProjPresentation, vec, y, arrow_id):
    """Apply an arrow y -> z to an element of (P0)_y, giving an element of (P0)_z."""
    pt = path_table(pres.module.quiver)
    a = pres.module.quiver.arrow[arrow_id]
    src = pres.p0_basis(y)
    tgt = pres.p0_basis(a.target)
    index = {kp: i for i, kp in enumerate(tgt)}
    out = [_ZERO] * len(tgt)
    for c, (k, p) in zip(vec, src):
        if c:
            out[index[(k, pt.extend(p, arrow_id))]] += c
    return out


def projective_presentation(m: Representation) -> ProjPresentation:
    if m._pres is not None:
        return m._pres
    q = m.quiver
    gens0 = _top_generators(m)
    pres = ProjPresentation(m, gens0, [])
    omega = {}
    for y in q.vertices:
        nb = len(pres.p0_basis(y))
        if nb == 0:
            omega[y] = []
            continue
        if m.dims[y] == 0:
            omega[y] = el.identity(nb)
        else:
            omega[y] = el.kernel_basis(_cover_matrix(m, gens0, y), nb)
    gens1 = []
    for y in q.vertices:
        if not omega[y]:
            continue
        rad = []
        for a in q.in_arrows(y):
            for vec in omega[a.source]:
                rad.append(_p0_action(pres, vec, a.source, a.id))
        for rep in el.quotient_representatives(omega[y], rad):
            gens1.append((y, rep))
    pres.gens1 = gens1
    m._pres = pres
    return pres


def _p1_image_matrix(pres: ProjPresentation, y):
    """Matrix of (P1)_y -> (P0)_y in the path bases."""
    pt = path_table(pres.module.quiver)
    b0 = pres.p0_basis(y)
    index = {kp: i for i, kp in enumerate(b0)}
    cols = []
    for l, (x, g) in enumerate(pres.gens1):
        src = pres.p0_basis(x)
        for r in pt.paths(x, y):
            col = [_ZERO] * len(b0)
            for c, (k, p) in zip(g, src):
                if c:
                    full = Path(p.source, y, r.arrows + p.arrows)
                    col[index[(k, full)]] += c
            cols.append(col)
    return cols


class Ext1Space(NamedTuple):
    dim: int
    representatives: list  # vectors in Hom(P1, N) = sum of N_{y_l}
    presentation: ProjPresentation


def _hom_p_to_n_map(pres: ProjPresentation, n: Representation):
    """Matrix of Hom(P0, N) -> Hom(P1, N), (n_k) |-> (sum_k g_lk . n_k)_l."""
    col_off = []
    k = 0
    for x, _ in pres.gens0:
        col_off.append(k)
        k += n.dims[x]
    row_off = []
    r = 0
    for y, _ in pres.gens1:
        row_off.append(r)
        r += n.dims[y]
    mat = el.zeros(r, k)
    for l, (y, g) in enumerate(pres.gens1):
        for c, (kk, p) in zip(g, pres.p0_basis(y)):
            if not c:
                continue
            x = pres.gens0[kk][0]
            pm = n.path_map(p)
            for i in range(n.dims[y]):
                for j in range(n.dims[x]):
                    if pm[i][j]:
                        mat[row_off[l] + i][col_off[kk] + j] += c * pm[i][j]
    return mat, r, k


def ext1_basis(m: Representation, n: Representation) -> Ext1Space:
    """Ext^1(M, N) as the cokernel of Hom(P0, N) -> Hom(P1, N)."""
    pres = projective_presentation(m)
    mat, r, k = _hom_p_to_n_map(pres, n)
    if r == 0:
        return Ext1Space(0, [], pres)
    image = el.image_basis(mat) if k else []
    full = el.identity(r)
    reps = el.quotient_representatives(full, image)
    return Ext1Space(len(reps), reps, pres)


def ext1_dim(m: Representation, n: Representation) -> int:
    pres = projective_presentation(m)
    mat, r, k = _hom_p_to_n_map(pres, n)
    if r == 0:
        return 0
    return r - (el.rank(mat) if k else 0)


# ------------------------------------------------------------ AR translation


def _nu_matrix(pres: ProjPresentation, z):
    """(nu P1)_z -> (nu P0)_z for the presentation map P1 -> P0."""
    q = pres.module.quiver
    pt = path_table(q)
    rows_idx = [(k, r) for k, (x, _) in enumerate(pres.gens0) for r in pt.paths(z, x)]
    cols_idx = [(l, s) for l, (y, _) in enumerate(pres.gens1) for s in pt.paths(z, y)]
    col_index = {ls: i for i, ls in enumerate(cols_idx)}
    mat = el.zeros(len(rows_idx), len(cols_idx))
    # component (l, k): q_kl = sum c_p p with p: x_k -> y_l; r: z -> x_k maps to q r
    for i, (k, r) in enumerate(rows_idx):
        for l, (y, g) in enumerate(pres.gens1):
            for c, (kk, p) in zip(g, pres.p0_basis(y)):
                if c and kk == k:
                    s = Path(z, y, p.arrows + r.arrows)
                    mat[i][col_index[(l, s)]] += c
    return mat, rows_idx, cols_idx


def _injective_sum(q: Quiver, verts):
    return direct_sum([injective(q, v) for v in verts]) if verts else Representation(q, {v: 0 for v in q.vertices}, {})


def _kernel_subrep(big: Representation, kernels):
    q = big.quiver
    dims = {v: len(kernels[v]) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        ks, kt = kernels[a.source], kernels[a.target]
        if not ks or not kt:
            maps[a.id] = el.zeros(len(kt), len(ks))
            continue
        imgs = [el.matvec(big.maps[a.id], v) for v in ks]
        coords = el.solve_many(el.transpose(kt), imgs)
        maps[a.id] = el.transpose(coords)
    return Representation(q, dims, maps)


def ar_translate(m: Representation):
    """tau M, or None when M is projective (tau M = 0)."""
    pres = projective_presentation(m)
    q = m.quiver
    if not pres.gens1:
        return None
    big = _injective_sum(q, pres.p1_vertices)
    kernels = {}
    for z in q.vertices:
        mat, rows_idx, cols_idx = _nu_matrix(pres, z)
        if not cols_idx:
            kernels[z] = []
        elif not rows_idx:
            kernels[z] = el.identity(len(cols_idx))
        else:
            kernels[z] = el.kernel_basis(mat, len(cols_idx))
    out = _kernel_subrep(big, kernels)
    out._kernels = kernels
    out._source_pres = pres
    if out.is_zero():
        return None
    return out


def ar_translate_inv(m: Representation):
    """tau^{-1} M, or None when M is injective."""
    t = ar_translate(m.dual())
    if t is None:
        return None
    return t.dual()


def _lift_p0(f: ModuleMorphism, pm: ProjPresentation, pn: ProjPresentation):
    """Components of f0: P0(M) -> P0(N); for each generator k of M an element of (P0(N))_{x_k}."""
    out = []
    n = f.target
    for k, (x, vec) in enumerate(pm.gens0):
        img = el.matvec(f.comps[x], vec) if n.dims[x] else []
        nb = len(pn.p0_basis(x))
        if not img or not any(img):
            out.append([_ZERO] * nb)
            continue
        cover = _cover_matrix(n, pn.gens0, x)
        out.append(el.solve(cover, img))
    return out


def _apply_p0_map(f0, pm: ProjPresentation, pn: ProjPresentation, vec, y):
    """Apply f0 to an element of (P0(M))_y."""
    tgt = pn.p0_basis(y)
    index = {kp: i for i, kp in enumerate(tgt)}
    out = [_ZERO] * len(tgt)
    for c, (k, p) in zip(vec, pm.p0_basis(y)):
        if not c:
            continue
        x = pm.gens0[k][0]
        for d, (kk, r) in zip(f0[k], pn.p0_basis(x)):
            if d:
                out[index[(kk, Path(r.source, y, p.arrows + r.arrows))]] += c * d
    return out


def _lift_p1(f0, pm, pn):
    out = []
    for l, (y, g) in enumerate(pm.gens1):
        img = _apply_p0_map(f0, pm, pn, g, y)
        cols = _p1_image_matrix(pn, y)
        nb = len(pn.p1_basis(y))
        if not any(img):
            out.append([_ZERO] * nb)
            continue
        out.append(el.solve(el.transpose(cols), img))
    return out


def ar_translate_morphism(f: ModuleMorphism, tm=None, tn=None):
    """tau(f): tau M -> tau N, computed by lifting f to presentations."""
    m, n = f.source, f.target
    tm = tm if tm is not None else ar_translate(m)
    tn = tn if tn is not None else ar_translate(n)
    q = m.quiver
    if tm is None or tn is None:
        return None
    pm, pn = tm._source_pres, tn._source_pres
    f0 = _lift_p0(f, pm, pn)
    f1 = _lift_p1(f0, pm, pn)
    pt = path_table(q)
    comps = {}
    for z in q.vertices:
        # nu(f1)_z : D paths(z -> y_l) -> D paths(z -> y'_l')
        src_idx = [(l, s) for l, (y, _) in enumerate(pm.gens1) for s in pt.paths(z, y)]
        tgt_idx = [(l, s) for l, (y, _) in enumerate(pn.gens1) for s in pt.paths(z, y)]
        tindex = {ls: i for i, ls in enumerate(tgt_idx)}
        mat = el.zeros(len(src_idx), len(tgt_idx))
        # component l -> l' given by f1[l] = sum c (l', r) with r: y'_l' -> y_l; nu dualizes r' |-> ... transposed
        for l, (y, _) in enumerate(pm.gens1):
            for c, (lp, r) in zip(f1[l], pn.p1_basis(y)):
                if not c:
                    continue
                yp = pn.gens1[lp][0]
                for s in pt.paths(z, yp):
                    full = Path(z, y, r.arrows + s.arrows)
                    mat[src_idx.index((l, full))][tindex[(lp, s)]] += c
        # mat is (paths to source) x (paths to target) pairing; as a map on duals it is mat^T
        ks, kt = tm._kernels[z], tn._kernels[z]
        if not ks or not kt:
            comps[z] = el.zeros(len(kt), len(ks))
            continue
        imgs = [el.matvec(el.transpose(mat, len(tgt_idx)), v) for v in ks]
        coords = el.solve_many(el.transpose(kt), imgs)
        comps[z] = el.transpose(coords)
    return ModuleMorphism(tm, tn, comps)


def dual_morphism(f: ModuleMorphism, ds=None, dt=None):
    """D f : D N -> D M over the opposite quiver."""
    ds = ds if ds is not None else f.target.dual()
    dt = dt if dt is not None else f.source.dual()
    comps = {v: el.transpose(f.comps[v], f.target.dims[v]) for v in f.source.quiver.vertices}
    return ModuleMorphism(ds, dt, comps)


def ar_translate_inv_morphism(f: ModuleMorphism):
    """tau^{-1}(f) via duality with the opposite quiver."""
    df = dual_morphism(f)
    tdf = ar_translate_morphism(df)
    if tdf is None:
        return None
    return dual_morphism(tdf)


# ------------------------------------------------------------ isomorphism tests


def endomorphism_radical_dim(m: Representation):
    basis = hom_basis(m, m)
    mats = [_block_matrix(f) for f in basis]
    # rad End = {x : tr(x y) = 0 for all y}
    gram = [[_trace_prod(a, b) for b in mats] for a in mats]
    return len(basis), len(el.kernel_basis(gram, len(basis))) if basis else 0


def _block_matrix(f: ModuleMorphism):
    q = f.source.quiver
    n = sum(f.source.dims.values())
    big = el.zeros(n, n)
    off = 0
    for v in q.vertices:
        d = f.source.dims[v]
        for i in range(d):
            for j in range(d):
                big[off + i][off + j] = f.comps[v][i][j]
        off += d
    return big


def _trace_prod(a, b):
    n = len(a)
    return sum((a[i][j] * b[j][i] for i in range(n) for j in range(n) if a[i][j] and b[j][i]), _ZERO)


def is_indecomposable(m: Representation) -> bool:
    if m.is_zero():
        return False
    d, r = endomorphism_radical_dim(m)
    return d - r == 1


def is_isomorphic(m: Representation, n: Representation) -> bool:
    """Exact isomorphism test: some morphism M -> N is invertible."""
    if m.dimvec != n.dimvec:
        return False
    basis = hom_basis(m, n)
    if not basis:
        return m.is_zero()
    # a generic combination with distinct integer weights is tried first
    for weights in [list(range(1, len(basis) + 1))] + [[1 if i == j else 0 for i in range(len(basis))] for j in range(len(basis))]:
        ok = True
        for v in m.quiver.vertices:
            d = m.dims[v]
            if d == 0:
                continue
            mat = el.zeros(d, d)
            for w, f in zip(weights, basis):
                for i in range(d):
                    for j in range(d):
                        mat[i][j] += w * f.comps[v][i][j]
            if el.rank(mat) < d:
                ok = False
                break
        if ok:
            return True
    return False


# ------------------------------------------------------------ Dynkin data


def underlying_graph(q: Quiver):
    adj = defaultdict(set)
    for a in q.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    return adj


def dynkin_type(q: Quiver):
    """('A'|'D'|'E', n) for a quiver whose underlying graph is simply laced Dynkin."""
    n = len(q.vertices)
    adj = underlying_graph(q)
    pairs = set()
    for a in q.arrows:
        key = frozenset((a.source, a.target))
        if key in pairs:
            raise NotDynkin("multiple edges")
        pairs.add(key)
    if len(pairs) != n - 1 or not q.is_connected():
        raise NotDynkin("underlying graph is not a tree")
    degs = {v: len(adj[v]) for v in q.vertices}
    branch = [v for v in q.vertices if degs[v] >= 3]
    if not branch:
        return ("A", n)
    if len(branch) > 1 or degs[branch[0]] > 3:
        raise NotDynkin("not of type A, D or E")
    c = branch[0]
    arms = []
    for start in adj[c]:
        length = 1
        prev, cur = c, start
        while degs[cur] == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return ("E", n)
    raise NotDynkin(f"arm lengths {arms}")


def positive_roots(q: Quiver):
    """Positive roots of the underlying graph by closure under simple reflections."""
    verts = q.vertices
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    adj = underlying_graph(q)

    def reflect(x, i):
        s = 2 * x[i] - sum(x[idx[w]] for w in adj[verts[i]])
        y = list(x)
        y[i] -= s
        return tuple(y)

    roots = set()
    frontier = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots.update(frontier)
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(n):
                y = reflect(x, i)
                if all(c >= 0 for c in y) and any(y) and y not in roots:
                    if max(y) > 6 * n:
                        raise NotDynkin("root system is infinite")
                    roots.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(roots)


def quiver_A(n, orientation=None, name=None):
    """Type A_n; orientation is a string of '>' / '<' for edges i--i+1."""
    orientation = orientation or ">" * (n - 1)
    arrows = []
    for i in range(1, n):
        if orientation[i - 1] == ">":
            arrows.append((f"a{i}", str(i), str(i + 1)))
        else:
            arrows.append((f"a{i}", str(i + 1), str(i)))
    return Quiver([str(i) for i in range(1, n + 1)], arrows, name or f"A{n}")


def quiver_D(n, name=None):
    """Type D_n: chain 1-2-...-(n-2), with n-1 and n attached to n-2."""
    arrows = [(f"a{i}", str(i), str(i + 1)) for i in range(1, n - 2)]
    arrows.append((f"a{n - 2}", str(n - 2), str(n - 1)))
    arrows.append((f"a{n - 1}", str(n - 2), str(n)))
    return Quiver([str(i) for i in range(1, n + 1)], arrows, name or f"D{n}")


def quiver_E(n, name=None):
    """Type E_n: chain 1-...-(n-1) with n attached to vertex 3."""
    arrows = [(f"a{i}", str(i), str(i + 1)) for i in range(1, n - 1)]
    arrows.append((f"a{n - 1}", str(3), str(n)))
    return Quiver([str(i) for i in range(1, n + 1)], arrows, name or f"E{n}")


# ------------------------------------------------------------------ knitting


class IndecEntry(NamedTuple):
    rep: Representation
    dimvec: tuple
    orbit: str
    tau_power: int  # M = tau^{-tau_power} P_orbit
    is_projective: bool
    is_injective: bool


class IndecTable:
    def __init__(self, quiver: Quiver, entries, nu_bar):
        self.quiver = quiver
        self.entries = entries
        self.nu_bar = nu_bar  # orbit i -> (sigma(i), t_i) with I_i = tau^{-t_i} P_sigma(i)
        self.by_coord = {(e.orbit, e.tau_power): k for k, e in enumerate(entries)}
        self.by_dimvec = {e.dimvec: k for k, e in enumerate(entries)}
        self.orbit_length = defaultdict(int)
        for e in entries:
            self.orbit_length[e.orbit] = max(self.orbit_length[e.orbit], e.tau_power + 1)
        self._hom = {}
        self._ext = {}

    def __len__(self):
        return len(self.entries)

    def hom_dim(self, i, j):
        key = (i, j)
        if key not in self._hom:
            self._hom[key] = hom_dim(self.entries[i].rep, self.entries[j].rep)
        return self._hom[key]

    def ext1_dim(self, i, j):
        key = (i, j)
        if key not in self._ext:
            self._ext[key] = ext1_dim(self.entries[i].rep, self.entries[j].rep)
        return self._ext[key]

    def projective_index(self, v):
        return self.by_coord[(v, 0)]

    def injective_index(self, v):
        s, t = self.nu_bar[v]
        return self.by_coord[(s, t)]

    def tau_index(self, k):
        e = self.entries[k]
        return self.by_coord.get((e.orbit, e.tau_power - 1))

    def tau_inv_index(self, k):
        e = self.entries[k]
        return self.by_coord.get((e.orbit, e.tau_power + 1))


_KNIT = {}


def knit_indecomposables(q: Quiver) -> IndecTable:
    """All indecomposables as tau^{-t} P_i, by iterating tau^{-1} until zero."""
    hit = _KNIT.get(id(q))
    if hit is not None and hit[0] is q:
        return hit[1]
    dynkin_type(q)
    entries = []
    limit = 6 * len(q.vertices) + 6
    for v in q.vertices:
        m = projective(q, v)
        t = 0
        while True:
            nxt = ar_translate_inv(m)
            entries.append(IndecEntry(m, m.dimvec, v, t, t == 0, nxt is None))
            if nxt is None:
                break
            m = nxt
            t += 1
            if t > limit:
                raise NotDynkin("tau-orbit does not terminate")
    table_dims = {e.dimvec: (e.orbit, e.tau_power) for e in entries}
    nu_bar = {}
    for v in q.vertices:
        dv = injective(q, v).dimvec
        if dv not in table_dims:
            raise NotDynkin("injective not reached by knitting")
        nu_bar[v] = table_dims[dv]
    table = IndecTable(q, entries, nu_bar)
    _KNIT[id(q)] = (q, table)
    return table


def enumerate_tilting_modules(q: Quiver):
    """All n-element sets of indecomposables with vanishing Ext^1 in both directions."""
    table = knit_indecomposables(q)
    n = len(q.vertices)
    m = len(table)
    ok = [[table.ext1_dim(i, j) == 0 and table.ext1_dim(j, i) == 0 for j in range(m)] for i in range(m)]
    out = []

    def rec(start, chosen):
        if len(chosen) == n:
            out.append(tuple(chosen))
            return
        for k in range(start, m):
            if all(ok[k][c] for c in chosen) and ok[k][k]:
                rec(k + 1, chosen + [k])

    rec(0, [])
    return out
