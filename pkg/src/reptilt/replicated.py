"""The m-replicated algebra of a hereditary path algebra and its modules.

A module is stored as a tuple of base-quiver representations M_0..M_m (one
per level) together with connector maps phi_i from DA (x) M_i down to
M_{i-1}.  Level 0 is the copy whose projectives stay projective over the
replicated algebra; connectors point downward, so a projective-injective
P(v,i) has its top at level i and its socle at level i-1.
"""

from __future__ import annotations

import json

from .field import QQ
from .hereditary import (AMap, Rep, dual_tensor, dual_tensor_data,
                         dual_tensor_map, hom_basis as base_hom_basis,
                         injective_rep, projective_connector, projective_rep,
                         simple_rep, zero_amap, zero_rep)
from .linalg import (Mat, Subspace, column_space, kernel_basis, quotient_basis,
                     rank, solve_matrix)


class ReplicatedAlgebra:
    """The m-replicated algebra of the path algebra of an acyclic quiver."""

    def __init__(self, quiver, m, field=QQ):
        if m < 1:
            raise ValueError("replication degree must be >= 1")
        self.quiver = quiver
        self.m = m
        self.field = field
        self.n = len(quiver.vertices)
        self.delta = (m + 1) * self.n
        dim_a = len(quiver.paths)
        self.dim = (m + 1) * dim_a + m * dim_a
        self._base_proj = {}
        self._base_inj = {}
        self._proj_conn = {}
        self._opposite = None
        self.cache = {}

    def vertex_pairs(self):
        return [(v, i) for i in range(self.m + 1) for v in self.quiver.vertices]

    def base_projective(self, v):
        if v not in self._base_proj:
            self._base_proj[v] = projective_rep(v, self.quiver, self.field)
        return self._base_proj[v]

    def base_injective(self, v):
        if v not in self._base_inj:
            self._base_inj[v] = injective_rep(v, self.quiver, self.field)
        return self._base_inj[v]

    def projective_conn(self, v):
        """Canonical iso DA (x) (A e_v) -> D(e_v A), with the cached
        projective and injective as source/target data."""
        if v not in self._proj_conn:
            conn = projective_connector(v, self.quiver, self.field)
            # rebuild against the cached base reps so object identity works
            P, I = self.base_projective(v), self.base_injective(v)
            dt = dual_tensor_data(P)
            self._proj_conn[v] = AMap(dt.rep, I, conn.components, check=False)
        return self._proj_conn[v]

    def opposite(self):
        """The replicated algebra of the opposite quiver (used for duality)."""
        if self._opposite is None:
            self._opposite = ReplicatedAlgebra(self.quiver.opposite(), self.m,
                                               self.field)
            self._opposite._opposite = self
        return self._opposite

    def __repr__(self):
        return "ReplicatedAlgebra(%r, m=%d)" % (self.quiver.vertices, self.m)


class RModule:
    """A module over a replicated algebra: level representations plus
    downward connector maps."""

    def __init__(self, algebra, levels, connectors, check=True):
        self.algebra = algebra
        self.levels = list(levels)
        self.connectors = list(connectors)  # connectors[j]: T(levels[j+1]) -> levels[j]
        if len(self.levels) != algebra.m + 1:
            raise ValueError("expected %d levels" % (algebra.m + 1))
        if len(self.connectors) != algebra.m:
            raise ValueError("expected %d connectors" % algebra.m)
        self.cache = {}
        if check:
            self.validate()

    def validate(self):
        for j, conn in enumerate(self.connectors):
            dt = dual_tensor_data(self.levels[j + 1])
            if conn.source is not dt.rep and conn.source.dims != dt.rep.dims:
                raise ValueError("connector %d source mismatch" % j)
            if conn.target is not self.levels[j] and \
                    conn.target.dims != self.levels[j].dims:
                raise ValueError("connector %d target mismatch" % j)
            conn.validate()
        # composite vanishing: phi_j o T(phi_{j+1}) = 0  (DA.DA = 0)
        for j in range(1, self.algebra.m):
            comp = self.connectors[j - 1].compose(
                dual_tensor_map(self.connectors[j]))
            if not comp.is_zero():
                raise ValueError("connector composite does not vanish at %d" % j)

    @property
    def total_dim(self):
        return sum(l.total_dim for l in self.levels)

    def is_zero(self):
        return self.total_dim == 0

    def dims(self, i, v):
        return self.levels[i].dims[v]

    def dim_grid(self):
        return DimGrid({(i, v): self.levels[i].dims[v]
                        for i in range(self.algebra.m + 1)
                        for v in self.algebra.quiver.vertices
                        if self.levels[i].dims[v]})

    def __repr__(self):
        return "RModule(%s)" % self.dim_grid()


class DimGrid:
    """Canonical printable signature of a module: (level, vertex) -> dim."""

    def __init__(self, entries):
        self.entries = {k: int(d) for k, d in entries.items() if d}

    def key(self):
        return tuple(sorted((i, str(v), d)
                            for (i, v), d in self.entries.items()))

    def total(self):
        return sum(self.entries.values())

    def __eq__(self, other):
        return isinstance(other, DimGrid) and self.entries == other.entries

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        if not self.entries:
            return "0"
        levels = sorted({i for i, _ in self.entries})
        parts = []
        for i in levels:
            at = {v: d for (j, v), d in self.entries.items() if j == i}
            inner = ",".join("%s:%d" % (v, at[v])
                             for v in sorted(at, key=str))
            parts.append("L%d{%s}" % (i, inner))
        return "|".join(parts)

    def __repr__(self):
        return "DimGrid(%s)" % self

    def to_json(self):
        return [[i, v, d] for (i, v), d in sorted(self.entries.items(),
                                                  key=lambda kv: (kv[0][0], str(kv[0][1])))]


class RMap:
    """A morphism of replicated-algebra modules (one AMap per level)."""

    def __init__(self, source, target, level_maps, check=True):
        self.source = source
        self.target = target
        self.level_maps = list(level_maps)
        if check:
            self.validate()

    def validate(self):
        alg = self.source.algebra
        for i, f in enumerate(self.level_maps):
            for v in alg.quiver.vertices:
                c = f.components[v]
                want = (self.target.levels[i].dims[v], self.source.levels[i].dims[v])
                if (c.rows, c.cols) != want:
                    raise ValueError("level %d component shape mismatch" % i)
            f.validate()
        for j in range(alg.m):
            lhs = self.level_maps[j].compose(self.source.connectors[j])
            rhs = self.target.connectors[j].compose(
                dual_tensor_map(self.level_maps[j + 1]))
            for v in alg.quiver.vertices:
                if lhs.components[v] != rhs.components[v]:
                    raise ValueError("map does not commute with connector %d" % j)

    def component(self, i, v):
        return self.level_maps[i].components[v]

    def compose(self, other):
        return RMap(other.source, self.target,
                    [f.compose(g) for f, g in zip(self.level_maps,
                                                  other.level_maps)],
                    check=False)

    def __add__(self, other):
        return RMap(self.source, self.target,
                    [f + g for f, g in zip(self.level_maps, other.level_maps)],
                    check=False)

    def __sub__(self, other):
        return RMap(self.source, self.target,
                    [f - g for f, g in zip(self.level_maps, other.level_maps)],
                    check=False)

    def scale(self, c):
        return RMap(self.source, self.target,
                    [f.scale(c) for f in self.level_maps], check=False)

    def is_zero(self):
        return all(f.is_zero() for f in self.level_maps)

    def total_rank(self):
        return sum(f.total_rank() for f in self.level_maps)

    def is_mono(self):
        return self.total_rank() == self.source.total_dim

    def is_epi(self):
        return self.total_rank() == self.target.total_dim

    def is_iso(self):
        return (self.source.total_dim == self.target.total_dim
                and self.is_mono())

    def __repr__(self):
        return "RMap(%s -> %s)" % (self.source.dim_grid(), self.target.dim_grid())


def zero_rmap(M, N):
    return RMap(M, N, [zero_amap(M.levels[i], N.levels[i])
                       for i in range(M.algebra.m + 1)], check=False)


def identity_rmap(M):
    from .hereditary import identity_amap
    return RMap(M, M, [identity_amap(l) for l in M.levels], check=False)


# -- structural modules ----------------------------------------------

def zero_module(alg):
    z = [zero_rep(alg.quiver, alg.field) for _ in range(alg.m + 1)]
    conns = [zero_amap(dual_tensor(z[j + 1]), z[j]) for j in range(alg.m)]
    return RModule(alg, z, conns, check=False)


def embed_level(alg, rep, i):
    """Place a base representation at level i with zero connectors."""
    if not 0 <= i <= alg.m:
        raise ValueError("level out of range")
    levels = [zero_rep(alg.quiver, alg.field) for _ in range(alg.m + 1)]
    levels[i] = rep
    conns = [zero_amap(dual_tensor(levels[j + 1]), levels[j])
             for j in range(alg.m)]
    return RModule(alg, levels, conns, check=False)


def projective(alg, v, i):
    """P(v, i): for i=0 the level-0 copy of A e_v; for i>=1 the
    projective-injective with top at level i and socle at level i-1."""
    if not 0 <= i <= alg.m:
        raise ValueError("level out of range")
    key = ("proj", v, i)
    if key in alg.cache:
        return alg.cache[key]
    if i == 0:
        mod = embed_level(alg, alg.base_projective(v), 0)
    else:
        levels = [zero_rep(alg.quiver, alg.field) for _ in range(alg.m + 1)]
        levels[i] = alg.base_projective(v)
        levels[i - 1] = alg.base_injective(v)
        conns = [zero_amap(dual_tensor(levels[j + 1]), levels[j])
                 for j in range(alg.m)]
        conns[i - 1] = alg.projective_conn(v)
        mod = RModule(alg, levels, conns, check=False)
    alg.cache[key] = mod
    return mod


def injective(alg, v, i):
    """I(v, i): equals P(v, i+1) below the top level; at level m it is the
    embedded base injective."""
    if not 0 <= i <= alg.m:
        raise ValueError("level out of range")
    if i < alg.m:
        return projective(alg, v, i + 1)
    key = ("inj", v, i)
    if key not in alg.cache:
        alg.cache[key] = embed_level(alg, alg.base_injective(v), alg.m)
    return alg.cache[key]


def simple(alg, v, i):
    key = ("simple", v, i)
    if key not in alg.cache:
        if not 0 <= i <= alg.m:
            raise ValueError("level out of range")
        alg.cache[key] = embed_level(alg, simple_rep(v, alg.quiver, alg.field), i)
    return alg.cache[key]


def regular_module(alg):
    """The algebra as a module over itself: direct sum of all P(v, i)."""
    key = ("regular",)
    if key not in alg.cache:
        mods = [projective(alg, v, i) for i in range(alg.m + 1)
                for v in alg.quiver.vertices]
        alg.cache[key] = direct_sum(alg, mods)[0]
    return alg.cache[key]


# -- direct sums ------------------------------------------------------

def _induced_connector_from_epi(t_epi_amaps, values, target_level):
    """Solve phi with phi o g = value where g (per vertex) is surjective
    onto the dual-tensor of the new level."""
    comps = {}
    quiver = target_level.quiver
    for v in quiver.vertices:
        g = t_epi_amaps.components[v]
        val = values.components[v]
        # phi * g = val  <=>  g^T phi^T = val^T
        sol = solve_matrix(g.transpose(), val.transpose())
        if sol is None:
            raise ValueError("induced connector does not exist")
        comps[v] = sol.transpose()
    return comps


def direct_sum(alg, mods):
    """Direct sum with inclusion and projection maps.

    Returns (sum_module, inclusions, projections).
    """
    mods = list(mods)
    if not mods:
        z = zero_module(alg)
        return z, [], []
    quiver = alg.quiver
    f = alg.field
    levels = []
    for i in range(alg.m + 1):
        dims = {v: sum(M.levels[i].dims[v] for M in mods)
                for v in quiver.vertices}
        maps = {a.name: Mat.block_diag([M.levels[i].maps[a.name] for M in mods],
                                       field=f)
                for a in quiver.arrows}
        levels.append(Rep(quiver, dims, maps, f, check=False))
    # inclusion/projection components per level
    incl_comps = [[] for _ in mods]
    proj_comps = [[] for _ in mods]
    for i in range(alg.m + 1):
        offs = {v: 0 for v in quiver.vertices}
        for k, M in enumerate(mods):
            ic, pc = {}, {}
            for v in quiver.vertices:
                d = M.levels[i].dims[v]
                D = levels[i].dims[v]
                o = offs[v]
                inc = Mat.zeros(D, d, f)
                prj = Mat.zeros(d, D, f)
                for t in range(d):
                    inc.data[o + t][t] = f.one
                    prj.data[t][o + t] = f.one
                ic[v], pc[v] = inc, prj
                offs[v] += d
            incl_comps[k].append(AMap(M.levels[i], levels[i], ic, check=False))
            proj_comps[k].append(AMap(levels[i], M.levels[i], pc, check=False))
    # connectors: determined by commuting with the level inclusions
    conns = []
    for j in range(alg.m):
        dtS = dual_tensor_data(levels[j + 1])
        t_incls = [dual_tensor_map(incl_comps[k][j + 1]) for k in range(len(mods))]
        gen = {v: Mat.hstack([t.components[v] for t in t_incls], field=f)
               for v in quiver.vertices}
        val = {v: Mat.hstack(
            [incl_comps[k][j].components[v] * mods[k].connectors[j].components[v]
             for k in range(len(mods))], field=f)
            for v in quiver.vertices}
        comps = {}
        for v in quiver.vertices:
            sol = solve_matrix(gen[v].transpose(), val[v].transpose())
            if sol is None:
                raise ValueError("direct sum connector construction failed")
            comps[v] = sol.transpose()
        conns.append(AMap(dtS.rep, levels[j], comps, check=False))
    S = RModule(alg, levels, conns, check=False)
    incls = [RMap(mods[k], S, incl_comps[k], check=False) for k in range(len(mods))]
    projs = [RMap(S, mods[k], proj_comps[k], check=False) for k in range(len(mods))]
    return S, incls, projs


def tuple_map(maps_to_summands, sum_module, inclusions):
    """The map M -> (+) T_k with the given components."""
    total = zero_rmap(maps_to_summands[0].source, sum_module)
    for f, inc in zip(maps_to_summands, inclusions):
        total = total + inc.compose(f)
    return total


def cotuple_map(maps_from_summands, sum_module, projections):
    """The map (+) T_k -> M with the given components."""
    total = zero_rmap(sum_module, maps_from_summands[0].target)
    for f, prj in zip(maps_from_summands, projections):
        total = total + f.compose(prj)
    return total


# -- sub and quotient modules ----------------------------------------

def submodule(M, subspaces):
    """Submodule spanned by vertex-level subspaces (must be closed under
    arrows and connectors).  Returns (S, inclusion)."""
    alg = M.algebra
    quiver = alg.quiver
    f = alg.field
    subs = {}
    for i in range(alg.m + 1):
        for v in quiver.vertices:
            s = subspaces.get((i, v))
            if s is None:
                s = column_space(Mat.zeros(M.levels[i].dims[v], 0, f))
            subs[(i, v)] = s
    levels = []
    incl_amaps = []
    for i in range(alg.m + 1):
        dims = {v: subs[(i, v)].dim for v in quiver.vertices}
        maps = {}
        for a in quiver.arrows:
            u, w = a.source, a.target
            img = M.levels[i].maps[a.name] * subs[(i, u)].basis
            sol = solve_matrix(subs[(i, w)].basis, img)
            if sol is None:
                raise ValueError("subspaces not closed under arrow %s" % a.name)
            maps[a.name] = sol
        rep = Rep(quiver, dims, maps, f, check=False)
        levels.append(rep)
        incl_amaps.append(AMap(rep, M.levels[i],
                               {v: subs[(i, v)].basis for v in quiver.vertices},
                               check=False))
    conns = []
    for j in range(alg.m):
        t_incl = dual_tensor_map(incl_amaps[j + 1])
        val = M.connectors[j].compose(t_incl)
        comps = {}
        for v in quiver.vertices:
            sol = solve_matrix(subs[(j, v)].basis, val.components[v])
            if sol is None:
                raise ValueError("subspaces not closed under connector %d" % j)
            comps[v] = sol
        conns.append(AMap(t_incl.source, levels[j], comps, check=False))
    S = RModule(alg, levels, conns, check=False)
    return S, RMap(S, M, incl_amaps, check=False)


def quotient_module(M, subspaces):
    """Quotient by a submodule given as vertex-level subspaces.
    Returns (Q, projection)."""
    alg = M.algebra
    quiver = alg.quiver
    f = alg.field
    subs = {}
    for i in range(alg.m + 1):
        for v in quiver.vertices:
            s = subspaces.get((i, v))
            if s is None:
                s = column_space(Mat.zeros(M.levels[i].dims[v], 0, f))
            subs[(i, v)] = s
    proj_mats = {}
    sect_mats = {}
    for i in range(alg.m + 1):
        for v in quiver.vertices:
            p, s = quotient_basis(M.levels[i].dims[v], subs[(i, v)])
            proj_mats[(i, v)] = p
            sect_mats[(i, v)] = s
    levels = []
    proj_amaps = []
    for i in range(alg.m + 1):
        dims = {v: proj_mats[(i, v)].rows for v in quiver.vertices}
        maps = {}
        for a in quiver.arrows:
            u, w = a.source, a.target
            maps[a.name] = (proj_mats[(i, w)] * M.levels[i].maps[a.name]
                            * sect_mats[(i, u)])
        rep = Rep(quiver, dims, maps, f, check=False)
        levels.append(rep)
        proj_amaps.append(AMap(M.levels[i], rep,
                               {v: proj_mats[(i, v)] for v in quiver.vertices},
                               check=False))
    conns = []
    for j in range(alg.m):
        dtQ = dual_tensor_data(levels[j + 1])
        t_proj = dual_tensor_map(proj_amaps[j + 1])
        val = proj_amaps[j].compose(M.connectors[j])
        comps = _induced_connector_from_epi(t_proj, val, levels[j])
        conns.append(AMap(dtQ.rep, levels[j], comps, check=False))
    Q = RModule(alg, levels, conns, check=False)
    return Q, RMap(M, Q, proj_amaps, check=False)


def kernel(f):
    """Kernel of an RMap.  Returns (K, inclusion)."""
    subs = {(i, v): kernel_basis(f.component(i, v))
            for i in range(f.source.algebra.m + 1)
            for v in f.source.algebra.quiver.vertices}
    return submodule(f.source, subs)


def image_subspaces(f):
    return {(i, v): column_space(f.component(i, v))
            for i in range(f.source.algebra.m + 1)
            for v in f.source.algebra.quiver.vertices}


def image(f):
    """Image of an RMap as a submodule of the target.  Returns (I, inclusion)."""
    return submodule(f.target, image_subspaces(f))


def cokernel(f):
    """Cokernel of an RMap.  Returns (C, projection)."""
    return quotient_module(f.target, image_subspaces(f))


# -- radical, socle, top ---------------------------------------------

def radical(M):
    """rad M: arrow images within each level plus the image of the
    connector from the level above.  Returns (R, inclusion)."""
    alg = M.algebra
    quiver = alg.quiver
    f = alg.field
    subs = {}
    for i in range(alg.m + 1):
        for w in quiver.vertices:
            pieces = [M.levels[i].maps[a.name] for a in quiver.arrows_into(w)]
            if i < alg.m:
                pieces.append(M.connectors[i].components[w])
            if pieces:
                stacked = Mat.hstack(pieces, field=f) if pieces else None
                subs[(i, w)] = column_space(stacked)
            else:
                subs[(i, w)] = column_space(Mat.zeros(M.levels[i].dims[w], 0, f))
    return submodule(M, subs)


def socle(M):
    """soc M: vectors killed by all arrows and by the connector pairing.
    Returns (S, inclusion)."""
    alg = M.algebra
    quiver = alg.quiver
    f = alg.field
    subs = {}
    for i in range(alg.m + 1):
        dt = dual_tensor_data(M.levels[i]) if i >= 1 else None
        for w in quiver.vertices:
            d = M.levels[i].dims[w]
            rows = [M.levels[i].maps[a.name] for a in quiver.arrows_from(w)]
            if i >= 1:
                conn = M.connectors[i - 1]
                for p in quiver.paths_into(w):
                    # columns: x -> phi_i(class of p* (x) x)
                    cols = []
                    for j in range(d):
                        e = [f.zero] * d
                        e[j] = f.one
                        cols.append(conn.components[p.source]
                                    * dt.class_of(p.source, p, e))
                    if cols:
                        rows.append(Mat.hstack(cols, field=f))
            if rows:
                subs[(i, w)] = kernel_basis(Mat.vstack(rows, field=f))
            else:
                subs[(i, w)] = column_space(Mat.identity(d, f))
    return submodule(M, subs)


def top(M):
    """M / rad M with its projection.  Returns (T, projection)."""
    R, incl = radical(M)
    subs = {(i, v): column_space(incl.component(i, v))
            for i in range(M.algebra.m + 1)
            for v in M.algebra.quiver.vertices}
    return quotient_module(M, subs)


# -- Hom over the replicated algebra ---------------------------------

def hom_basis_r(M, N):
    """Canonical basis of Hom(M, N) over the replicated algebra."""
    alg = M.algebra
    if N.algebra is not alg:
        raise ValueError("modules over different algebras")
    memo = M.cache.setdefault("hom", {})
    got = memo.get(id(N))
    if got is not None and got[0] is N:
        return got[1]
    basis = _hom_basis_r(M, N)
    memo[id(N)] = (N, basis)
    return basis


def _hom_basis_r(M, N):
    alg = M.algebra
    quiver = alg.quiver
    f = alg.field
    zero = f.zero
    offsets = {}
    total = 0
    for i in range(alg.m + 1):
        for v in quiver.vertices:
            offsets[(i, v)] = total
            total += N.levels[i].dims[v] * M.levels[i].dims[v]
    rows = []
    # level-wise arrow commutation
    for i in range(alg.m + 1):
        Mi, Ni = M.levels[i], N.levels[i]
        for a in quiver.arrows:
            u, w = a.source, a.target
            Na, Ma = Ni.maps[a.name], Mi.maps[a.name]
            cu, cw = Mi.dims[u], Mi.dims[w]
            for r in range(Ni.dims[w]):
                for j in range(cu):
                    row = [zero] * total
                    for k in range(Ni.dims[u]):
                        if Na.data[r][k]:
                            row[offsets[(i, u)] + k * cu + j] = Na.data[r][k]
                    for l in range(cw):
                        if Ma.data[l][j]:
                            idx = offsets[(i, w)] + r * cw + l
                            row[idx] = row[idx] - Ma.data[l][j]
                    rows.append(row)
    # connector commutation: phi^N o T(f_{j+1}) = f_j o phi^M
    for j in range(alg.m):
        Mi, Ni = M.levels[j + 1], N.levels[j + 1]
        dtM = dual_tensor_data(Mi)
        dtN = dual_tensor_data(Ni)
        phiM, phiN = M.connectors[j], N.connectors[j]
        for w in quiver.vertices:
            a_mat = phiN.components[w] * dtN.proj[w]  # rows x ambient_N
            b_mat = dtM.sect[w]                       # ambient_M x cols
            n_rows = N.levels[j].dims[w]
            n_cols = dtM.rep.dims[w]
            idxN = dtN.amb_index[w]
            amb_M = dtM.amb_basis[w]
            for r in range(n_rows):
                for c in range(n_cols):
                    row = [zero] * total
                    # phi^N o T(f) term
                    for bi, (p, l) in enumerate(amb_M):
                        b_val = b_mat.data[bi][c]
                        if not b_val:
                            continue
                        u = p.target
                        cu = Mi.dims[u]
                        for k in range(Ni.dims[u]):
                            a_val = a_mat.data[r][idxN[(p, k)]]
                            if a_val:
                                idx = offsets[(j + 1, u)] + k * cu + l
                                row[idx] = row[idx] + a_val * b_val
                    # minus f_j o phi^M term
                    cw = M.levels[j].dims[w]
                    for s in range(cw):
                        pm = phiM.components[w].data[s][c]
                        if pm:
                            idx = offsets[(j, w)] + r * cw + s
                            row[idx] = row[idx] - pm
                    if any(row):
                        rows.append(row)
    sysmat = Mat(len(rows), total, rows, f) if rows else Mat.zeros(0, total, f)
    ker = kernel_basis(sysmat)
    out = []
    for k in range(ker.dim):
        vec = ker.basis.col(k)
        level_maps = []
        for i in range(alg.m + 1):
            comps = {}
            for v in quiver.vertices:
                r_, c_ = N.levels[i].dims[v], M.levels[i].dims[v]
                base = offsets[(i, v)]
                comps[v] = Mat(r_, c_,
                               [[vec[base + a * c_ + b] for b in range(c_)]
                                for a in range(r_)], f)
            level_maps.append(AMap(M.levels[i], N.levels[i], comps, check=False))
        out.append(RMap(M, N, level_maps, check=False))
    return out


def hom_dim(M, N):
    return len(hom_basis_r(M, N))


# -- maps out of projectives -----------------------------------------

def map_from_projective(alg, v, i, M, x):
    """The module map P(v, i) -> M sending the canonical generator to the
    element with coordinates ``x`` in M at level i, vertex v."""
    P = projective(alg, v, i)
    quiver = alg.quiver
    f = alg.field
    xcol = x if isinstance(x, Mat) else Mat.column(x, f)
    if xcol.rows != M.levels[i].dims[v]:
        raise ValueError("generator image has wrong dimension")
    level_maps = []
    for lev in range(alg.m + 1):
        comps = {}
        if lev == i:
            Pv = alg.base_projective(v)
            for w in quiver.vertices:
                cols = [M.levels[i].path_action(p) * xcol
                        for p in Pv.path_basis[w]]
                comps[w] = (Mat.hstack(cols, field=f) if cols
                            else Mat.zeros(M.levels[i].dims[w], 0, f))
        elif lev == i - 1 and i >= 1:
            Iv = alg.base_injective(v)
            dt = dual_tensor_data(M.levels[i])
            conn = M.connectors[i - 1]
            for w in quiver.vertices:
                cols = [conn.components[w]
                        * dt.class_of(w, r, xcol.col(0))
                        for r in Iv.path_basis[w]]
                comps[w] = (Mat.hstack(cols, field=f) if cols
                            else Mat.zeros(M.levels[i - 1].dims[w], 0, f))
        level_maps.append(AMap(P.levels[lev], M.levels[lev],
                               comps, check=False))
    return RMap(P, M, level_maps, check=False)


# -- promotion to a higher replication degree ------------------------

def promote(M, target_alg):
    """View a module over A^(m) as a module over A^(t), t >= m, by padding
    zero levels on top."""
    alg = M.algebra
    if target_alg.m < alg.m:
        raise ValueError("target replication degree too small")
    levels = list(M.levels)
    conns = list(M.connectors)
    for _ in range(target_alg.m - alg.m):
        z = zero_rep(alg.quiver, alg.field)
        conns.append(zero_amap(dual_tensor(z), levels[-1]))
        levels.append(z)
    return RModule(target_alg, levels, conns, check=False)


# -- serialization ----------------------------------------------------

def _mat_to_json(m):
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[str(x) for x in row] for row in m.data]}


def _mat_from_json(obj, field):
    data = [[field.of(Fractionish(x)) for x in row] for row in obj["entries"]]
    return Mat(obj["rows"], obj["cols"], data, field)


def Fractionish(s):
    from fractions import Fraction
    return Fraction(s)


def rmodule_to_json(M):
    alg = M.algebra
    out = {"m": alg.m, "levels": [], "connectors": []}
    for rep in M.levels:
        out["levels"].append({
            "dims": [[str(v), rep.dims[v]] for v in alg.quiver.vertices],
            "maps": {a.name: _mat_to_json(rep.maps[a.name])
                     for a in alg.quiver.arrows}})
    for conn in M.connectors:
        out["connectors"].append({str(v): _mat_to_json(conn.components[v])
                                  for v in alg.quiver.vertices})
    return out


def rmodule_from_json(alg, obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    if obj["m"] != alg.m:
        raise ValueError("replication degree mismatch")
    levels = []
    vkey = {str(v): v for v in alg.quiver.vertices}
    for lev in obj["levels"]:
        dims = {vkey[v]: d for v, d in lev["dims"]}
        maps = {name: _mat_from_json(mj, alg.field)
                for name, mj in lev["maps"].items()}
        levels.append(Rep(alg.quiver, dims, maps, alg.field))
    conns = []
    for j, cj in enumerate(obj["connectors"]):
        dt = dual_tensor_data(levels[j + 1])
        comps = {vkey[v]: _mat_from_json(mj, alg.field)
                 for v, mj in cj.items()}
        conns.append(AMap(dt.rep, levels[j], comps, check=False))
    return RModule(alg, levels, conns, check=True)
