"""Minimal right and left add(T)-approximations, and the generation /
cogeneration tests built on them."""

from __future__ import annotations

from .krullschmidt import basic_summands
from .linalg import Mat, solve_matrix
from .replicated import (cotuple_map, direct_sum, hom_basis_r, tuple_map,
                         zero_module, zero_rmap)


class ApproxResult:
    """A minimal approximation: ``map`` is X -> M (right) or M -> X (left),
    with X = (+) summands drawn from add(T)."""

    def __init__(self, map_, summands):
        self.map = map_
        self.summands = summands


def _vec(f):
    out = []
    alg = f.source.algebra
    for i in range(alg.m + 1):
        for v in alg.quiver.vertices:
            c = f.component(i, v)
            out.extend(x for row in c.data for x in row)
    return out


class _HomCache:
    def __init__(self):
        self.store = {}

    def basis(self, a, b):
        key = (id(a), id(b))
        if key not in self.store:
            self.store[key] = hom_basis_r(a, b)
        return self.store[key]


def _strip_redundant(pairs, field, factor_columns):
    """Drop summand copies whose component factors through the rest.

    ``factor_columns(candidate, rest)`` yields the vectorized factoring
    system; sweeps repeat until no copy can be removed.
    """
    changed = True
    while changed:
        changed = False
        for c in range(len(pairs)):
            rest = pairs[:c] + pairs[c + 1:]
            cols, rhs = factor_columns(pairs[c], rest)
            if not rhs:
                pairs.pop(c)
                changed = True
                break
            mat = (Mat.hstack([Mat.column(col, field) for col in cols],
                              field=field)
                   if cols else Mat.zeros(len(rhs), 0, field))
            if solve_matrix(mat, Mat.column(rhs, field)) is not None:
                pairs.pop(c)
                changed = True
                break
    return pairs


def right_approximation(M, T):
    """Minimal right add(T)-approximation of M."""
    alg = M.algebra
    field = alg.field
    cache = _HomCache()
    pairs = []
    for Tj in basic_summands(T):
        for f in cache.basis(Tj, M):
            pairs.append((Tj, f))

    def factor_columns(cand, rest):
        Tc, fc = cand
        cols = []
        for Tl, fl in rest:
            for b in cache.basis(Tc, Tl):
                cols.append(_vec(fl.compose(b)))
        return cols, _vec(fc)

    pairs = _strip_redundant(pairs, field, factor_columns)
    if not pairs:
        Z = zero_module(alg)
        return ApproxResult(zero_rmap(Z, M), [])
    mods = [p[0] for p in pairs]
    X, _, projs = direct_sum(alg, mods)
    total = cotuple_map([f for _, f in pairs], X, projs)
    return ApproxResult(total, mods)


def left_approximation(M, T):
    """Minimal left add(T)-approximation of M."""
    alg = M.algebra
    field = alg.field
    cache = _HomCache()
    pairs = []
    for Tj in basic_summands(T):
        for f in cache.basis(M, Tj):
            pairs.append((Tj, f))

    def factor_columns(cand, rest):
        Tc, gc = cand
        cols = []
        for Tl, gl in rest:
            for b in cache.basis(Tl, Tc):
                cols.append(_vec(b.compose(gl)))
        return cols, _vec(gc)

    pairs = _strip_redundant(pairs, field, factor_columns)
    if not pairs:
        Z = zero_module(alg)
        return ApproxResult(zero_rmap(M, Z), [])
    mods = [p[0] for p in pairs]
    X, incls, _ = direct_sum(alg, mods)
    total = tuple_map([f for _, f in pairs], X, incls)
    return ApproxResult(total, mods)


def is_generated_by(M, T):
    """True when M is a quotient of a module in add(T)."""
    if M.is_zero():
        return True
    return right_approximation(M, T).map.is_epi()


def is_cogenerated_by(M, T):
    """True when M embeds into a module in add(T)."""
    if M.is_zero():
        return True
    return left_approximation(M, T).map.is_mono()
