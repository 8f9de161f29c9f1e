"""Tilting and partial-tilting certification, Bongartz completion,
complement fans, and the duplicated-algebra (m = 1) classifiers."""

from __future__ import annotations

from .approx import left_approximation, right_approximation
from .homological import (ext, ext1_classes, injective_envelope, is_faithful,
                          pd, realize_extension)
from .krullschmidt import (basic_summands, decompose, delta_count,
                           is_indecomposable, is_isomorphic)
from .linalg import Mat, rank
from .replicated import (cokernel, direct_sum, hom_basis_r, kernel, projective,
                         regular_module, simple, zero_module)

SEARCH_LIMIT = 200


class TiltingRecord:
    def __init__(self, module, pieces, certified_by, pd_max):
        self.module = module
        self.pieces = pieces
        self.certified_by = certified_by
        self.pd_max = pd_max


class ComplementFan:
    def __init__(self, almost_complete, complements, exchange_witnesses):
        self.almost_complete = almost_complete
        self.complements = complements          # ordered list of (X, pd)
        self.exchange_witnesses = exchange_witnesses

    @property
    def pds(self):
        return [p for _, p in self.complements]


def _ext_orthogonal(X, Y):
    """Ext^i(X, Y) = 0 for all i >= 1 (bounded by pd X)."""
    for i in range(1, pd(X) + 1):
        if ext(i, X, Y):
            return False
    return True


def is_partial_tilting(M):
    """Self-orthogonality in all positive degrees (pd is always finite)."""
    if M.is_zero():
        return True
    parts = basic_summands(M)
    return all(_ext_orthogonal(X, Y) for X in parts for Y in parts)


def coresolution(T):
    """Iterated minimal left add(T)-approximations of the regular module.

    Returns the list of add(T) terms when every step is injective and zero
    is reached within 2m+1 steps; None otherwise.
    """
    alg = T.algebra
    current = regular_module(alg)
    terms = []
    for _ in range(2 * alg.m + 2):
        if current.is_zero():
            return terms
        appr = left_approximation(current, T)
        if not appr.map.is_mono():
            return None
        terms.append(appr.map.target)
        current, _ = cokernel(appr.map)
    return terms if current.is_zero() else None


def is_tilting(M):
    """Tilting test with dual certificates; disagreement is fatal."""
    alg = M.algebra
    partial = is_partial_tilting(M)
    delta_ok = partial and delta_count(M) == alg.delta
    cores = coresolution(M) if partial else None
    cores_ok = partial and cores is not None
    if delta_ok != cores_ok:
        raise RuntimeError(
            "certificate disagreement: delta criterion %s, coresolution %s"
            % (delta_ok, cores_ok))
    return delta_ok


def certify_tilting(M):
    """TiltingRecord for a tilting module (raises when M is not tilting)."""
    if not is_tilting(M):
        raise ValueError("module is not tilting")
    parts = basic_summands(M)
    basic, _, _ = direct_sum(M.algebra, parts)
    pieces = [(X, pd(X)) for X in parts]
    record = TiltingRecord(basic, pieces,
                           {"delta-criterion": True, "coresolution": True},
                           max(p for _, p in pieces))
    return record


def bongartz_complete(M):
    """Classical Bongartz completion for pd(M) <= 1."""
    alg = M.algebra
    if M.is_zero():
        return certify_tilting(regular_module(alg))
    if not is_partial_tilting(M) or pd(M) > 1:
        raise ValueError("Bongartz completion needs a partial tilting module "
                         "of projective dimension at most 1")
    E = regular_module(alg)
    guard = 0
    while True:
        classes = ext1_classes(M, E)
        if not classes:
            break
        E, _, _ = realize_extension(M, E, classes[0])
        # only the basic part matters for Ext-vanishing; keep E small
        E, _, _ = direct_sum(alg, basic_summands(E))
        guard += 1
        if guard > 10 * alg.delta * M.total_dim:
            raise RuntimeError("universal extension did not terminate")
    total, _, _ = direct_sum(alg, [E, M])
    return certify_tilting(total)


def _is_complement(T_bar, X):
    """X indecomposable, not in add(T_bar), and T_bar (+) X tilting."""
    if X.is_zero() or not is_indecomposable(X):
        return False
    if any(is_isomorphic(X, Y) for Y in basic_summands(T_bar)):
        return False
    total, _, _ = direct_sum(T_bar.algebra, [T_bar, X])
    return is_tilting(total)


def find_complement(T_bar, candidates=None):
    """Seed complement search: projectives and injectives, then Bongartz
    (pd <= 1), then a caller-provided candidate list, then a bounded
    mutation search."""
    from .replicated import embed_level, injective
    alg = T_bar.algebra
    existing = basic_summands(T_bar)
    cheap = [projective(alg, v, i) for i in range(alg.m + 1)
             for v in alg.quiver.vertices]
    cheap += [injective(alg, v, alg.m) for v in alg.quiver.vertices]
    cheap += [embed_level(alg, rep, i)
              for i in range(alg.m + 1) for v in alg.quiver.vertices
              for rep in (alg.base_projective(v), alg.base_injective(v))]
    for P in cheap:
        if not any(is_isomorphic(P, Y) for Y in existing):
            if _is_complement(T_bar, P):
                return P
    if pd(T_bar) <= 1:
        record = bongartz_complete(T_bar)
        for X, _ in record.pieces:
            if not any(is_isomorphic(X, Y) for Y in existing):
                if _is_complement(T_bar, X):
                    return X
    if candidates:
        for X in candidates:
            if _is_complement(T_bar, X):
                return X
    return _mutation_seed_search(T_bar)


def _mutation_seed_search(T_bar, limit=SEARCH_LIMIT):
    """Walk the tilting quiver from the regular module looking for a vertex
    that contains T_bar; justified by the connectivity of the quiver."""
    from .tiltquiver import explore
    alg = T_bar.algebra
    want = basic_summands(T_bar)

    def contains_t_bar(record):
        parts = [X for X, _ in record.pieces]
        for Y in want:
            if not any(is_isomorphic(Y, X) for X in parts):
                return None
        for X in parts:
            if not any(is_isomorphic(Y, X) for Y in want):
                return X
        return None

    graph = explore(certify_tilting(regular_module(alg)),
                    max_vertices=limit)
    for record in graph.vertices:
        X = contains_t_bar(record)
        if X is not None:
            return X
    raise RuntimeError("no seed complement found within the search limit")


def _down_step(T_bar, X):
    """Kernel of the minimal right add(T_bar)-approximation of X, with the
    exchange sequence 0 -> K -> B -> X -> 0; None when X is the bottom."""
    appr = right_approximation(X, T_bar)
    if not appr.map.is_epi():
        return None
    K, incl = kernel(appr.map)
    if K.is_zero():
        raise RuntimeError("complement lies in add of the almost complete part")
    return K, {"sub": K, "mid": appr.map.source, "quot": X,
               "incl": incl, "proj": appr.map}


def _up_step(T_bar, X):
    """Cokernel of the minimal left add(T_bar)-approximation, dually."""
    appr = left_approximation(X, T_bar)
    if not appr.map.is_mono():
        return None
    C, proj = cokernel(appr.map)
    if C.is_zero():
        raise RuntimeError("complement lies in add of the almost complete part")
    return C, {"sub": X, "mid": appr.map.target, "quot": C,
               "incl": appr.map, "proj": proj}


def complement_fan(T_bar, seed=None, candidates=None):
    """All complements of an almost complete partial tilting module,
    reported bottom-up (cosyzygy order) with their projective dimensions."""
    alg = T_bar.algebra
    cached = T_bar.cache.get("fan")
    if cached is not None:
        return cached
    if not is_partial_tilting(T_bar):
        raise ValueError("input is not partial tilting")
    if delta_count(T_bar) != alg.delta - 1:
        raise ValueError("input is not almost complete")
    if seed is None:
        seed = find_complement(T_bar, candidates)
    elif not _is_complement(T_bar, seed):
        raise ValueError("provided seed is not a complement")
    watchdog = 2 * alg.m + 3
    # walk down to the bottom complement
    bottom = seed
    for _ in range(watchdog):
        step = _down_step(T_bar, bottom)
        if step is None:
            break
        bottom = step[0]
        if not _is_complement(T_bar, bottom):
            raise RuntimeError("down-walk produced a non-complement")
    else:
        raise RuntimeError("complement chain exceeded its length bound")
    # walk up, collecting the chain and witnesses
    chain = [(bottom, pd(bottom))]
    witnesses = []
    X = bottom
    for _ in range(watchdog):
        step = _up_step(T_bar, X)
        if step is None:
            break
        X = step[0]
        if not _is_complement(T_bar, X):
            raise RuntimeError("up-walk produced a non-complement")
        chain.append((X, pd(X)))
        witnesses.append(step[1])
    else:
        raise RuntimeError("complement chain exceeded its length bound")
    fan = ComplementFan(T_bar, chain, witnesses)
    # the chain is unique regardless of the seed, so it is safe to cache
    T_bar.cache["fan"] = fan
    return fan


def count_complements(T_bar, seed=None, candidates=None):
    return len(complement_fan(T_bar, seed, candidates).complements)


def _module_is_projective(M):
    return all(any(is_isomorphic(p, projective(M.algebra, v, i))
                   for v in M.algebra.quiver.vertices
                   for i in range(M.algebra.m + 1))
               for p in decompose(M))


def _base_rep_faithful(rep):
    """Faithfulness over the base path algebra: the path actions are
    linearly independent in (+) Hom(N_u, N_w) (zero annihilator)."""
    q = rep.quiver
    field = rep.field
    offsets = {}
    total = 0
    for u in q.vertices:
        for w in q.vertices:
            offsets[(u, w)] = total
            total += rep.dims[u] * rep.dims[w]
    m = Mat.zeros(max(total, 1), len(q.paths), field)
    for j, p in enumerate(q.paths):
        mat = rep.path_action(p)
        off = offsets[(p.source, p.target)]
        k = 0
        for row in mat.data:
            for x in row:
                m.data[off + k][j] = x
                k += 1
    return rank(m) == len(q.paths)


def classify_duplicated(T_bar, seed=None, candidates=None):
    """Report for the m = 1 classification: fan shape, the envelope of the
    pd-2 complement, pd-3 existence, and level-0 faithfulness."""
    alg = T_bar.algebra
    if alg.m != 1:
        raise ValueError("classification applies to the duplicated case only")
    fan = complement_fan(T_bar, seed, candidates)
    pds = fan.pds
    report = {
        "pd_almost_complete": pd(T_bar),
        "fan_size": len(fan.complements),
        "pds": pds,
        "has_pd3_complement": 3 in pds,
    }
    pd2 = [X for X, p in fan.complements if p == 2]
    if pd2:
        E, _ = injective_envelope(pd2[0])
        report["pd2_envelope_projective"] = _module_is_projective(E)
        report["pd2_dim_grid"] = str(pd2[0].dim_grid())
    # level-0 part of T_bar with the projective-injectives removed
    non_pi = [X for X in basic_summands(T_bar)
              if not (_module_is_projective(X) and _is_injective_module(X))]
    level0 = [X for X in non_pi
              if all(X.dims(i, v) == 0
                     for i in range(1, alg.m + 1)
                     for v in alg.quiver.vertices)]
    if level0 and len(level0) == len(non_pi):
        S, _, _ = direct_sum(alg, level0)
        report["level0_part_faithful"] = _base_rep_faithful(S.levels[0])
    report["fan"] = fan
    return report


def _is_injective_module(M):
    from .replicated import injective
    return all(any(is_isomorphic(p, injective(M.algebra, v, i))
                   for v in M.algebra.quiver.vertices
                   for i in range(M.algebra.m + 1))
               for p in decompose(M))


def complete_partial_tilting(M, candidates=None):
    """Complete a partial tilting module to a tilting module."""
    alg = M.algebra
    if not is_partial_tilting(M):
        raise ValueError("input is not partial tilting")
    if M.is_zero():
        return certify_tilting(regular_module(alg))
    if delta_count(M) == alg.delta:
        return certify_tilting(M)
    if pd(M) <= 1:
        return bongartz_complete(M)
    if not candidates:
        raise RuntimeError("strategy unavailable: supply a candidate list "
                           "(Dynkin base) or use Bongartz for pd <= 1")
    current = basic_summands(M)
    pool = [X for X in candidates
            if _ext_orthogonal(X, X) and is_indecomposable(X)
            and not any(is_isomorphic(X, Y) for Y in current)]

    def compatible(X, chosen):
        return all(_ext_orthogonal(X, Y) and _ext_orthogonal(Y, X)
                   for Y in chosen)

    target = alg.delta

    def extend(chosen, start):
        if len(chosen) == target:
            total, _, _ = direct_sum(alg, chosen)
            if is_tilting(total):
                return chosen
            return None
        for idx in range(start, len(pool)):
            X = pool[idx]
            if any(is_isomorphic(X, Y) for Y in chosen):
                continue
            if compatible(X, chosen):
                got = extend(chosen + [X], idx + 1)
                if got is not None:
                    return got
        return None

    got = extend(current, 0)
    if got is None:
        raise RuntimeError("no completion found among the candidates")
    total, _, _ = direct_sum(alg, got)
    return certify_tilting(total)
