"""The tilting quiver: vertices are basic tilting modules, arrows are
single-summand exchanges witnessed by short exact sequences."""

from __future__ import annotations

import json

from .homological import ext, pd
from .krullschmidt import is_indecomposable, is_isomorphic
from .replicated import direct_sum
from .tilting import (TiltingRecord, _down_step, _up_step, certify_tilting,
                      is_tilting)


class Registry:
    """Canonical representatives per isomorphism class, so homological
    caches attached to module instances are shared."""

    def __init__(self):
        self.by_grid = {}
        self.records = {}

    def canonical(self, M):
        key = M.dim_grid().key()
        bucket = self.by_grid.setdefault(key, [])
        for N in bucket:
            if is_isomorphic(M, N):
                return N
        bucket.append(M)
        return M

    @staticmethod
    def parts_key(parts):
        """Identity key for a multiset of canonical representatives."""
        return tuple(sorted(id(p) for p in parts))


def record_key(record):
    """Canonical vertex key: the sorted multiset of summand DimGrids."""
    return tuple(sorted(str(X.dim_grid()) for X, _ in record.pieces))


def records_isomorphic(r1, r2):
    if record_key(r1) != record_key(r2):
        return False
    rest = [X for X, _ in r2.pieces]
    for X, _ in r1.pieces:
        hit = next((i for i, Y in enumerate(rest) if is_isomorphic(X, Y)),
                   None)
        if hit is None:
            return False
        rest.pop(hit)
    return True


class TiltingQuiverGraph:
    def __init__(self, vertices, arrows, exhausted, limit_hit=False):
        self.vertices = vertices       # list of TiltingRecord
        self.arrows = arrows           # list of (i, j, witness dict)
        self.exhausted = exhausted
        self.limit_hit = limit_hit


def _record_from_parts(alg, parts, registry):
    parts = [registry.canonical(X) for X in parts]
    ckey = registry.parts_key(parts)
    cached = registry.records.get(ckey)
    if cached is not None:
        return cached
    total, _, _ = direct_sum(alg, parts)
    if not is_tilting(total):
        raise RuntimeError("exchange produced a non-tilting module")
    pieces = [(X, pd(X)) for X in parts]
    record = TiltingRecord(total, pieces,
                           {"delta-criterion": True, "coresolution": True},
                           max(p for _, p in pieces))
    registry.records[ckey] = record
    return record


def mutate_all(record, registry=None):
    """All exchange neighbors of a tilting module.

    Returns a list of (neighbor record, direction, witness): direction
    "in" means the arrow points neighbor -> record, "out" the reverse,
    following the exact-sequence orientation 0 -> X -> E -> Y -> 0
    giving (rest (+) X) -> (rest (+) Y).
    """
    registry = registry or Registry()
    alg = record.module.algebra
    parts = [registry.canonical(X) for X, _ in record.pieces]
    out = []
    for idx, X in enumerate(parts):
        rest = parts[:idx] + parts[idx + 1:]
        T_bar, _, _ = direct_sum(alg, rest)
        down = _down_step(T_bar, X)
        if down is not None:
            K = registry.canonical(down[0])
            if any(K is r for r in rest) or not is_indecomposable(K):
                raise RuntimeError("down-exchange produced a non-complement")
            neighbor = _record_from_parts(alg, rest + [K], registry)
            # witness 0 -> K -> B -> X -> 0: arrow (rest+K) -> (rest+X)
            out.append((neighbor, "in", down[1]))
        up = _up_step(T_bar, X)
        if up is not None:
            C = registry.canonical(up[0])
            if any(C is r for r in rest) or not is_indecomposable(C):
                raise RuntimeError("up-exchange produced a non-complement")
            neighbor = _record_from_parts(alg, rest + [C], registry)
            # witness 0 -> X -> B -> C -> 0: arrow (rest+X) -> (rest+C)
            out.append((neighbor, "out", up[1]))
    return out


def explore(seed=None, algebra=None, max_vertices=None, max_radius=None):
    """BFS closure of the tilting quiver under mutation.

    ``exhausted`` is set only when the frontier empties within the limits;
    in that case the vertex set is all tilting modules (connectivity).
    """
    registry = Registry()
    if seed is None:
        from .replicated import regular_module
        seed = certify_tilting(regular_module(algebra))
    seed = _record_from_parts(seed.module.algebra,
                              [X for X, _ in seed.pieces], registry)
    vertices = [seed]
    index_of = {registry.parts_key([X for X, _ in seed.pieces]): 0}
    arrows = []
    arrow_set = set()
    frontier = [(0, 0)]                  # (vertex index, radius)
    qpos = 0
    limit_hit = False
    while qpos < len(frontier):
        vidx, radius = frontier[qpos]
        qpos += 1
        if max_radius is not None and radius >= max_radius:
            limit_hit = True
            continue
        for neighbor, direction, witness in mutate_all(vertices[vidx],
                                                       registry):
            nkey = registry.parts_key([X for X, _ in neighbor.pieces])
            nidx = index_of.get(nkey)
            if nidx is None:
                if (max_vertices is not None
                        and len(vertices) >= max_vertices):
                    limit_hit = True
                    continue
                vertices.append(neighbor)
                nidx = len(vertices) - 1
                index_of[nkey] = nidx
                frontier.append((nidx, radius + 1))
            edge = (nidx, vidx) if direction == "in" else (vidx, nidx)
            if edge not in arrow_set:
                arrow_set.add(edge)
                arrows.append((edge[0], edge[1], witness))
    return TiltingQuiverGraph(vertices, arrows, exhausted=not limit_hit,
                              limit_hit=limit_hit)


def exhaustive_tilting_oracle(alg, nodes=None):
    """All basic tilting modules, by checking every delta-sized
    ext-orthogonal subset of the enumerated indecomposables."""
    from .arknit import enumerate_indecomposables
    if nodes is None:
        nodes = enumerate_indecomposables(alg)
    n = len(nodes)
    self_ok = [all(ext(i, X, X) == 0 for i in range(1, pd(X) + 1))
               for X in nodes]
    compat = {}

    def ok(a, b):
        if (a, b) not in compat:
            compat[(a, b)] = all(
                ext(i, nodes[a], nodes[b]) == 0
                for i in range(1, pd(nodes[a]) + 1)) and all(
                ext(i, nodes[b], nodes[a]) == 0
                for i in range(1, pd(nodes[b]) + 1))
        return compat[(a, b)]

    target = alg.delta
    found = []

    def extend(chosen, start):
        if len(chosen) == target:
            total, _, _ = direct_sum(alg, [nodes[i] for i in chosen])
            # is_tilting internally asserts both certificates agree
            if is_tilting(total):
                found.append(list(chosen))
            return
        if len(chosen) + (n - start) < target:
            return
        for idx in range(start, n):
            if not self_ok[idx]:
                continue
            if all(ok(c, idx) for c in chosen):
                extend(chosen + [idx], idx + 1)

    extend([], 0)
    records = []
    for subset in found:
        parts = [nodes[i] for i in subset]
        total, _, _ = direct_sum(alg, parts)
        pieces = [(X, pd(X)) for X in parts]
        records.append(TiltingRecord(
            total, pieces, {"delta-criterion": True, "coresolution": True},
            max(p for _, p in pieces)))
    return records


def graph_to_json(graph):
    data = {
        "vertices": [
            {"key": list(record_key(rec)),
             "pds": sorted(p for _, p in rec.pieces)}
            for rec in graph.vertices
        ],
        "arrows": [
            {"from": i, "to": j,
             "witness": {"sub": str(w["sub"].dim_grid()),
                         "mid": str(w["mid"].dim_grid()),
                         "quot": str(w["quot"].dim_grid())}}
            for (i, j, w) in sorted(graph.arrows, key=lambda a: (a[0], a[1]))
        ],
        "exhausted": graph.exhausted,
    }
    return json.dumps(data, indent=2, sort_keys=True)


def graph_from_json(text):
    """Parse an exported graph back into its plain data form."""
    return json.loads(text)


def export_dot(graph):
    lines = ["digraph tilting {"]
    for i, rec in enumerate(graph.vertices):
        label = "|".join(record_key(rec))
        lines.append('  v%d [label="%s"];' % (i, label))
    for (i, j, _) in sorted(graph.arrows, key=lambda a: (a[0], a[1])):
        lines.append("  v%d -> v%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"
