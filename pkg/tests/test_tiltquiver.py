import json

import pytest

from reptilt.catalog import duplicated, kronecker_quiver, linear_quiver
from reptilt.krullschmidt import is_isomorphic
from reptilt.quiver import Quiver
from reptilt.replicated import ReplicatedAlgebra
from reptilt.tiltquiver import (exhaustive_tilting_oracle, explore, export_dot,
                                graph_from_json, graph_to_json, mutate_all,
                                record_key, records_isomorphic)


@pytest.fixture(scope="module")
def one_vertex_graph():
    alg = duplicated(Quiver([1], []))
    return explore(algebra=alg)


@pytest.fixture(scope="module")
def a2():
    return duplicated(linear_quiver(2))


@pytest.fixture(scope="module")
def a2_graph(a2):
    return explore(algebra=a2)


def test_one_vertex_graph_shape(one_vertex_graph):
    g = one_vertex_graph
    assert g.exhausted and not g.limit_hit
    assert len(g.vertices) == 2
    assert len(g.arrows) == 1


def test_duplicated_a2_graph_equals_oracle(a2, a2_graph):
    oracle = exhaustive_tilting_oracle(a2)
    assert a2_graph.exhausted
    assert len(a2_graph.vertices) == len(oracle) == 9
    for record in oracle:
        assert any(records_isomorphic(record, v) for v in a2_graph.vertices)


def test_arrows_are_single_exchanges(a2_graph):
    for (i, j, witness) in a2_graph.arrows:
        src = [X for X, _ in a2_graph.vertices[i].pieces]
        dst = [X for X, _ in a2_graph.vertices[j].pieces]
        shared = sum(1 for X in src if any(X is Y for Y in dst))
        assert shared == len(src) - 1
        # the exchange sequence runs sub -> mid -> quot
        assert witness["incl"].is_mono()
        assert witness["proj"].is_epi()
        assert (witness["mid"].total_dim
                == witness["sub"].total_dim + witness["quot"].total_dim)


def test_mutation_is_reversible(a2_graph):
    index = {id(v): k for k, v in enumerate(a2_graph.vertices)}
    neighbor_sets = {}
    for k, v in enumerate(a2_graph.vertices):
        neighbor_sets[k] = set()
        for nb, _, _ in mutate_all(v):
            hit = next(kk for kk, w in enumerate(a2_graph.vertices)
                       if records_isomorphic(nb, w))
            neighbor_sets[k].add(hit)
    for k, nbrs in neighbor_sets.items():
        for j in nbrs:
            assert k in neighbor_sets[j]


def test_kronecker_partial_exploration():
    alg = duplicated(kronecker_quiver())
    g = explore(algebra=alg, max_vertices=8)
    assert g.limit_hit and not g.exhausted
    assert len(g.vertices) == 8


def test_max_radius_limits_depth(a2):
    g = explore(algebra=a2, max_radius=1)
    assert g.limit_hit and not g.exhausted
    assert 1 < len(g.vertices) < 9


def test_pd_at_most_one_subgraph_connected(a2_graph):
    low = [k for k, v in enumerate(a2_graph.vertices)
           if all(p <= 1 for _, p in v.pieces)]
    assert low
    edges = {(i, j) for i, j, _ in a2_graph.arrows}
    component = {low[0]}
    frontier = [low[0]]
    while frontier:
        k = frontier.pop()
        for i, j in edges:
            for a, b in ((i, j), (j, i)):
                if a == k and b in low and b not in component:
                    component.add(b)
                    frontier.append(b)
    assert component == set(low)


def test_json_export_is_deterministic(a2_graph):
    text1 = graph_to_json(a2_graph)
    text2 = graph_to_json(a2_graph)
    assert text1 == text2
    data = graph_from_json(text1)
    assert len(data["vertices"]) == 9
    assert data["exhausted"] is True
    assert all(set(a) == {"from", "to", "witness"} for a in data["arrows"])


def test_dot_export_golden(one_vertex_graph):
    text = export_dot(one_vertex_graph)
    lines = text.strip().splitlines()
    assert lines[0] == "digraph tilting {"
    assert lines[-1] == "}"
    assert sum(1 for l in lines if "->" in l) == 1


def test_vertex_keys_are_sorted_multisets(a2_graph):
    for v in a2_graph.vertices:
        key = record_key(v)
        assert list(key) == sorted(key)


def test_m2_graph_matches_oracle():
    alg = ReplicatedAlgebra(Quiver([1], []), 2)
    g = explore(algebra=alg)
    oracle = exhaustive_tilting_oracle(alg)
    assert g.exhausted
    assert len(g.vertices) == len(oracle)
    for record in oracle:
        assert any(records_isomorphic(record, v) for v in g.vertices)
