import pytest

from reptilt.arknit import enumerate_indecomposables
from reptilt.catalog import (d4_almost_complete_pd1, d4_almost_complete_pd2,
                             duplicated, kronecker_almost_complete_pd1,
                             kronecker_almost_complete_pd2,
                             kronecker_almost_complete_pd3, kronecker_quiver,
                             linear_quiver)
from reptilt.homological import injective_envelope, is_faithful, pd
from reptilt.krullschmidt import (basic_summands, decompose, is_isomorphic)
from reptilt.quiver import Quiver
from reptilt.replicated import (ReplicatedAlgebra, direct_sum, embed_level,
                                injective, projective, regular_module, simple)
from reptilt.tilting import (bongartz_complete, certify_tilting,
                             classify_duplicated, complement_fan,
                             complete_partial_tilting, count_complements,
                             is_partial_tilting, is_tilting)
from reptilt.tiltquiver import Registry, exhaustive_tilting_oracle


@pytest.fixture(scope="module")
def a2():
    return duplicated(linear_quiver(2))


@pytest.fixture(scope="module")
def a2_oracle(a2):
    return exhaustive_tilting_oracle(a2)


def test_regular_module_is_tilting(a2):
    assert is_tilting(regular_module(a2))
    alg2 = ReplicatedAlgebra(linear_quiver(2), 2)
    assert is_tilting(regular_module(alg2))


def test_partial_tilting_detects_extensions(a2):
    # Ext^1(S(2,0), S(1,0)) is nonzero, so the pair is not partial tilting
    M, _, _ = direct_sum(a2, [simple(a2, 1, 0), simple(a2, 2, 0)])
    assert not is_partial_tilting(M)
    assert is_partial_tilting(simple(a2, 1, 0))
    assert is_partial_tilting(regular_module(a2))


def test_almost_complete_is_not_tilting(a2):
    parts = basic_summands(regular_module(a2))
    for drop in range(len(parts)):
        rest, _, _ = direct_sum(a2, parts[:drop] + parts[drop + 1:])
        assert not is_tilting(rest)


def test_certify_raises_on_non_tilting(a2):
    with pytest.raises(ValueError):
        certify_tilting(simple(a2, 1, 0))


def test_bongartz_of_zero_is_regular(a2):
    from reptilt.replicated import zero_module
    record = certify_tilting(regular_module(a2))
    got = bongartz_complete(zero_module(a2))
    assert len(got.pieces) == len(record.pieces)
    for X, _ in got.pieces:
        assert any(is_isomorphic(X, Y) for Y, _ in record.pieces)


def test_bongartz_completes_a_projective(a2):
    P = projective(a2, 2, 1)
    record = bongartz_complete(P)
    assert any(is_isomorphic(X, P) for X, _ in record.pieces)
    assert len(record.pieces) == a2.delta


def test_bongartz_rejects_higher_pd():
    alg = duplicated(kronecker_quiver())
    M = embed_level(alg, alg.base_projective(2), 1)
    assert pd(M) == 2
    with pytest.raises(ValueError):
        bongartz_complete(M)


def test_fans_match_exhaustive_partner_sets(a2, a2_oracle):
    """Dropping any summand of any tilting module and walking the fan must
    recover exactly the partners seen across the whole oracle list."""
    partners = {}      # parts_key(rest) -> list of complements
    rests = {}
    for record in a2_oracle:
        parts = [X for X, _ in record.pieces]
        for drop in range(len(parts)):
            rest = parts[:drop] + parts[drop + 1:]
            key = Registry.parts_key(rest)
            partners.setdefault(key, []).append(parts[drop])
            rests[key] = rest
    assert partners
    for key, expected in partners.items():
        rest, _, _ = direct_sum(a2, rests[key])
        fan = complement_fan(rest, seed=expected[0])
        assert len(fan.complements) == len(expected)
        for X, _ in fan.complements:
            assert any(is_isomorphic(X, Y) for Y in expected)


def test_fan_pds_are_unimodal_bottom_up(a2, a2_oracle):
    seen = set()
    for record in a2_oracle:
        parts = [X for X, _ in record.pieces]
        for drop in range(len(parts)):
            rest = parts[:drop] + parts[drop + 1:]
            key = Registry.parts_key(rest)
            if key in seen:
                continue
            seen.add(key)
            T_bar, _, _ = direct_sum(a2, rest)
            fan = complement_fan(T_bar, seed=parts[drop])
            pds = fan.pds
            # the walk goes bottom-up, so pds never decrease
            assert pds == sorted(pds)


def test_complete_partial_tilting_with_candidates(a2):
    nodes = enumerate_indecomposables(a2)
    M = next(X for X in nodes if pd(X) == 2 and is_partial_tilting(X))
    record = complete_partial_tilting(M, candidates=nodes)
    assert any(is_isomorphic(X, M) for X, _ in record.pieces)
    assert len(record.pieces) == a2.delta


def test_complete_partial_tilting_needs_strategy():
    alg = duplicated(kronecker_quiver())
    M = embed_level(alg, alg.base_projective(2), 1)
    with pytest.raises(RuntimeError):
        complete_partial_tilting(M)


def test_classify_requires_duplicated_case():
    alg = ReplicatedAlgebra(linear_quiver(2), 2)
    parts = basic_summands(regular_module(alg))
    T_bar, _, _ = direct_sum(alg, parts[:-1])
    with pytest.raises(ValueError):
        classify_duplicated(T_bar)


@pytest.fixture(scope="module")
def d4_pd1():
    return d4_almost_complete_pd1()


@pytest.fixture(scope="module")
def d4_pd2():
    return d4_almost_complete_pd2()


def test_four_subspace_pd1_fan(d4_pd1):
    alg, T = d4_pd1
    assert pd(T) == 1
    assert is_faithful(T)
    fan = complement_fan(T)
    assert fan.pds == [1, 1, 2]
    grids = [str(X.dim_grid()) for X, _ in fan.complements]
    assert grids == ["L0{1:1,3:1,4:1,5:1}", "L0{2:1}", "L1{1:1,2:1}"]


def test_four_subspace_pd1_classifier(d4_pd1):
    alg, T = d4_pd1
    report = classify_duplicated(T)
    assert report["fan_size"] == 3
    assert not report["has_pd3_complement"]
    # four complements would require a projective envelope of the pd-2 one
    assert not report["pd2_envelope_projective"]
    assert report["level0_part_faithful"]


def test_four_subspace_pd2_fan(d4_pd2):
    alg, T = d4_pd2
    assert pd(T) == 2
    fan = complement_fan(T)
    assert fan.pds == [0, 1, 2, 3]
    X3 = fan.complements[-1][0]
    assert X3.dims(1, 1) == 5
    assert all(X3.dims(1, v) == 2 for v in (2, 3, 4, 5))
    assert all(X3.dims(0, v) == 0 for v in (1, 2, 3, 4, 5))


def test_four_subspace_pd2_envelope(d4_pd2):
    alg, T = d4_pd2
    fan = complement_fan(T)
    X2 = next(X for X, p in fan.complements if p == 2)
    E, _ = injective_envelope(X2)
    parts = decompose(E)
    assert len(parts) == 3
    assert all(is_isomorphic(q, injective(alg, 1, 1)) for q in parts)
    report = classify_duplicated(T)
    assert report["fan_size"] == 4
    assert report["has_pd3_complement"]
    assert not report["pd2_envelope_projective"]


def test_kronecker_fixture_fans():
    alg3, T3 = kronecker_almost_complete_pd3()
    assert pd(T3) == 3
    assert complement_fan(T3).pds == [1, 2, 3]
    alg1, T1 = kronecker_almost_complete_pd1()
    assert pd(T1) == 1
    fan1 = complement_fan(T1)
    assert fan1.pds == [1, 1, 2]
    alg2, T2 = kronecker_almost_complete_pd2()
    assert pd(T2) == 2
    fan2 = complement_fan(T2)
    assert fan2.pds == [1, 2, 2]
    # neither low-pd fixture admits a complement of maximal dimension
    assert 3 not in fan1.pds and 3 not in fan2.pds


def test_kronecker_pd3_complement_is_global_dimension_witness():
    alg, T = kronecker_almost_complete_pd3()
    fan = complement_fan(T)
    X3 = fan.complements[-1][0]
    assert pd(X3) == 3 == 2 * alg.m + 1
    assert is_isomorphic(X3, injective(alg, 1, 1))


def test_count_complements_matches_fan():
    alg, T = kronecker_almost_complete_pd2()
    assert count_complements(T) == 3
