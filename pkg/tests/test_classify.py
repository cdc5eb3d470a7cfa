import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import params_and_set, params_st
from repclus import (
    DiagonalSet,
    NotPtolemyError,
    TorsionPair,
    PolygonParams,
    classify,
    hom_nonzero,
    hom_right_perp,
    is_cluster_tilting,
    is_maximal_rigid,
    is_ptolemy,
    is_rigid,
    ptolemy_closure,
    torsion_pair_of,
)
from repclus.classify import is_cluster_tilting_structural

P34 = PolygonParams(3, 4)
X = DiagonalSet.from_triples(P34, [(1, 3, 1), (2, 4, 3)])
Y = DiagonalSet.from_triples(P34, [(i, j, k) for k in range(1, 5) for (i, j) in ((1, 3), (1, 4), (1, 5))])


def test_fan_example():
    assert is_rigid(X) and not is_maximal_rigid(X) and not is_cluster_tilting(X)
    assert len(Y) == 12 and is_cluster_tilting(Y) and is_maximal_rigid(Y)
    rep = classify(Y)
    assert rep.to_json() == {"rigid": True, "maximal_rigid": True, "cluster_tilting": True, "ptolemy": True, "size": 12}


def test_small_examples():
    P11, P12 = PolygonParams(1, 1), PolygonParams(1, 2)
    assert not is_rigid(DiagonalSet.from_triples(P11, [(1, 3, 1), (2, 4, 1)]))
    assert is_maximal_rigid(DiagonalSet.from_triples(P11, [(1, 3, 1)]))
    assert is_cluster_tilting(DiagonalSet.from_triples(P12, [(1, 3, 1), (1, 3, 2)]))


@given(params_st())
def test_empty_set(P):
    e = DiagonalSet.empty(P)
    assert is_rigid(e) and not is_cluster_tilting(e)
    assert all(is_rigid(DiagonalSet.of(P, [d])) for d in DiagonalSet.full(P))


@given(st.data())
def test_hierarchy(data):
    P, s = data.draw(params_and_set(3, 3))
    r = classify(s)
    if r.cluster_tilting:
        assert r.maximal_rigid and r.size == P.p * P.n
    if r.maximal_rigid:
        assert r.rigid
    assert is_cluster_tilting_structural(s) == r.cluster_tilting


def test_torsion_pair_examples():
    P11 = PolygonParams(1, 1)
    tp = torsion_pair_of(DiagonalSet.from_triples(P11, [(2, 4, 1)]))
    assert tp.to_json() == {"torsion": [[2, 4, 1]], "free": [[1, 3, 1]]}
    for P in (P11, P34):
        e, f = DiagonalSet.empty(P), DiagonalSet.full(P)
        assert torsion_pair_of(e) == TorsionPair(e, f)
        assert torsion_pair_of(f) == TorsionPair(f, e)


def test_torsion_pair_rejects_non_ptolemy():
    P = PolygonParams(3, 3)
    s = DiagonalSet.from_triples(P, [(2, 5, 1), (4, 6, 3)])
    with pytest.raises(NotPtolemyError) as info:
        torsion_pair_of(s)
    assert info.value.violations and info.value.set == s


@given(st.data())
def test_torsion_pair_hom_orthogonal(data):
    P, s = data.draw(params_and_set(3, 3))
    tp = torsion_pair_of(ptolemy_closure(s))
    assert is_ptolemy(tp.torsion) and tp.free == hom_right_perp(tp.torsion)
    assert not any(hom_nonzero(x, y, P) for x in tp.torsion for y in tp.free)
