import pytest

from repclus import Diagonal, DiagonalSet, PolygonParams
from repclus.enumeration import CapExceeded
from repclus.oracles import (
    crossing_oracle,
    default_grid,
    geometric_crosses,
    literal_right_perp,
    perp_oracle,
    run_oracles,
    theorem_oracle,
)

D = Diagonal


@pytest.mark.parametrize("n,p", [(1, 1), (2, 2), (3, 3), (4, 2)])
def test_crossing(n, p):
    rep = crossing_oracle(PolygonParams(n, p))
    assert rep.ok and rep.instances == PolygonParams(n, p).total ** 2


def test_geometry():
    assert geometric_crosses(D(1, 3, 1), D(2, 4, 1), 4)
    assert not geometric_crosses(D(1, 3, 1), D(1, 4, 1), 6)
    assert not geometric_crosses(D(1, 3, 1), D(4, 6, 1), 6)


def test_perp_exhaustive_and_sampled():
    rep = perp_oracle(PolygonParams(2, 2))
    assert rep.ok and rep.instances == 1024 and rep.seed is None
    rep = perp_oracle(PolygonParams(3, 3), sample=50)
    assert rep.ok and rep.instances == 27 + 50 and rep.to_json()["seed"] == rep.seed
    assert perp_oracle(PolygonParams(3, 3), sample=50).to_json() == rep.to_json()


def test_p1_divergence_documented():
    P = PolygonParams(1, 1)
    s = DiagonalSet.from_triples(P, [(1, 3, 1)])
    assert literal_right_perp(list(s), P) == {D(1, 3, 1), D(2, 4, 1)}
    rep = perp_oracle(P)
    assert rep.ok and rep.documented
    assert {"set": ["1,3,1"]}.items() <= next(d for d in rep.documented if d["set"] == ["1,3,1"]).items()
    assert rep.to_json()["documented_divergences"] == len(rep.documented)


@pytest.mark.parametrize("n,p", [(1, 1), (2, 2), (3, 2)])
def test_theorem(n, p):
    rep = theorem_oracle(PolygonParams(n, p))
    assert rep.ok and rep.instances == 1 << PolygonParams(n, p).total


def test_theorem_cap():
    with pytest.raises(CapExceeded):
        theorem_oracle(PolygonParams(3, 3), cap_bits=20)


def test_grid():
    grid = default_grid(18)
    pairs = {(P.n, P.p) for P in grid}
    assert {(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 2)} <= pairs
    assert all(P.total <= 18 for P in grid)


def test_wider_grid_crossing_and_perp():
    # n <= 3, p <= 3; sampled perps where exhaustive is out of reach
    grid = [PolygonParams(n, p) for n in (1, 2, 3) for p in (1, 2, 3)]
    for rep in run_oracles(["crossing", "perp"], grid):
        assert rep.ok, rep.to_json()
