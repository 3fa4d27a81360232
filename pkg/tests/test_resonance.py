import random

import pytest

from cupring.linforms import LinFormMatrix
from cupring.polynomial import Polynomial
from cupring.resonance import (CupData, build_delta, change_of_basis, delta_times_x, membership,
                               nonvanishing_point, r1_is_proper, resonance_ideal)
from cupring.threefold import ThreeForm, cup_from_threeform
from oracles import gauss_rank, random_cupdata, random_invertible

x1, x2, x3 = Polynomial.variables(3)
Z3 = Polynomial.zero(3)
T3 = cup_from_threeform(ThreeForm(3, {(1, 2, 3): 1}))
GENUS2 = CupData(4, 1, {(1, 2, 1): 1, (3, 4, 1): 1})
HEISENBERG = CupData(2, 2)


def test_cupdata_antisymmetry_and_validation():
    assert GENUS2.lookup(1, 2, 1) == 1
    assert GENUS2.lookup(2, 1, 1) == -1
    assert GENUS2.lookup(3, 3, 1) == 0
    with pytest.raises(ValueError):
        CupData(2, 1, {(2, 1, 1): 1})
    with pytest.raises(ValueError):
        CupData(2, 1, {(1, 2, 2): 1})
    assert CupData(2, 1, {(1, 2, 1): 0}) == CupData(2, 1)


def test_build_delta_t3():
    # alternating extension of mu_123 = 1 expanded by hand
    assert build_delta(T3) == LinFormMatrix([[Z3, -x3, x2], [x3, Z3, -x1], [-x2, x1, Z3]], 3)


def test_build_delta_genus2():
    y = Polynomial.variables(4)
    assert build_delta(GENUS2) == LinFormMatrix([[-y[1], y[0], -y[3], y[2]]], 4)


def test_build_delta_heisenberg():
    d = build_delta(HEISENBERG)
    assert (d.rows, d.cols) == (2, 2)
    assert all(p.is_zero() for row in d.entries for p in row)


def test_delta_maps_y_to_cup_product():
    rng = random.Random(5)
    c = random_cupdata(rng, 4, 3)
    delta = build_delta(c)
    for _ in range(10):
        x = [rng.randint(-3, 3) for _ in range(4)]
        y = [rng.randint(-3, 3) for _ in range(4)]
        at = [[p.evaluate(x) for p in row] for row in delta.entries]
        prod = tuple(sum(a * b for a, b in zip(row, y)) for row in at)
        assert prod == c.cup(x, y)


def test_resonance_t3():
    rep = resonance_ideal(T3, 1)
    assert not rep.full_space
    assert {x1 ** 2, x2 ** 2, x3 ** 2} <= set(rep.ideal.generators)
    assert x1 * x2 in {-g for g in rep.ideal.generators}
    assert rep.witness == x3 ** 2


def test_resonance_genus2_zero_ideal():
    rep = resonance_ideal(GENUS2, 1)
    assert rep.full_space and rep.ideal.generators == () and rep.witness is None


def test_resonance_heisenberg():
    rep = resonance_ideal(HEISENBERG, 1)
    assert rep.full_space
    assert len(rep.ideal.generators) == 4
    assert all(g.is_zero() for g in rep.ideal.generators)


def test_depth_range():
    with pytest.raises(ValueError):
        resonance_ideal(T3, 0)
    with pytest.raises(ValueError):
        resonance_ideal(T3, 3)
    with pytest.raises(ValueError):
        membership(T3, 3, [0, 0, 0])


def test_membership_examples():
    assert not membership(T3, 1, [1, 0, 0])  # rank 2 > 1
    assert membership(T3, 1, [0, 0, 0])
    assert membership(T3, 2, [0, 0, 0])
    assert membership(GENUS2, 1, [1, 1, 1, 1])  # [-1, 1, -1, 1] has rank 1
    with pytest.raises(ValueError):
        membership(GENUS2, 1, [1, 1])


@pytest.mark.parametrize("seed", range(10))
def test_origin_always_in_r1(seed):
    c = random_cupdata(random.Random(seed), random.Random(seed).randint(2, 5), 3)
    assert membership(c, 1, [0] * c.n)


def test_r1_is_proper_examples():
    res = r1_is_proper(T3)
    assert res.proper
    assert res.witness in {x1 ** 2, x2 ** 2, x3 ** 2, x1 * x2, -x1 * x2, x1 * x3, -x1 * x3,
                           x2 * x3, -x2 * x3}
    assert not r1_is_proper(HEISENBERG).proper
    assert not r1_is_proper(GENUS2).proper


def test_r1_is_proper_line():
    c = CupData(1, 1)
    res = r1_is_proper(c)
    assert res.proper and res.witness == Polynomial.constant(1, 1)


def test_r1_exhaustive_fallback_finds_point():
    # with zero sampling trials the exhaustive path must still certify
    res = r1_is_proper(T3, trials=0)
    assert res.proper and res.method == "exhaustive"
    assert res.witness.evaluate(res.point) != 0


@pytest.mark.parametrize("seed", range(30))
def test_r1_is_proper_agrees_with_ideal(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    c = random_cupdata(rng, n, rng.randint(0, 5), bound=2, density=rng.choice([0.2, 0.5, 1.0]))
    res = r1_is_proper(c)
    assert res.proper == (not resonance_ideal(c, 1).full_space)
    if res.proper:
        assert not res.witness.is_zero()
        assert res.witness.evaluate(res.point) != 0
        assert res.witness in set(resonance_ideal(c, 1).ideal.generators)


@pytest.mark.parametrize("seed", range(20))
def test_delta_x_identity(seed):
    rng = random.Random(seed)
    c = random_cupdata(rng, rng.randint(1, 6), rng.randint(0, 6))
    assert all(p.is_zero() for p in delta_times_x(c))


@pytest.mark.parametrize("seed", range(10))
def test_full_space_means_every_point_is_in_r1(seed):
    rng = random.Random(seed)
    # m < n - 1 forces the zero ideal
    c = random_cupdata(rng, 5, rng.randint(0, 3))
    assert resonance_ideal(c, 1).full_space
    for _ in range(100):
        assert membership(c, 1, [rng.randint(-50, 50) for _ in range(5)])


def test_nonvanishing_point():
    p = x1 * x2 * (x1 - x3)
    pt = nonvanishing_point(p)
    assert p.evaluate(pt) != 0
    with pytest.raises(ValueError):
        nonvanishing_point(Z3)


@pytest.mark.parametrize("seed", range(5))
def test_change_of_basis_preserves_rank_profile(seed):
    rng = random.Random(seed)
    c = random_cupdata(rng, 4, 3, bound=2, density=0.4)
    p = random_invertible(rng, 4)
    q = random_invertible(rng, 3)
    c2 = change_of_basis(c, p, q)
    assert r1_is_proper(c).proper == r1_is_proper(c2).proper
    # generic rank of the matrix of linear forms is basis independent
    pt = [rng.randint(-100, 100) for _ in range(4)]
    r1 = gauss_rank([[e.evaluate(pt) for e in row] for row in build_delta(c).entries])
    pt2 = [rng.randint(-100, 100) for _ in range(4)]
    r2 = gauss_rank([[e.evaluate(pt2) for e in row] for row in build_delta(c2).entries])
    assert r1 == r2
