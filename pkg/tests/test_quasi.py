"""Quasi-isometry certificates: floor map, inclusion, generating sets."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gridrays.lattice import GeneratingSet, standard_generators
from gridrays.quasi import (FloorMap, GensetMap, InclusionMap, QIParams,
                            check_embedding, find_violation,
                            floor_chain_holds, floor_map, lattice_ball,
                            quasi_surjectivity_bound, roundtrip_displacement,
                            sample_plane_pairs, sample_plane_points,
                            sq_euclidean)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=64)


def test_floor_map_basic():
    assert floor_map((Fraction(3, 2), Fraction(-1, 2))) == (1, -1)
    assert floor_map((Fraction(2), Fraction(2))) == (2, 2)
    assert floor_map((Fraction(-1, 4), Fraction(0))) == (-1, 0)


@given(fracs, fracs)
def test_one_dimensional_floor_bound(x, y):
    # |floor x - floor y| <= |x - y| + 1, the engine of the (2,2) certificate
    assert abs(math.floor(x) - math.floor(y)) <= abs(x - y) + 1


@given(fracs, fracs, fracs, fracs)
def test_floor_chain_holds_everywhere(a, b, c, d):
    assert floor_chain_holds((a, b), (c, d))


def test_floor_map_2_2_certificate():
    pairs = sample_plane_pairs((Fraction(-100), Fraction(100)), 2000, seed=5)
    report = check_embedding(FloorMap(), QIParams.from_k(2, 2), pairs)
    assert report.ok and report.pairs_checked == 2000


def test_floor_map_k1_c0_fails():
    # the identity constants are impossible: (0,0) vs (1/2, 1/2)
    v = FloorMap().check_pair((Fraction(0), Fraction(0)),
                              (Fraction(1, 2), Fraction(3, 2)),
                              QIParams.from_k(1, 0))
    assert v and v[0].side == "lower"


def test_best_constant_violation_at_100():
    # [DERIVED] 2n > (7/5) n sqrt(2) + 2 first holds at n = 100
    v = find_violation(FloorMap(), QIParams.from_k(Fraction(7, 5), 2),
                       "diagonal-ray", 1000)
    assert v is not None
    assert v.pair[1] == (100, 100)
    assert v.side == "upper"
    assert find_violation(FloorMap(), QIParams.from_k(2, 2),
                          "diagonal-ray", 1000) is None


def test_sqrt2_constants_hold_on_diagonal():
    params = QIParams.from_k_squared(2, 2)  # k = sqrt(2) exactly
    assert find_violation(FloorMap(), params, "diagonal-ray", 500) is None
    assert find_violation(InclusionMap(), params, "diagonal-ray", 500) is None


def test_inclusion_exact_boundary():
    # on the diagonal the inclusion meets k = sqrt(2) with c = 0 exactly
    params = QIParams.from_k_squared(2, 0)
    ball = lattice_ball(6)
    report = check_embedding(InclusionMap(), params,
                             [(a, b) for a in ball[:40] for b in ball[:40]])
    assert report.ok
    # anything smaller than sqrt(2) fails on the diagonal
    v = InclusionMap().check_pair((0, 0), (5, 5), QIParams.from_k(Fraction(7, 5), 0))
    assert v


def test_grid_and_random_strategies():
    bad = QIParams.from_k(1, 0)
    assert find_violation(FloorMap(), bad, "grid", 2000) is not None
    assert find_violation(FloorMap(), bad, "random", 200, seed=3) is not None
    with pytest.raises(ValueError):
        find_violation(FloorMap(), bad, "sideways", 10)


def test_roundtrip_displacement():
    samples = sample_plane_points((Fraction(-50), Fraction(50)), 3000, seed=9)
    report = roundtrip_displacement(samples)
    assert report.max_sq_displacement < 2
    # crafted point close to the open corner: displacement^2 = 2*(19/20)^2
    crafted = roundtrip_displacement([(Fraction(19, 20), Fraction(19, 20))])
    assert crafted.max_sq_displacement == Fraction(361, 200)
    assert crafted.max_sq_displacement > Fraction(9, 5)


def test_surjectivity_bounds():
    targets = sample_plane_points((Fraction(-20), Fraction(20)), 200, seed=2)
    rep = quasi_surjectivity_bound(InclusionMap(), targets)
    assert rep.bound == 1
    assert rep.max_sq_distance <= Fraction(1, 2)
    rep2 = quasi_surjectivity_bound(FloorMap(), [(3, -2), (0, 0)])
    assert rep2.bound == 1


def test_genset_map_certificate():
    S = standard_generators()
    S2 = GeneratingSet([(1, 0), (1, 1)])
    gm = GensetMap(S, S2, radius_cap=40)
    pts = lattice_ball(5)
    pairs = [(a, b) for a in pts for b in pts]
    report = check_embedding(gm, QIParams.from_k(2, 0), pairs)
    assert report.ok


def test_sampling_is_deterministic():
    a = sample_plane_points((Fraction(-10), Fraction(10)), 50, seed=4)
    b = sample_plane_points((Fraction(-10), Fraction(10)), 50, seed=4)
    assert a == b
    assert a != sample_plane_points((Fraction(-10), Fraction(10)), 50, seed=5)


def test_sq_euclidean():
    assert sq_euclidean((Fraction(0), Fraction(0)),
                        (Fraction(3), Fraction(4))) == 25
