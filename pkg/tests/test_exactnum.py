"""Exact quadratic-surd arithmetic."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gridrays.exactnum import (Surd, exact_ceil, exact_floor, exact_sign,
                               is_rational, sqrt_exact)


def test_sqrt_of_perfect_square_is_rational():
    assert sqrt_exact(4) == 2
    assert sqrt_exact(Fraction(9, 16)) == Fraction(3, 4)
    assert is_rational(sqrt_exact(Fraction(49, 25)))


def test_sqrt_two_is_irrational_surd():
    r = sqrt_exact(2)
    assert isinstance(r, Surd)
    assert not is_rational(r)
    assert r * r == 2


def test_square_factor_extraction():
    # sqrt(8) = 2 sqrt(2): the two objects must compare equal
    assert sqrt_exact(8) == 2 * sqrt_exact(2)
    assert sqrt_exact(Fraction(1, 2)) * sqrt_exact(2) == 1


def test_arithmetic_and_comparisons():
    r = sqrt_exact(2)
    assert 1 < r < Fraction(3, 2)
    assert (1 + r) * (1 - r) == -1  # conjugate product
    assert (1 / r) * 2 == r
    assert r + r == 2 * r
    assert exact_sign(r - Fraction(141421356, 100000000)) == 1
    assert exact_sign(r - Fraction(141421357, 100000000)) == -1


def test_floor_ceil_match_float_for_safe_values():
    for n in (2, 3, 5, 26, 99):
        r = sqrt_exact(n)
        assert exact_floor(r) == math.floor(math.sqrt(n))
        assert exact_ceil(r) == math.ceil(math.sqrt(n))
    assert exact_floor(-sqrt_exact(2)) == -2
    assert exact_ceil(-sqrt_exact(2)) == -1


def test_division_by_conjugate():
    r = sqrt_exact(5)
    x = (3 + r) / (3 - r)  # = (3+sqrt5)^2 / 4
    assert x * (3 - r) == 3 + r


@given(st.fractions(min_value=0, max_value=1000, max_denominator=1000))
def test_sqrt_squares_back(q):
    r = sqrt_exact(q)
    assert r * r == q
    assert exact_sign(r) == (1 if q > 0 else 0)


@given(st.integers(min_value=1, max_value=500), st.integers(-50, 50),
       st.integers(-50, 50))
def test_ordering_consistent_with_floats(n, a, b):
    r = sqrt_exact(n)
    x = a + b * r
    if isinstance(x, Surd):
        approx = a + b * math.sqrt(n)
        if abs(approx) > 1e-6:
            assert exact_sign(x) == (1 if approx > 0 else -1)
        assert exact_floor(x) <= approx < exact_floor(x) + 1


def test_rational_results_collapse_to_fraction():
    r = sqrt_exact(3)
    assert not isinstance(r - r, Surd)
    assert r - r == 0
    assert isinstance(r * r, (int, Fraction))


def test_invalid_sqrt():
    with pytest.raises(ValueError):
        sqrt_exact(-1)
