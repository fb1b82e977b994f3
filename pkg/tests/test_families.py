from fractions import Fraction

import mpmath
import pytest

from src.families import (
    CharlierFamily,
    charlier_duality_check,
    charlier_from_recurrence,
    charlier_poly,
    decreasing_deviations,
    hermite_from_recurrence,
    hermite_limit_check,
    hermite_poly,
    hermite_relations,
    verify_charlier_relations,
)
from src.fsets import FiniteSet
from src.polycore import Poly

A_VALUES = (1, Fraction(1, 2), 3, -2)
LADDER = (100, 10 ** 4, 10 ** 6)
POINTS = (0, Fraction(1, 2), 1)


def test_low_degree_values():
    assert charlier_poly(1, 0) == Poly.one()
    assert charlier_poly(2, 1) == Poly((-2, 1))
    # c_2^a = ((x−1−a)(x−a) − a)/2
    a = Fraction(3)
    x = Poly.x()
    assert charlier_poly(a, 2) == ((x - 1 - a) * (x - a) - Poly.constant(a)) / 2
    assert hermite_poly(2) == Poly((-2, 0, 4))
    assert hermite_poly(3) == Poly((0, -12, 0, 8))
    assert charlier_poly(1, -1).is_zero() and hermite_poly(-1).is_zero()


def test_explicit_sum_matches_recurrence():
    for a in A_VALUES:
        assert [charlier_poly(a, n) for n in range(9)] == charlier_from_recurrence(a, 8)
    assert [hermite_poly(n) for n in range(9)] == hermite_from_recurrence(8)


def test_charlier_relations():
    for a in A_VALUES:
        rep = verify_charlier_relations(a, 6)
        assert rep.passed, rep.first_failure


def test_charlier_duality_grid():
    for a in (1, Fraction(1, 2)):
        rep = charlier_duality_check(a, 11, 11)
        assert rep.passed and rep.checks == 144


def test_hermite_relations():
    rep = hermite_relations(8)
    assert rep.passed, rep.first_failure


def test_zero_parameter_rejected():
    with pytest.raises(ValueError):
        CharlierFamily(0)


def test_limit_to_hermite_classical():
    for n in range(4):
        rep = hermite_limit_check(n, LADDER, POINTS)
        assert rep.passed, rep.notes["deviations"]


def test_limit_to_hermite_exceptional():
    rep = hermite_limit_check(FiniteSet.of(1, 2), LADDER, POINTS, n=3)
    assert rep.passed, rep.notes["deviations"]
    with pytest.raises(ValueError):
        hermite_limit_check(FiniteSet.of(1, 2), LADDER, POINTS, n=1)


def test_limit_ladder_must_increase():
    with pytest.raises(ValueError):
        hermite_limit_check(1, (100, 10), POINTS)


def test_decreasing_deviations_ignores_rounding_floor():
    assert decreasing_deviations([mpmath.mpf(1), mpmath.mpf("0.1"), mpmath.mpf("0.01")], 256)
    assert not decreasing_deviations([mpmath.mpf("0.1"), mpmath.mpf(1)], 256)
    assert decreasing_deviations([mpmath.mpf(0), mpmath.mpf(0)], 256)
