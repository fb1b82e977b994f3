from fractions import Fraction

import mpmath
import pytest

from src.scalars import DualRational, GaussRational, to_mpf, to_rational


def test_to_rational():
    assert to_rational(" -3/6 ") == Fraction(-1, 2)
    assert to_rational("1e-3") == Fraction(1, 1000)
    with pytest.raises(TypeError):
        to_rational(0.5)


def test_gauss_rational_arithmetic():
    i = GaussRational.i()
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2
    assert (1 / i) == -i
    assert (i ** 3).is_real() is False
    with pytest.raises(ZeroDivisionError):
        i / GaussRational(0, 0)


def test_dual_rational_derivative():
    a = DualRational.variable(Fraction(3, 2))
    f = a * a * a - a * 2 + 1 / a
    # f'(a) = 3a² − 2 − 1/a²
    assert f.value == Fraction(27, 8) - 3 + Fraction(2, 3)
    assert f.derivative == Fraction(27, 4) - 2 - Fraction(4, 9)
    assert (a ** 4).derivative == 4 * Fraction(27, 8)
    with pytest.raises(ZeroDivisionError):
        a / DualRational(0, 1)


def test_to_mpf_uses_working_precision():
    with mpmath.workprec(200):
        third = to_mpf(Fraction(1, 3))
        assert abs(third * 3 - 1) < mpmath.mpf(2) ** -190
