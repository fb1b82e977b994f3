from fractions import Fraction

import pytest

from src.exceptional import (
    beta_constant,
    casorati_polys,
    charlier_alt_check,
    charlier_exceptional,
    charlier_exceptional_alt,
    hermite_alt_check,
    hermite_alt_variant_probe,
    hermite_exceptional,
    hermite_omega,
    index_identity_check,
    invariance_check,
    lambda_dual_check,
    norm_constants,
    omega_limit_check,
    sigma_window,
    structure_check,
)
from src.families import charlier_poly, hermite_poly
from src.fsets import EMPTY, FiniteSet, all_sets, is_admissible
from src.polycore import Poly

A_VALUES = (1, Fraction(1, 2), -2)


def F(*xs):
    return FiniteSet.of(*xs)


def test_hermite_omega_for_one_two():
    assert hermite_omega(F(1, 2)) == Poly((4, 0, 8))


def test_charlier_omega_for_one_two():
    half = Fraction(1, 2)
    assert casorati_polys(F(1, 2), 1).omega == Poly((half, -half, half))


def test_empty_set_conventions():
    data = casorati_polys(EMPTY, 1)
    assert data.omega == Poly.one() and data.lambda_.is_zero()
    assert data.omega_tilde == Poly.one() and data.lambda_tilde.is_zero()
    for n in range(5):
        assert charlier_exceptional(n, EMPTY, 3) == charlier_poly(3, n)
        assert hermite_exceptional(n, EMPTY) == hermite_poly(n)


def test_structure_small_sets():
    for S in all_sets(4):
        for a in A_VALUES:
            rep = structure_check(S, a, extra=4)
            assert rep.passed, (S, a, rep.first_failure)


def test_invariance_small_sets():
    for S in all_sets(5):
        assert invariance_check(S).passed, S
        for a in (1, 2, -1):
            assert invariance_check(S, a).passed, (S, a)


@pytest.mark.slow
def test_invariance_acceptance_range():
    for S in all_sets(7):
        assert invariance_check(S).passed, S
        for a in (1, 2, -1):
            assert invariance_check(S, a).passed, (S, a)


def test_lambda_is_minus_derivative_in_a():
    for S in (F(1), F(1, 2), F(2, 3), F(1, 3, 4)):
        for a in A_VALUES:
            assert lambda_dual_check(S, a).passed, (S, a)


def test_index_identities():
    for S in all_sets(5):
        rep = index_identity_check(S, 1)
        assert rep.passed, (S, rep.first_failure)


def test_alt_forms_above_v():
    for S in all_sets(4):
        above = sigma_window(S, below=False)
        for a in A_VALUES:
            assert charlier_alt_check(S, a, above).passed, (S, a)
        rep = hermite_alt_check(S, above)
        assert rep.passed, (S, rep.first_failure)


@pytest.mark.slow
def test_alt_forms_acceptance_range():
    for S in all_sets(6):
        above = sigma_window(S, below=False, extra=5)
        for a in (1, Fraction(1, 2), 3, -2):
            assert charlier_alt_check(S, a, above).passed, (S, a)
        assert hermite_alt_check(S, above).passed, S


def test_alt_form_undefined_below_v():
    S = F(2, 3)
    assert sigma_window(S, below=True) == [2, 3]
    assert sigma_window(S, below=False, extra=2) == [6, 7, 8]
    with pytest.raises(ValueError):
        charlier_exceptional_alt(2, S, 1)
    with pytest.raises(ValueError):
        beta_constant(2, S, 1)
    rep = charlier_alt_check(S, 1, [2], kind="evidence")
    assert rep.notes["undefined_below_v"] == [2]
    assert rep.checks == 0


def test_alt_form_explicit_value():
    S = F(2, 3)
    assert charlier_exceptional_alt(6, S, 1) == charlier_exceptional(6, S, 1)
    assert charlier_exceptional_alt(7, S, Fraction(1, 2)) == charlier_exceptional(7, S, Fraction(1, 2))


def test_hermite_alt_variant_choice():
    for S in (F(1), F(1, 2), F(2, 3)):
        n = sigma_window(S, below=False)[0]
        assert hermite_alt_variant_probe(n, S)["ascending"]
    rep = hermite_alt_check(F(1, 2), sigma_window(F(1, 2), below=False))
    assert rep.notes["variant_matches"]["ascending"] == rep.checks


def test_hermite_alt_below_v_is_evidence():
    S = F(1, 2)
    rep = hermite_alt_check(S, sigma_window(S, below=True), kind="evidence")
    assert rep.kind == "evidence"
    assert rep.notes["undefined_below_v"] == [0]
    assert rep.checks == 0
    # F = {2}: v_F = 4, m = 2; n = 1 tem primeira linha nula, n = 2 não
    rep = hermite_alt_check(F(2), sigma_window(F(2), below=True), kind="evidence")
    assert rep.notes["undefined_below_v"] == [1]
    assert rep.checks == 1


def test_norm_constants():
    nc = norm_constants(3, F(1, 2), 1)
    assert nc.nu_F == 16
    assert nc.beta_n is not None and nc.gamma_n is not None
    assert norm_constants(0, F(1, 2), 1).beta_n is None


def test_omega_limit():
    for S in (F(1, 2), F(2, 3)):
        rep = omega_limit_check(S, (100, 10 ** 4, 10 ** 6), (0, Fraction(1, 2), 1))
        assert rep.passed, rep.notes["deviations"]


def test_admissible_charlier_omega_has_no_integer_zero():
    for S in all_sets(5):
        if is_admissible(S).admissible:
            omega = casorati_polys(S, 1).omega
            assert all(omega(n) != 0 for n in range(0, 20)), S
