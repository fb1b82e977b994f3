from fractions import Fraction

import mpmath
import pytest

from src.errors import PreconditionError, ToleranceError
from src.exceptional import hermite_exceptional
from src.families import charlier_poly
from src.fsets import EMPTY, FiniteSet, all_sets, set_indices
from src.measures import (
    ContinuousWeight,
    charlier_measure,
    charlier_norm,
    charlier_norm_check,
    christoffel_alt_check,
    christoffel_q,
    continuous_inner,
    discrete_inner,
    duality_checks,
    exceptional_measure,
    hermite_norm,
    hermite_norm_check,
    hermite_weight,
    largest_integer_zero,
    orthogonality_check,
    parseval_partial_sums,
    phi,
    positivity_report,
    positivity_scan,
    psi,
    q_norm_check,
    q_recurrence_check,
)
from src.polycore import Poly


def F(*xs):
    return FiniteSet.of(*xs)


def test_classical_charlier_norm():
    rep = charlier_norm_check(EMPTY, 1, range(5))
    assert rep.passed, rep.first_failure
    assert len(rep.notes["table"]) == 5


def test_discrete_inner_contains_closed_form():
    c2 = charlier_poly(2, 2)
    with mpmath.workprec(200):
        res = discrete_inner(c2, c2, charlier_measure(2), precision=200)
        # a^n e^a / n!
        assert res.contains(4 * mpmath.e ** 2 / 2)
        assert res.error_bound < mpmath.mpf(10) ** -15


def test_exceptional_charlier_norms_and_orthogonality():
    S = F(1, 2)
    assert charlier_norm_check(S, 1, [0, 3, 4]).passed
    assert orthogonality_check(S, 1, [0, 3, 4]).passed
    assert q_norm_check(S, 1, range(3)).passed


@pytest.mark.parametrize("S,a", [(F(2, 3), 2), (F(1, 2), 2)])
def test_charlier_norm_acceptance_small(S, a):
    first = set_indices(S).first(4)
    rep = charlier_norm_check(S, a, first, tol=Fraction(1, 10 ** 20))
    assert rep.passed, rep.first_failure
    for row in rep.notes["table"]:
        assert row["error_bound"] / abs(row["expected"]) < mpmath.mpf(10) ** -20


@pytest.mark.slow
@pytest.mark.parametrize("S", [F(1, 2), F(1, 2, 3, 4), F(2, 3)])
@pytest.mark.parametrize("a", [1, 2])
def test_charlier_norm_acceptance(S, a):
    rep = charlier_norm_check(S, a, set_indices(S).first(4), tol=Fraction(1, 10 ** 20))
    assert rep.passed, (S, a, rep.first_failure)


@pytest.mark.slow
@pytest.mark.parametrize("S", [F(1, 2), F(1, 2, 3, 4)])
def test_hermite_norm_acceptance(S):
    rep = hermite_norm_check(S, set_indices(S).first(4), tol=Fraction(1, 10 ** 12))
    assert rep.passed, (S, rep.first_failure)


def test_hermite_norm_bound_is_labelled_estimate():
    S = F(1, 2, 3, 4)
    n = set_indices(S).first(1)[0]
    h = hermite_exceptional(n, S)
    with mpmath.workprec(128):
        res = continuous_inner(h, h, hermite_weight(S), precision=128)
        expected = hermite_norm(n, S)
        assert res.contains(expected, abs(expected) * mpmath.ldexp(1, -120))
    assert res.notes["quad_error_kind"] == "estimate"
    assert res.notes["tail_bound"] <= res.error_bound


def test_hermite_norms_and_orthogonality():
    S = F(1, 2)
    assert hermite_norm_check(S, [0, 3], precision=128).passed
    assert orthogonality_check(S, None, [0, 3], precision=128).passed


def test_measures_reject_integer_or_real_zeros():
    with pytest.raises(PreconditionError) as exc:
        exceptional_measure(F(1), 1)
    assert exc.value.witness == 1
    with pytest.raises(PreconditionError):
        hermite_weight(F(1))
    with pytest.raises(ValueError):
        ContinuousWeight(den=Poly.zero())


def test_tolerance_errors():
    c0 = charlier_poly(1, 0)
    with pytest.raises(ToleranceError):
        discrete_inner(c0, c0, charlier_measure(1), precision=64, tol=Fraction(1, 10 ** 30))
    with pytest.raises(ToleranceError):
        discrete_inner(c0, c0, charlier_measure(1), max_terms=2)


def test_christoffel_q_basics():
    for n in range(5):
        assert christoffel_q(n, EMPTY, 3) == charlier_poly(3, n)
        assert christoffel_q(n, F(1, 2), 1).degree == n
    assert phi(3, EMPTY, 1) == 1
    assert psi(3, EMPTY, 1) == 0


def test_duality_and_recurrence():
    for S in (F(1), F(1, 2), F(2, 3)):
        for a in (1, Fraction(1, 2)):
            rep = duality_checks(S, a, umax=5)
            assert rep.passed, (S, a, rep.first_failure)
            assert q_recurrence_check(S, a, range(8)).passed, (S, a)


def test_q_recurrence_skips_small_n_when_omega_vanishes():
    assert largest_integer_zero(F(1), 1) == 1
    rep = q_recurrence_check(F(1), 1, range(5))
    assert rep.notes["outside_regime"] == [0, 1, 2]
    assert rep.passed


def test_christoffel_alt_form():
    assert christoffel_alt_check(F(1, 2), 1).passed
    skipped = christoffel_alt_check(F(1), 1)
    assert "skipped" in skipped.notes and skipped.checks == 0


def test_positivity_verdicts():
    v = positivity_scan(F(1), 1)
    assert not v.admissible and v.measure == "undefined" and v.equivalent
    v = positivity_scan(F(1, 2), 1)
    assert v.admissible and v.measure == "positive" and v.equivalent
    with pytest.raises(ValueError):
        positivity_scan(F(1, 2), -1)


def test_positivity_small_range():
    rep = positivity_report(all_sets(5), Fraction(1, 2))
    assert rep.passed, rep.first_failure
    assert sum(rep.notes["measures"].values()) == 31


@pytest.mark.slow
def test_positivity_full_range():
    for a in (Fraction(1, 2), 1, 3):
        assert positivity_report(all_sets(8), a).passed, a


def test_parseval_partial_sums():
    res = parseval_partial_sums(F(1, 2), 1, 0, count=15)
    assert res.monotone and res.bounded
    assert len(res.sums) == 15
    assert charlier_norm(3, F(1, 2), 1) > 0
