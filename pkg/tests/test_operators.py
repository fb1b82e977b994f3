import pytest

from src.errors import NotPolynomialError, PreconditionError
from src.families import hermite_poly
from src import operators
from src.exceptional import hermite_exceptional
from src.fsets import EMPTY, FiniteSet, all_sets, down, is_admissible, set_indices
from src.operators import (
    DiffeOp,
    DiffOp,
    apply_op,
    build_charlier_op,
    build_hermite_op,
    charlier_down_precondition,
    classical_operator,
    darboux_chain,
    darboux_down,
    darboux_split,
    factor_left,
    factor_right,
    hermite_classical_check,
    hermite_down_constant,
    symmetry_pearson_check,
    verify_eigen,
)
from src.polycore import Poly, RationalFunction

X = Poly.x()


def F(*xs):
    return FiniteSet.of(*xs)


def _ns(S):
    return range(0, set_indices(S).v + 4)


def test_classical_operators():
    assert classical_operator(2) == DiffOp.of({-1: -X, 0: X + 2, 1: -2})
    assert classical_operator() == DiffeOp.of({2: -1, 1: X * 2})
    assert build_charlier_op(EMPTY, 2).forms_agree


def test_hermite_classical_eigen():
    assert hermite_classical_check(8).passed


def test_eigen_charlier_small_sets():
    for S in all_sets(4):
        for a in (1, 3):
            rep = verify_eigen(S, a, _ns(S))
            assert rep.passed, (S, a, rep.first_failure)


def test_eigen_hermite_small_sets():
    for S in all_sets(4):
        rep = verify_eigen(S, None, _ns(S))
        assert rep.passed, (S, rep.first_failure)


@pytest.mark.slow
def test_eigen_acceptance_range():
    for S in all_sets(6):
        assert verify_eigen(S, None, _ns(S)).passed, S
        assert verify_eigen(S, 2, _ns(S)).passed, S


def test_eigen_vacuous_outside_sigma():
    S = F(1, 2)
    rep = verify_eigen(S, 1, [1, 2, 3])
    assert rep.passed
    assert rep.vacuous == 2


def test_charlier_operator_two_forms_agree():
    for S in (F(1), F(1, 2), F(2, 3), F(1, 2, 4)):
        assert build_charlier_op(S, 1).forms_agree, S


def test_factor_right_and_left():
    A = DiffOp.of({0: X + 1, 1: 2})
    B = DiffOp.of({-1: -X, 0: 1})
    fr = factor_right(B @ A, A)
    assert fr.consistent and fr.op == B
    fl = factor_left(A @ B, B)
    assert fl.consistent and fl.op == A


def test_apply_op_rejects_rational_image():
    op = DiffeOp.of({0: RationalFunction(Poly.one()) / RationalFunction(X)})
    with pytest.raises(NotPolynomialError):
        apply_op(op, Poly.one())
    assert apply_op(build_hermite_op(EMPTY), hermite_poly(3)) == hermite_poly(3) * 6


def test_darboux_split_and_chain():
    for S in (F(1), F(1, 2), F(2, 3), F(1, 3, 4)):
        for a in (1, None):
            split = darboux_split(S, a)
            assert split.report.passed, (S, a, split.report.first_failure)
            assert set(split.signs) == {"lower_equals_BA", "upper_equals_AB"}
            assert darboux_chain(S, a).passed, (S, a)


def test_darboux_split_needs_nonempty_set():
    with pytest.raises(ValueError):
        darboux_split(EMPTY, 1)


def test_down_precondition_reports_integer_zero():
    # Ω_{1}^{1} = x − 1
    with pytest.raises(PreconditionError) as exc:
        charlier_down_precondition(F(1), 1)
    assert exc.value.witness == 1
    with pytest.raises(PreconditionError):
        darboux_down(F(1), 1)


def test_darboux_down_admissible():
    for S in (F(1, 2), F(1, 2, 3, 4)):
        assert is_admissible(S).admissible
        for a in (1, None):
            res = darboux_down(S, a)
            assert res.report.passed, (S, a, res.report.first_failure)
            assert res.evidence.kind == "evidence"
            assert set(res.ops) == {"C", "E"}


def test_darboux_down_non_admissible_is_asserted():
    for S in (F(2), F(1, 2, 3), F(1, 3, 4)):
        assert not is_admissible(S).admissible
        for a in (1, None):
            res = darboux_down(S, a)
            assert res.report.kind == "assert"
            assert res.report.passed, (S, a, res.report.first_failure)


def test_hermite_down_constant_matches_intertwining():
    for S in (F(2, 3), F(1, 2), F(1, 2, 3, 4), F(1, 2, 4, 5), F(3, 4)):
        v, k = set_indices(S).v, S.k
        C = darboux_down(S).ops["C"]
        lhs = apply_op(C, hermite_exceptional(v - k - 1, down(S)))
        assert lhs == hermite_exceptional(v, S) * hermite_down_constant(v, S), S


def test_darboux_down_flags_wrong_constant(monkeypatch):
    real = operators.hermite_down_constant
    monkeypatch.setattr(operators, "hermite_down_constant", lambda n, S: real(n, S) * 2)
    rep = darboux_down(F(2, 3)).report
    assert not rep.passed
    assert rep.first_failure["relation"] == "closed_form_constant"


@pytest.mark.slow
@pytest.mark.parametrize("a", [1, None])
def test_darboux_acceptance_range(a):
    for S in all_sets(5):
        split = darboux_split(S, a)
        assert split.report.passed, (S, a, split.report.first_failure)
        try:
            res = darboux_down(S, a)
        except PreconditionError as e:
            assert (S, a, e.witness) == (F(1), 1, 1)
            continue
        assert res.report.kind == "assert"
        assert res.report.passed, (S, a, res.report.first_failure)


def test_symmetry_and_pearson():
    for S in all_sets(3):
        for a in (1, 2):
            rep = symmetry_pearson_check(S, a)
            assert rep.passed, (S, a, rep.first_failure)
        assert symmetry_pearson_check(S).passed, S
