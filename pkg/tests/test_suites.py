from fractions import Fraction

from src.config import RunConfig
from src.fsets import FiniteSet, is_admissible
from src.suites import run_alt_forms, run_darboux, run_norms, run_positivity


def F(*xs):
    return FiniteSet.of(*xs)


def _cfg(S, a=None, family=None):
    return RunConfig(command="verify", family=family, F=S, a=None if a is None else Fraction(a))


def test_darboux_down_stays_asserted_for_non_admissible_set():
    S = F(2)
    assert not is_admissible(S).admissible
    reports = {r.name: r for r in run_darboux(_cfg(S, 1))}
    for name in ("darboux_down_charlier", "darboux_down_hermite"):
        assert reports[name].kind == "assert"
        assert reports[name].passed, reports[name].first_failure
    assert reports["darboux_down_hermite_below_v"].kind == "evidence"


def test_darboux_down_skipped_when_omega_has_integer_zero():
    reports = {r.name: r for r in run_darboux(_cfg(F(1), 1, family="charlier"))}
    skipped = reports["darboux_down_charlier"]
    assert skipped.kind == "evidence"
    assert skipped.notes["witness"] == 1


def test_alt_forms_above_v_are_asserted():
    reports = run_alt_forms(_cfg(F(1), 1))
    assert [r.name for r in reports] == ["alt_form_charlier"] * 2 + ["alt_form_hermite"] * 2
    assert [r.kind for r in reports] == ["assert", "evidence", "assert", "evidence"]
    assert all(r.passed for r in reports if r.kind == "assert")
    # F = {1}: v_F = 2 e a primeira linha é nula em n = 0
    assert reports[1].notes["undefined_below_v"] == [0]
    assert reports[3].notes["undefined_below_v"] == [0]


def test_negative_a_skips_positivity_and_norms():
    cfg = _cfg(F(2, 3), -2, family="charlier")
    (rep,) = run_positivity(cfg)
    assert rep.kind == "evidence"
    assert "a > 0" in rep.notes["skipped"]
    names = [r.name for r in run_norms(cfg)]
    assert names == ["norm_charlier"]
