import json

import pandas as pd
import pytest

from src import cli
from src.reports import VerificationReport


@pytest.fixture
def run(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)

    def _run(*argv):
        return cli.main([*argv, "--out", str(tmp_path), "--jobs", "1"])

    return _run


def _load(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_generate_charlier(run, tmp_path):
    assert run("generate", "--family", "charlier", "--set", "1,2", "--a", "1", "--n", "0,3,4", "--omega") == 0
    payload = _load(tmp_path / "generate_charlier_F1-2.json")
    assert [p["n"] for p in payload["polynomials"]] == [0, 3, 4]
    assert all(p["in_sigma"] for p in payload["polynomials"])
    assert payload["omega"]["coeffs"] == ["1/2", "-1/2", "1/2"]


def test_generate_hermite_omega(run, tmp_path):
    assert run("generate", "--family", "hermite", "--set", "1,2", "--omega") == 0
    payload = _load(tmp_path / "generate_hermite_F1-2.json")
    assert payload["omega"]["coeffs"] == ["4", "0", "8"]


def test_generate_empty_set_conventions(run, tmp_path):
    assert run("generate", "--family", "charlier", "--a", "-1/2", "--n", "0:2") == 0
    payload = _load(tmp_path / "generate_charlier.json")
    assert payload["conventions"]["omega"]["coeffs"] == ["1"]
    assert payload["conventions"]["lambda"]["coeffs"] == []


def test_generate_grid_csv(run, tmp_path):
    assert run("generate", "--family", "hermite", "--set", "1,2", "--n", "7", "--eval-grid", "-3:3:0.1", "--csv") == 0
    df = pd.read_csv(tmp_path / "grid_hermite_F1-2.csv")
    assert len(df) == 61
    assert list(df.columns) == ["x", "n=7"]


def test_verify_eigen(run, tmp_path):
    assert run("verify", "--family", "hermite", "--set", "1,2", "--suite", "eigen") == 0
    payload = _load(tmp_path / "verify_hermite_F1-2.json")
    assert payload["summary"]["asserted_failed"] == 0
    assert {r["name"] for r in payload["reports"]} == {"eigen_hermite", "eigen_hermite_classical"}


def test_verify_charlier_index_and_invariance(run):
    assert run("verify", "--family", "charlier", "--set", "2,3", "--a", "1", "--suite", "invariance,index") == 0


@pytest.mark.parametrize("argv", [
    ("verify", "--suite", "eigen"),
    ("generate", "--family", "charlier", "--set", "1,2"),
    ("generate", "--family", "hermite", "--set", "1,2", "--q"),
    ("generate", "--family", "hermite", "--eval-grid", "0:1:0.5"),
    ("verify", "--set", "1,2", "--a", "abc"),
    ("verify", "--set", "1,2", "--suite", "bogus"),
    ("scan", "--family", "jacobi"),
])
def test_bad_configuration_exits_2(run, argv):
    assert run(*argv) == 2


def test_scan_hermite(run, tmp_path):
    assert run("scan", "--family", "hermite", "--max-fk", "4") == 0
    lines = (tmp_path / "scan_hermite.jsonl").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 15
    summary = pd.read_csv(tmp_path / "scan_hermite_summary.csv")
    assert int(summary["records"][0]) == 15
    checks = _load(tmp_path / "scan_hermite_checks.json")
    assert {r["name"] for r in checks["reports"]} == {"karlin_szego", "hermite_admissible_no_real_zero"}


def test_scan_evidence(run, tmp_path):
    assert run("scan", "--evidence", "alt-forms", "--max-fk", "2", "--a", "1") == 0
    payload = _load(tmp_path / "evidence_alt-forms.json")
    assert payload["summary"]["asserted"] == 0
    assert (tmp_path / "evidence_alt-forms_summary.csv").exists()


def test_report_exit_codes():
    ok = VerificationReport("ok")
    ok.record(True)
    bad_evidence = VerificationReport("ev", kind="evidence")
    bad_evidence.record(False)
    assert cli._report_exit([ok, bad_evidence]) == 0
    bad = VerificationReport("bad")
    bad.record(False, n=3)
    assert cli._report_exit([ok, bad]) == 1


def test_verify_norms_within_tolerance(run, tmp_path):
    assert run("verify", "--suite", "norms", "--set", "1,2", "--a", "1", "--tol", "1e-20") == 0
    payload = _load(tmp_path / "verify_all_F1-2.json")
    assert payload["summary"]["asserted_failed"] == 0
    reports = {r["name"]: r for r in payload["reports"]}
    for name in ("norm_charlier", "norm_hermite"):
        rep = reports[name]
        assert rep["pass"]
        assert rep["inputs"]["tol"] == "1/100000000000000000000"
        assert len(rep["notes"]["table"]) == 4
        for row in rep["notes"]["table"]:
            assert float(row["error_bound"]) / abs(float(row["expected"])) < 1e-20


def test_verify_negative_a_skips_positivity(run, tmp_path):
    code = run("verify", "--family", "charlier", "--set", "2,3", "--a", "-2",
               "--suite", "eigen,invariance,symmetry,positivity,norms")
    assert code == 0
    payload = _load(tmp_path / "verify_charlier_F2-3.json")
    reports = {r["name"]: r for r in payload["reports"]}
    assert "skipped" in reports["positivity"]["notes"]
    assert "skipped" in reports["norm_charlier"]["notes"]
    assert reports["eigen_charlier"]["kind"] == "assert"


@pytest.mark.slow
def test_verify_all_non_admissible_set(run, tmp_path):
    assert run("verify", "--suite", "all", "--set", "1") == 0
    payload = _load(tmp_path / "verify_all_F1.json")
    reports = {r["name"]: r for r in payload["reports"]}
    assert reports["positivity_set"]["notes"]["measure"] == "signed measure"
    alt = [r for r in payload["reports"] if r["name"].startswith("alt_form")]
    assert sorted(r["kind"] for r in alt) == ["assert", "assert", "evidence", "evidence"]
    assert payload["summary"]["asserted_failed"] == 0
