import argparse
from fractions import Fraction

import pytest

from src.config import RunConfig, Settings, SUITES, grid_points, parse_grid, parse_int_list
from src.errors import ConfigError
from src.fsets import FiniteSet
from src.pool import run_tasks


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for key in ("OUTPUT_DIR", "PRECISION_BITS", "DISCRETE_TOL", "CONTINUOUS_TOL", "JOBS",
                "LIMIT_A_LADDER", "LIMIT_POINTS", "MAX_SUM_TERMS"):
        monkeypatch.delenv(key, raising=False)
    return monkeypatch


def _args(**kw):
    base = {"command": "verify", "set": "1,2", "a": None, "precision": None, "out": None, "jobs": 1,
            "timings": False, "family": None, "n": None, "nmax": None, "tol": None, "suite": None, "max_fk": None}
    base.update(kw)
    return argparse.Namespace(**base)


def test_settings_defaults(clean_env):
    s = Settings.from_env()
    assert s.precision == 256
    assert s.discrete_tol == Fraction(1, 10 ** 20)
    assert s.continuous_tol == Fraction(1, 10 ** 12)
    assert s.limit_ladder == [100, 10 ** 4, 10 ** 6]
    assert s.max_sum_terms == 5000


def test_settings_from_env(clean_env):
    clean_env.setenv("PRECISION_BITS", "20")
    clean_env.setenv("JOBS", "3")
    clean_env.setenv("LIMIT_A_LADDER", "10, 1000")
    clean_env.setenv("DISCRETE_TOL", "1/1000")
    s = Settings.from_env()
    assert s.precision == 256
    assert s.jobs == 3
    assert s.limit_ladder == [10, 1000]
    assert s.discrete_tol == Fraction(1, 1000)


def test_parse_helpers():
    assert parse_int_list("0,2:4") == [0, 2, 3, 4]
    lo, hi, step = parse_grid("-3:3:0.1")
    assert (lo, hi, step) == (-3, 3, Fraction(1, 10))
    assert len(grid_points((lo, hi, step))) == 61
    for bad in ("1:2", "a:b:c", "0:1:0", "2:1:1"):
        with pytest.raises(ConfigError):
            parse_grid(bad)


def test_run_config_overrides(clean_env):
    cfg = RunConfig.from_args(_args(tol="1e-8", suite=["all"], a="-1/2"), Settings.from_env())
    assert cfg.F == FiniteSet.of(1, 2)
    assert cfg.a == Fraction(-1, 2)
    assert cfg.discrete_tol == cfg.continuous_tol == Fraction(1, 10 ** 8)
    assert cfg.suites == list(SUITES)
    assert cfg.charlier_a == Fraction(-1, 2)
    assert cfg.run_hermite


@pytest.mark.parametrize("kw", [
    {"set": ""},
    {"set": "1,1"},
    {"a": "0"},
    {"a": "x"},
    {"precision": 32},
    {"tol": "-1"},
    {"suite": ["bogus"]},
    {"family": "charlier"},
])
def test_run_config_rejects(clean_env, kw):
    with pytest.raises(ConfigError):
        RunConfig.from_args(_args(**kw), Settings.from_env())


def test_run_tasks_keeps_order():
    assert run_tasks(abs, [-3, 1, -2], jobs=1) == [3, 1, 2]
    assert run_tasks(abs, [-3, 1, -2, 5], jobs=2) == [3, 1, 2, 5]
    assert run_tasks(abs, [], jobs=4) == []
