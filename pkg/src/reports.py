from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence

import mpmath
import pandas as pd

# Quantas testemunhas de falha guardamos por relatório (o resto só é contado)
MAX_WITNESSES = 5
FLOAT_DIGITS = 30


def to_jsonable(value: Any) -> Any:
    """Converte valores do pacote em algo serializável, sem floats binários."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return mpmath.nstr(value, FLOAT_DIGITS)
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    if isinstance(value, float):
        return mpmath.nstr(mpmath.mpf(value), FLOAT_DIGITS)
    return str(value)


@dataclass
class VerificationReport:
    name: str
    kind: str = "assert"  # "assert" conta no código de saída; "evidence" não
    inputs: Dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    checks: int = 0
    failed: int = 0
    vacuous: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    notes: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0
    _t0: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    def record(self, ok: bool, **witness: Any) -> bool:
        self.checks += 1
        if not ok:
            self.passed = False
            self.failed += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append({k: to_jsonable(v) for k, v in witness.items()})
        return ok

    def compare(self, lhs: Any, rhs: Any, *, vacuous: bool = False, **witness: Any) -> bool:
        if vacuous:
            self.vacuous += 1
        return self.record(lhs == rhs, lhs=lhs, rhs=rhs, **witness)

    def absorb(self, other: "VerificationReport", prefix: str = "") -> None:
        """Incorpora contagens e testemunhas de um sub-relatório."""
        self.checks += other.checks
        self.failed += other.failed
        self.vacuous += other.vacuous
        if not other.passed:
            self.passed = False
            for w in other.failures:
                if len(self.failures) < MAX_WITNESSES:
                    self.failures.append({"sub": prefix or other.name, **w})
        for k, v in other.notes.items():
            self.notes[f"{prefix or other.name}.{k}"] = v

    def finish(self) -> "VerificationReport":
        self.elapsed = time.perf_counter() - self._t0
        return self

    @property
    def first_failure(self) -> Dict[str, Any] | None:
        return self.failures[0] if self.failures else None

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        d = {
            "name": self.name,
            "kind": self.kind,
            "inputs": to_jsonable(self.inputs),
            "pass": self.passed,
            "checks": self.checks,
            "failed": self.failed,
            "vacuous": self.vacuous,
            "failures": self.failures,
            "notes": to_jsonable(self.notes),
        }
        if timings:
            d["elapsed_s"] = round(self.elapsed, 3)
        return d


def _ensure_dir(p: Path) -> None:
    p.mkdir(parents=True, exist_ok=True)


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(obj: Any, out_path: Path) -> Path:
    _ensure_dir(out_path.parent)
    out_path.write_text(dumps(obj), encoding="utf-8")
    return out_path


def write_reports(reports: Sequence[VerificationReport], out_path: Path, timings: bool = False) -> Path:
    payload = {
        "reports": [r.to_dict(timings=timings) for r in sorted(reports, key=lambda r: r.name)],
        "summary": summarize(reports),
    }
    return write_json(payload, out_path)


def summarize(reports: Iterable[VerificationReport]) -> Dict[str, Any]:
    reports = list(reports)
    asserted = [r for r in reports if r.kind == "assert"]
    evidence = [r for r in reports if r.kind == "evidence"]
    return {
        "asserted": len(asserted),
        "asserted_failed": sum(1 for r in asserted if not r.passed),
        "evidence": len(evidence),
        "evidence_checks": sum(r.checks for r in evidence),
        "evidence_agree": sum(r.checks - r.failed for r in evidence),
    }


def write_csv(rows: List[Dict[str, Any]], out_path: Path) -> Path:
    _ensure_dir(out_path.parent)
    df = pd.DataFrame([{k: to_jsonable(v) for k, v in r.items()} for r in rows])
    df.to_csv(out_path, index=False, encoding="utf-8")
    return out_path


def write_jsonl(rows: List[Dict[str, Any]], out_path: Path) -> Path:
    _ensure_dir(out_path.parent)
    df = pd.DataFrame([{k: to_jsonable(v) for k, v in r.items()} for r in rows])
    text = df.to_json(orient="records", lines=True, force_ascii=False) if len(df) else ""
    if text and not text.endswith("\n"):
        text += "\n"
    out_path.write_text(text, encoding="utf-8")
    return out_path
