"""Varreduras empíricas: Wronskianos de famílias ortogonais e evidência fora da faixa provada.

Nada aqui falha por causa da direção não provada da conjectura: os resultados
viram registros (``ConjectureRecord``) ou relatórios ``kind="evidence"``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from .errors import ConfigError, PreconditionError
from .exceptional import charlier_alt_check, hermite_alt_check, sigma_window
from .fsets import FiniteSet, all_sets, is_admissible
from .operators import darboux_down
from .polycore import Poly, poly_det, real_root_count
from .pool import run_tasks
from .reports import VerificationReport
from .scalars import to_rational

BUILTIN_FAMILIES = ("hermite", "charlier", "laguerre", "legendre")


def _fractions(values: Sequence) -> Tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)


@dataclass(frozen=True)
class RecurrenceFamily:
    """x·p_n = a_n p_{n+1} + b_n p_n + c_n p_{n−1}, com p_{−1} = 0 e p_0 = 1.

    ``c[0]`` é ignorado. ``monic=True`` normaliza cada p_n para mônico.
    """

    name: str
    a: Tuple[Fraction, ...]
    b: Tuple[Fraction, ...]
    c: Tuple[Fraction, ...]
    monic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", _fractions(self.a))
        object.__setattr__(self, "b", _fractions(self.b))
        object.__setattr__(self, "c", _fractions(self.c))

    @property
    def length(self) -> int:
        """Maior grau que os dados permitem construir."""
        return min(len(self.a), len(self.b), len(self.c))

    def first_degenerate(self, nmax: int) -> int | None:
        """Primeiro n em [1, nmax] com a_{n−1}·c_n = 0 (c_nmax não é usado), ou None."""
        top = min(nmax, self.length)
        for n in range(1, top + 1):
            if self.a[n - 1] == 0 or (n < top and self.c[n] == 0):
                return n
        return None

    @property
    def positive(self) -> bool:
        """a_{n−1}·c_n > 0 em todos os dados (medida positiva, teorema de Favard)."""
        return all(self.a[n - 1] * self.c[n] > 0 for n in range(1, self.length))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "a": [str(v) for v in self.a],
            "b": [str(v) for v in self.b],
            "c": [str(v) for v in self.c],
            "monic": self.monic,
        }

    # famílias embutidas

    @classmethod
    def hermite(cls, length: int) -> "RecurrenceFamily":
        return cls("hermite", [Fraction(1, 2)] * length, [0] * length, list(range(length)))

    @classmethod
    def charlier(cls, a, length: int) -> "RecurrenceFamily":
        a = to_rational(a)
        if a <= 0:
            raise ConfigError(f"família charlier exige a > 0 (a={a})")
        return cls(f"charlier(a={a})", [n + 1 for n in range(length)],
                   [n + a for n in range(length)], [a] * length)

    @classmethod
    def laguerre(cls, alpha, length: int) -> "RecurrenceFamily":
        alpha = to_rational(alpha)
        if alpha <= -1:
            raise ConfigError(f"família laguerre exige α > −1 (α={alpha})")
        return cls(f"laguerre(alpha={alpha})", [-(n + 1) for n in range(length)],
                   [2 * n + alpha + 1 for n in range(length)], [-(n + alpha) for n in range(length)])

    @classmethod
    def legendre(cls, length: int) -> "RecurrenceFamily":
        return cls("legendre", [Fraction(n + 1, 2 * n + 1) for n in range(length)],
                   [0] * length, [Fraction(n, 2 * n + 1) for n in range(length)])

    @classmethod
    def builtin(cls, name: str, length: int, param=None) -> "RecurrenceFamily":
        if name == "hermite":
            return cls.hermite(length)
        if name == "legendre":
            return cls.legendre(length)
        if name == "charlier":
            return cls.charlier(1 if param is None else param, length)
        if name == "laguerre":
            return cls.laguerre(0 if param is None else param, length)
        raise ConfigError(f"família desconhecida: {name} (opções: {', '.join(BUILTIN_FAMILIES)})")

    @classmethod
    def from_json(cls, path: Path) -> "RecurrenceFamily":
        """Lê {"a": [...], "b": [...], "c": [...]} com racionais "p/q" (``name``/``monic`` opcionais)."""
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
            fam = cls(str(raw.get("name", path.stem)), raw["a"], raw["b"], raw["c"],
                      bool(raw.get("monic", False)))
        except (OSError, KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ConfigError(f"arquivo de família inválido {path}: {e}") from e
        bad = fam.first_degenerate(fam.length)
        if bad is not None:
            raise ConfigError(f"a_(n-1)·c_n = 0 em n={bad} ({path})")
        return fam


def family_polys(fam: RecurrenceFamily, nmax: int) -> List[Poly]:
    """p_0, ..., p_nmax pela recorrência de três termos, em aritmética exata."""
    if nmax < 0:
        raise ValueError("nmax deve ser ≥ 0")
    if nmax > fam.length:
        raise ValueError(f"dados de recorrência insuficientes para grau {nmax} (há {fam.length})")
    bad = fam.first_degenerate(nmax)
    if bad is not None:
        raise ValueError(f"a_(n-1)·c_n = 0 em n={bad}")
    x = Poly.x()
    out = [Poly.one()]
    prev = Poly.zero()
    for n in range(nmax):
        nxt = ((x - fam.b[n]) * out[n] - prev * fam.c[n]) / fam.a[n]
        prev = out[n]
        out.append(nxt)
    if fam.monic:
        out = [p.monic() for p in out]
    return out


def derivative_wronskian(polys: Sequence[Poly]) -> Poly:
    """|p_i^{(j)}|, i, j = 0..k−1."""
    k = len(polys)
    if not k:
        return Poly.one()
    return poly_det([[p.derivative(j) for j in range(k)] for p in polys])


@dataclass(frozen=True)
class ConjectureRecord:
    family: str
    F: FiniteSet
    admissible: bool
    real_zero_count: int | None
    agrees: bool | None
    degenerate: bool = False

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "F": self.F.to_json(),
            "k": self.F.k,
            "f_k": self.F.max,
            "admissible": self.admissible,
            "real_zero_count": self.real_zero_count,
            "agrees": self.agrees,
            "degenerate": self.degenerate,
        }


def wronskian_zero_scan(fam: RecurrenceFamily, F: FiniteSet) -> ConjectureRecord:
    polys = family_polys(fam, F.max)
    omega = derivative_wronskian([polys[f] for f in F])
    admissible = is_admissible(F).admissible
    if omega.is_zero():
        return ConjectureRecord(fam.name, F, admissible, None, None, degenerate=True)
    count = real_root_count(omega)
    # admissível ⇔ sem zeros reais
    return ConjectureRecord(fam.name, F, admissible, count, admissible != (count > 0))


def _scan_task(task: Tuple[RecurrenceFamily, FiniteSet]) -> ConjectureRecord:
    fam, F = task
    return wronskian_zero_scan(fam, F)


def scan_family(fam: RecurrenceFamily, max_fk: int, jobs: int = 1,
                max_k: int | None = None) -> List[ConjectureRecord]:
    """Todos os F com f_k ≤ max_fk, em ordem lexicográfica."""
    if max_fk > fam.length:
        raise ConfigError(f"família {fam.name} só tem dados até grau {fam.length} (max_fk={max_fk})")
    tasks = [(fam, F) for F in all_sets(max_fk, max_k)]
    return run_tasks(_scan_task, tasks, jobs=jobs, desc="Conjuntos")


def scan_summary(records: Sequence[ConjectureRecord]) -> Dict[str, object]:
    """Contagens por família. ``proved_violations`` só conta para Hermite (direção provada)."""
    counted = [r for r in records if not r.degenerate]
    admissible = [r for r in counted if r.admissible]
    other = [r for r in counted if not r.admissible]
    family = records[0].family if records else ""
    violations = sum(1 for r in admissible if r.real_zero_count) if family == "hermite" else 0
    return {
        "family": family,
        "records": len(records),
        "degenerate": len(records) - len(counted),
        "admissible": len(admissible),
        "admissible_with_zero": sum(1 for r in admissible if r.real_zero_count),
        "not_admissible": len(other),
        "not_admissible_without_zero": sum(1 for r in other if not r.real_zero_count),
        "agree": sum(1 for r in counted if r.agrees),
        "proved_violations": violations,
    }


def even_runs(max_fk: int) -> List[FiniteSet]:
    """Blocos {s, ..., s+2r−1} de inteiros consecutivos com tamanho par e máximo ≤ max_fk."""
    out = []
    for s in range(1, max_fk + 1):
        for length in range(2, max_fk - s + 2, 2):
            out.append(FiniteSet(tuple(range(s, s + length))))
    return sorted(out, key=lambda F: F.elements)


def karlin_szego_check(families: Sequence[RecurrenceFamily], max_fk: int) -> VerificationReport:
    """Blocos pares de índices consecutivos: Wronskiano sem zeros reais para medida positiva."""
    rep = VerificationReport("karlin_szego", inputs={"families": [f.name for f in families], "max_fk": max_fk})
    for fam in families:
        if not fam.positive:
            rep.notes.setdefault("skipped_not_positive", []).append(fam.name)
            continue
        for F in even_runs(max_fk):
            rec = wronskian_zero_scan(fam, F)
            rep.record(not rec.degenerate and rec.real_zero_count == 0,
                       family=fam.name, F=F, real_zero_count=rec.real_zero_count)
    return rep.finish()


def hermite_proved_direction(records: Sequence[ConjectureRecord]) -> VerificationReport:
    """F admissível ⇒ Ω_F sem zeros reais (teorema); relatório afirmativo."""
    rep = VerificationReport("hermite_admissible_no_real_zero")
    for r in records:
        if r.family == "hermite" and r.admissible:
            rep.record(r.real_zero_count == 0, F=r.F, real_zero_count=r.real_zero_count)
    return rep.finish()


# evidência numérica exata fora da faixa provada

EVIDENCE_SCOPES = ("alt-forms", "darboux-down")


def _skipped(name: str, inputs: dict, reason: str, witness=None) -> VerificationReport:
    rep = VerificationReport(name, kind="evidence", inputs=inputs)
    rep.notes["skipped"] = reason
    if witness is not None:
        rep.notes["witness"] = witness
    return rep.finish()


def _evidence_task(task: Tuple[str, FiniteSet, Fraction | None]) -> List[VerificationReport]:
    scope, F, a = task
    if scope == "alt-forms":
        window = sigma_window(F, below=True) + sigma_window(F, below=False)
        if a is None:
            return [hermite_alt_check(F, window, kind="evidence")]
        return [charlier_alt_check(F, a, window, kind="evidence")]
    try:
        factors = darboux_down(F, a)
    except PreconditionError as e:
        return [_skipped("darboux_down_charlier_below_v", {"F": F, "a": a}, str(e), e.witness)]
    return [factors.evidence]


def evidence_sweep(scope: str, sets: Sequence[FiniteSet], a_list: Sequence, jobs: int = 1) -> List[VerificationReport]:
    """Relatórios de evidência para cada F (admissível ou não) e cada a; Hermite uma vez por F."""
    if scope not in EVIDENCE_SCOPES:
        raise ConfigError(f"escopo de evidência desconhecido: {scope}")
    params: List[Fraction | None] = [None] + [to_rational(a) for a in a_list]
    tasks = [(scope, F, a) for F in sorted(sets, key=lambda F: F.elements) for a in params]
    out: List[VerificationReport] = []
    for reports in run_tasks(_evidence_task, tasks, jobs=jobs, desc="Evidência"):
        out.extend(reports)
    return out
