"""Registro das suítes de verificação usadas por ``verify``.

Cada suíte recebe o ``RunConfig`` já validado e devolve uma lista de
``VerificationReport``. Identidades provadas saem como ``kind="assert"``;
o que só vale como evidência (n < v_F, relatórios pulados) sai como
``kind="evidence"`` e não afeta o código de saída.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence

from .config import SUITES, RunConfig
from .errors import PreconditionError
from .exceptional import (
    charlier_alt_check,
    hermite_alt_check,
    hermite_omega,
    index_identity_check,
    invariance_check,
    lambda_dual_check,
    omega_limit_check,
    sigma_window,
    structure_check,
)
from .families import charlier_duality_check, hermite_limit_check, hermite_relations, verify_charlier_relations
from .fsets import FiniteSet, all_sets, is_admissible, partition_check, set_indices
from .measures import (
    charlier_norm_check,
    christoffel_alt_check,
    duality_checks,
    hermite_norm_check,
    orthogonality_check,
    parseval_partial_sums,
    positivity_report,
    positivity_scan,
    q_norm_check,
    q_recurrence_check,
)
from .operators import darboux_chain, darboux_down, darboux_split, hermite_classical_check, symmetry_pearson_check, verify_eigen
from .polycore import real_root_count
from .pool import run_tasks
from .reports import VerificationReport

NORM_INDICES = 4
CLASSICAL_NMAX = 8
DUALITY_GRID = 12


@dataclass
class Suite:
    name: str
    description: str
    run: Callable[[RunConfig], List[VerificationReport]]


def _n_range(cfg: RunConfig) -> List[int]:
    if cfg.n_values:
        return list(cfg.n_values)
    nmax = cfg.nmax if cfg.nmax is not None else set_indices(cfg.F).v + 8
    return list(range(nmax + 1))


def _skipped(name: str, inputs: dict, reason: str, witness=None) -> VerificationReport:
    rep = VerificationReport(name, kind="evidence", inputs=inputs)
    rep.notes["skipped"] = reason
    if witness is not None:
        rep.notes["witness"] = witness
    return rep.finish()


def run_eigen(cfg: RunConfig) -> List[VerificationReport]:
    out = []
    ns = _n_range(cfg)
    a = cfg.charlier_a
    if a is not None:
        out.append(verify_eigen(cfg.F, a, ns))
    if cfg.run_hermite:
        out.append(verify_eigen(cfg.F, None, ns))
        out.append(hermite_classical_check(CLASSICAL_NMAX))
    return out


def run_invariance(cfg: RunConfig) -> List[VerificationReport]:
    out = []
    a = cfg.charlier_a
    if a is not None:
        out.append(invariance_check(cfg.F, a))
        out.append(lambda_dual_check(cfg.F, a))
    if cfg.run_hermite:
        out.append(invariance_check(cfg.F))
    return out


def _darboux_for(F: FiniteSet, a: Fraction | None) -> List[VerificationReport]:
    out = [darboux_split(F, a).report, darboux_chain(F, a)]
    try:
        down = darboux_down(F, a)
    except PreconditionError as e:
        name = "darboux_down_hermite" if a is None else "darboux_down_charlier"
        out.append(_skipped(name, {"F": F, "a": a}, str(e), e.witness))
        return out
    out.append(down.report)
    out.append(down.evidence)
    return out


def run_darboux(cfg: RunConfig) -> List[VerificationReport]:
    out = []
    if cfg.charlier_a is not None:
        out.extend(_darboux_for(cfg.F, cfg.charlier_a))
    if cfg.run_hermite:
        out.extend(_darboux_for(cfg.F, None))
    return out


def run_duality(cfg: RunConfig) -> List[VerificationReport]:
    a = cfg.charlier_a
    if a is None:
        return []
    return [
        charlier_duality_check(a, DUALITY_GRID - 1, DUALITY_GRID - 1),
        duality_checks(cfg.F, a),
        christoffel_alt_check(cfg.F, a),
    ]


def run_symmetry(cfg: RunConfig) -> List[VerificationReport]:
    out = []
    if cfg.charlier_a is not None:
        out.append(symmetry_pearson_check(cfg.F, cfg.charlier_a))
    if cfg.run_hermite:
        out.append(symmetry_pearson_check(cfg.F))
    return out


def _parseval_report(F: FiniteSet, a: Fraction, precision: int, points: Sequence[int] = (0, 1, 2)) -> VerificationReport:
    rep = VerificationReport("parseval", inputs={"F": F, "a": a, "points": list(points)})
    for x in points:
        res = parseval_partial_sums(F, a, x, precision=precision)
        rep.record(res.monotone and res.bounded, point=x, result=res)
        rep.notes[f"point_{x}"] = res
    return rep.finish()


def run_norms(cfg: RunConfig) -> List[VerificationReport]:
    out = []
    F = cfg.F
    first = set_indices(F).first(NORM_INDICES)
    a = cfg.charlier_a
    if a is not None:
        if a <= 0:
            out.append(_skipped("norm_charlier", {"F": F, "a": a}, "normas exigem a > 0"))
        else:
            try:
                out.append(charlier_norm_check(F, a, first, cfg.precision, cfg.discrete_tol, cfg.max_sum_terms))
                out.append(orthogonality_check(F, a, first, cfg.precision, cfg.discrete_tol, cfg.max_sum_terms))
                if is_admissible(F).admissible:
                    out.append(_parseval_report(F, a, cfg.precision))
            except PreconditionError as e:
                out.append(_skipped("norm_charlier", {"F": F, "a": a}, str(e), e.witness))
            out.append(q_norm_check(F, a, range(NORM_INDICES), cfg.precision, cfg.discrete_tol, cfg.max_sum_terms))
    if cfg.run_hermite:
        try:
            out.append(hermite_norm_check(F, first, cfg.precision, cfg.continuous_tol))
            out.append(orthogonality_check(F, None, first[:3], cfg.precision, cfg.continuous_tol))
        except PreconditionError as e:
            out.append(_skipped("norm_hermite", {"F": F}, str(e), e.witness))
    return out


def run_recurrence(cfg: RunConfig) -> List[VerificationReport]:
    out = []
    a = cfg.charlier_a
    if a is not None:
        out.append(q_recurrence_check(cfg.F, a, range(CLASSICAL_NMAX)))
        out.append(verify_charlier_relations(a, CLASSICAL_NMAX))
    if cfg.run_hermite:
        out.append(hermite_relations(CLASSICAL_NMAX))
    return out


def run_limit(cfg: RunConfig) -> List[VerificationReport]:
    ladder, points, prec = cfg.limit_ladder, cfg.limit_points, cfg.precision
    out = [hermite_limit_check(n, ladder, points, precision=prec) for n in range(4)]
    for n in set_indices(cfg.F).first(2):
        out.append(hermite_limit_check(cfg.F, ladder, points, n=n, precision=prec))
    out.append(omega_limit_check(cfg.F, ladder, points, prec))
    return out


def run_positivity(cfg: RunConfig) -> List[VerificationReport]:
    a = cfg.charlier_a if cfg.charlier_a is not None else Fraction(1)
    F = cfg.F
    if a <= 0:
        return [_skipped("positivity", {"F": F, "a": a}, "a suíte positivity exige a > 0")]
    sweep = positivity_report(all_sets(cfg.max_fk), a)
    rep = VerificationReport("positivity_set", inputs={"F": F, "a": a})
    verdict = positivity_scan(F, a)
    rep.record(verdict.equivalent, F=F, verdict=verdict)
    rep.notes["measure"] = "positive measure" if verdict.admissible else "signed measure"
    rep.notes["omega_integer_zero"] = verdict.measure == "undefined"
    rep.notes["verdict"] = verdict
    zeros = real_root_count(hermite_omega(F))
    rep.notes["hermite_omega_real_zeros"] = zeros
    if verdict.admissible:
        rep.record(zeros == 0, relation="hermite_omega_no_real_zero", F=F, zeros=zeros)
    return [sweep, rep.finish()]


def run_alt_forms(cfg: RunConfig) -> List[VerificationReport]:
    F = cfg.F
    above, below = sigma_window(F, below=False), sigma_window(F, below=True)
    out = []
    if cfg.charlier_a is not None:
        out.append(charlier_alt_check(F, cfg.charlier_a, above))
        out.append(charlier_alt_check(F, cfg.charlier_a, below, kind="evidence"))
    if cfg.run_hermite:
        out.append(hermite_alt_check(F, above))
        out.append(hermite_alt_check(F, below, kind="evidence"))
    return out


def run_index(cfg: RunConfig) -> List[VerificationReport]:
    a = cfg.charlier_a if cfg.charlier_a is not None else Fraction(1)
    return [index_identity_check(cfg.F, a), structure_check(cfg.F, a), partition_check()]


def build_suites() -> List[Suite]:
    s: List[Suite] = []

    # 1) Equação de autovalor D_F(p_n) = λ_n p_n
    s.append(Suite("eigen", "equação de autovalor exata", run_eigen))
    # 2) Invariância de Ω sob F → I(F)
    s.append(Suite("invariance", "Ω_F contra Ω̃_F (e Λ por derivada em a)", run_invariance))
    # 3) Fatorações de Darboux e entrelaçamentos
    s.append(Suite("darboux", "A/B, C/E, cadeia até ∅", run_darboux))
    # 4) Dualidades
    s.append(Suite("duality", "dualidade Charlier, q_n ↔ c_n, Ω ↔ Φ, Λ ↔ Ψ", run_duality))
    # 5) Simetria / Pearson
    s.append(Suite("symmetry", "equações de simetria e de Pearson", run_symmetry))
    # 6) Normas com cota de erro
    s.append(Suite("norms", "normas com cota de erro (rigorosa no caso discreto)", run_norms))
    # 7) Recorrências
    s.append(Suite("recurrence", "recorrência de q_n e relações clássicas", run_recurrence))
    # 8) Limite Charlier → Hermite
    s.append(Suite("limit", "decaimento do desvio ao longo de a", run_limit))
    # 9) Admissibilidade ⇔ positividade
    s.append(Suite("positivity", "equivalência admissível/ρ positiva/Ω de sinal constante", run_positivity))
    # 10) Formas alternativas via I(F)
    s.append(Suite("alt-forms", "determinantes de ordem m+1", run_alt_forms))
    # 11) Identidades de índice
    s.append(Suite("index", "identidades em u_F, partições", run_index))
    return s


def _suite_task(task) -> List[VerificationReport]:
    name, cfg = task
    suite = next(x for x in build_suites() if x.name == name)
    return suite.run(cfg)


def run_suites(cfg: RunConfig) -> List[VerificationReport]:
    """Roda as suítes de ``cfg.suites`` (todas se vazio), em paralelo por suíte."""
    names = cfg.suites or list(SUITES)
    out: List[VerificationReport] = []
    for reports in run_tasks(_suite_task, [(n, cfg) for n in names], jobs=cfg.jobs, desc="Suítes"):
        out.extend(reports)
    return out
