"""Linha de comando: ``generate``, ``verify`` e ``scan``.

Códigos de saída: 0 tudo certo, 1 falha de identidade afirmada, 2 erro de
configuração, 3 erro interno.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Sequence

import mpmath
import pandas as pd

from .config import FAMILIES, SCAN_FAMILIES, SUITES, RunConfig, Settings, grid_points
from .conjecture import (
    EVIDENCE_SCOPES,
    RecurrenceFamily,
    evidence_sweep,
    hermite_proved_direction,
    karlin_szego_check,
    scan_family,
    scan_summary,
)
from .errors import ConfigError, ExceptionalError
from .exceptional import casorati_polys, charlier_exceptional, empty_conventions, hermite_exceptional, wronskian_polys
from .fsets import all_sets, set_indices
from .measures import christoffel_q
from .operators import build_charlier_op, build_hermite_op
from .reports import VerificationReport, summarize, to_jsonable, write_csv, write_json, write_jsonl, write_reports
from .scalars import to_mpf
from .suites import run_suites

# opções cujo valor pode começar com "-" (ex.: --a -1/2, --eval-grid -3:3:0.1)
VALUE_FLAGS = ("--a", "--eval-grid", "--tol", "--param", "--n")


def _tag(cfg: RunConfig) -> str:
    parts = [cfg.family or "all"]
    if cfg.F.k:
        parts.append("F" + "-".join(map(str, cfg.F)))
    return "_".join(parts)


def _default_n(cfg: RunConfig) -> List[int]:
    if cfg.n_values:
        return list(cfg.n_values)
    idx = set_indices(cfg.F)
    if cfg.nmax is not None:
        return idx.upto(cfg.nmax)
    return idx.first(5)


def _family_poly(cfg: RunConfig, n: int):
    if cfg.family == "hermite":
        return hermite_exceptional(n, cfg.F)
    return charlier_exceptional(n, cfg.F, cfg.a)


def run_generate(cfg: RunConfig) -> int:
    F = cfg.F
    ns = _default_n(cfg)
    idx = set_indices(F)
    payload: Dict[str, object] = {"family": cfg.family, "F": F, "a": cfg.a}
    payload["polynomials"] = [
        {"n": n, "in_sigma": idx.contains(n), "poly": _family_poly(cfg, n)} for n in ns
    ]
    if not F.k:
        payload["conventions"] = empty_conventions()
    if cfg.family == "hermite":
        data = wronskian_polys(F)
        if cfg.omega:
            payload["omega"] = data.omega
            payload["omega_tilde"] = data.omega_tilde
        if cfg.operator:
            payload["operator"] = build_hermite_op(F)
    else:
        data = casorati_polys(F, cfg.a)
        if cfg.omega:
            payload["omega"] = data.omega
            payload["omega_tilde"] = data.omega_tilde
        if cfg.lambda_:
            payload["lambda"] = data.lambda_
            payload["lambda_tilde"] = data.lambda_tilde
        if cfg.q:
            payload["q"] = [{"n": n, "poly": christoffel_q(n, F, cfg.a)} for n in ns]
        if cfg.operator:
            payload["operator"] = build_charlier_op(F, cfg.a)
    out = write_json(payload, cfg.out / f"generate_{_tag(cfg)}.json")
    print(f"Polinômios gerados: {len(ns)}")
    print(f"Salvo: {out}")
    if cfg.eval_grid is not None:
        rows = []
        polys = {n: _family_poly(cfg, n) for n in ns}
        with mpmath.workprec(cfg.precision):
            for x in grid_points(cfg.eval_grid):
                row = {"x": to_mpf(x)}
                for n, p in polys.items():
                    row[f"n={n}"] = to_mpf(p(x))
                rows.append(row)
            # conversão para texto ainda dentro da precisão de trabalho
            rows = [{k: to_jsonable(v) for k, v in r.items()} for r in rows]
        if cfg.csv:
            grid_out = write_csv(rows, cfg.out / f"grid_{_tag(cfg)}.csv")
        else:
            grid_out = write_json(rows, cfg.out / f"grid_{_tag(cfg)}.json")
        print(f"Salvo: {grid_out}")
    return 0


def _print_tables(reports: Sequence[VerificationReport]) -> None:
    for rep in reports:
        table = rep.notes.get("table")
        if not table:
            continue
        df = pd.DataFrame([{k: to_jsonable(v) for k, v in row.items()} for row in table])
        print(f"{rep.name} {to_jsonable(rep.inputs)}")
        print(df.to_string(index=False))


def _report_exit(reports: Sequence[VerificationReport]) -> int:
    summary = summarize(reports)
    print(
        f"Relatórios: {summary['asserted']} afirmados ({summary['asserted_failed']} com falha), "
        f"{summary['evidence']} de evidência ({summary['evidence_agree']}/{summary['evidence_checks']} concordam)"
    )
    failed = [r for r in reports if r.kind == "assert" and not r.passed]
    if failed:
        first = failed[0]
        print(f"Falha em {first.name}: {to_jsonable(first.first_failure)}", file=sys.stderr)
        return 1
    return 0


def run_verify(cfg: RunConfig) -> int:
    reports = run_suites(cfg)
    out = write_reports(reports, cfg.out / f"verify_{_tag(cfg)}.json", timings=cfg.timings)
    _print_tables(reports)
    print(f"Salvo: {out}")
    return _report_exit(reports)


def _scan_family_obj(cfg: RunConfig) -> RecurrenceFamily:
    if cfg.family_file is not None:
        return RecurrenceFamily.from_json(cfg.family_file)
    param = cfg.family_param
    if param is None and cfg.family == "charlier":
        param = cfg.a
    return RecurrenceFamily.builtin(cfg.family or "hermite", cfg.max_fk, param)


def run_scan(cfg: RunConfig) -> int:
    if cfg.evidence is not None:
        a_list = [cfg.a] if cfg.a is not None else [1]
        reports = evidence_sweep(cfg.evidence, all_sets(cfg.max_fk), a_list, jobs=cfg.jobs)
        out = write_reports(reports, cfg.out / f"evidence_{cfg.evidence}.json", timings=cfg.timings)
        rows = [{"name": r.name, "F": r.inputs.get("F"), "a": r.inputs.get("a"), "checks": r.checks,
                 "agree": r.checks - r.failed, "vacuous": r.vacuous} for r in reports]
        csv_out = write_csv(rows, cfg.out / f"evidence_{cfg.evidence}_summary.csv")
        print(f"Salvo: {out}")
        print(f"Salvo: {csv_out}")
        return _report_exit(reports)

    fam = _scan_family_obj(cfg)
    records = scan_family(fam, cfg.max_fk, jobs=cfg.jobs)
    name = fam.name.split("(")[0]
    out = write_jsonl([r.to_json() for r in records], cfg.out / f"scan_{name}.jsonl")
    summary = scan_summary(records)
    csv_out = write_csv([summary], cfg.out / f"scan_{name}_summary.csv")
    print(f"Conjuntos: {summary['records']}; admissíveis: {summary['admissible']}; "
          f"concordam com a conjectura: {summary['agree']}")
    if summary["not_admissible_without_zero"]:
        print(f"Contraexemplos (não admissível sem zero real): {summary['not_admissible_without_zero']}")
    checks = [karlin_szego_check([fam], cfg.max_fk)]
    if fam.name == "hermite":
        checks.append(hermite_proved_direction(records))
    checks_out = write_reports(checks, cfg.out / f"scan_{name}_checks.json", timings=cfg.timings)
    print(f"Salvo: {out}")
    print(f"Salvo: {csv_out}")
    print(f"Salvo: {checks_out}")
    return _report_exit(checks)


def _split_suites(values: List[str] | None) -> List[str]:
    out: List[str] = []
    for v in values or []:
        out.extend(s.strip() for s in v.split(",") if s.strip())
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="python -m src", description="Polinômios excepcionais de Charlier e Hermite")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--set", type=str, default="", help="Conjunto F, ex.: 1,2 (vazio = ∅)")
        sp.add_argument("--a", type=str, default=None, help="Parâmetro de Charlier como racional p/q")
        sp.add_argument("--precision", type=int, default=None, help="Bits de precisão do mpmath")
        sp.add_argument("--out", type=Path, default=None, help="Pasta de saída (padrão: OUTPUT_DIR)")
        sp.add_argument("--jobs", type=int, default=None, help="Processos paralelos (padrão: JOBS ou nº de CPUs)")
        sp.add_argument("--timings", action="store_true", help="Inclui tempos nos relatórios")

    g = sub.add_parser("generate", help="Gera polinômios, Ω/Λ, q_n e operadores")
    common(g)
    g.add_argument("--family", choices=FAMILIES, default=None)
    g.add_argument("--n", type=str, default=None, help="Índices: 0,3,4 ou 2:6")
    g.add_argument("--nmax", type=int, default=None)
    g.add_argument("--omega", action="store_true")
    g.add_argument("--lambda", dest="lambda_", action="store_true")
    g.add_argument("--q", action="store_true", help="Polinômios de Christoffel q_n^F")
    g.add_argument("--operator", action="store_true", help="Operador D_F")
    g.add_argument("--eval-grid", dest="eval_grid", type=str, default=None, help="lo:hi:step")
    g.add_argument("--csv", action="store_true", help="Grade em CSV")

    v = sub.add_parser("verify", help="Roda suítes de verificação")
    common(v)
    v.add_argument("--family", choices=FAMILIES, default=None, help="Sem --family roda as duas")
    v.add_argument("--n", type=str, default=None)
    v.add_argument("--nmax", type=int, default=None)
    v.add_argument("--tol", type=str, default=None, help="Tolerância relativa da cota de erro (ex.: 1e-20)")
    v.add_argument("--suite", nargs="+", default=None,
                   help="Suítes: " + ", ".join(SUITES) + ", all")
    v.add_argument("--max-fk", dest="max_fk", type=int, default=None, help="Faixa da varredura de positividade")

    s = sub.add_parser("scan", help="Varredura da conjectura ou evidência")
    common(s)
    s.add_argument("--family", choices=SCAN_FAMILIES, default=None)
    s.add_argument("--param", type=str, default=None, help="Parâmetro da família (a de charlier, α de laguerre)")
    s.add_argument("--family-file", dest="family_file", type=str, default=None,
                   help='JSON {"a": [...], "b": [...], "c": [...]}')
    s.add_argument("--max-fk", dest="max_fk", type=int, default=None)
    s.add_argument("--evidence", choices=EVIDENCE_SCOPES, default=None)
    return p


def _join_values(argv: Sequence[str]) -> List[str]:
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_values(argv))
    except SystemExit as e:
        return int(e.code or 0)
    if hasattr(args, "suite"):
        args.suite = _split_suites(args.suite)
    try:
        cfg = RunConfig.from_args(args, Settings.from_env())
        cfg.out.mkdir(parents=True, exist_ok=True)
        if cfg.command == "generate":
            return run_generate(cfg)
        if cfg.command == "verify":
            return run_verify(cfg)
        return run_scan(cfg)
    except ConfigError as e:
        print(f"Erro de configuração: {e}", file=sys.stderr)
        return e.exit_code
    except ExceptionalError as e:
        print(f"Erro ({type(e).__name__}): {e}", file=sys.stderr)
        return e.exit_code
    except (ValueError, ZeroDivisionError) as e:
        print(f"Erro de configuração: {e}", file=sys.stderr)
        return ConfigError.exit_code
    except Exception as e:
        print(f"Erro interno: {e}", file=sys.stderr)
        return 3
