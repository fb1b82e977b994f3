from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence, Tuple

from dotenv import load_dotenv

from .errors import ConfigError
from .fsets import EMPTY, FiniteSet

FAMILIES = ("charlier", "hermite")
SCAN_FAMILIES = ("hermite", "charlier", "laguerre", "legendre")
SUITES = (
    "eigen", "invariance", "darboux", "duality", "symmetry", "norms",
    "recurrence", "limit", "positivity", "alt-forms", "index",
)


def _to_int(v: str | None, default: int) -> int:
    try:
        return int(v)  # type: ignore[arg-type]
    except Exception:
        return default


def _to_fraction(v: str | None, default: Fraction) -> Fraction:
    try:
        return Fraction(str(v).strip())
    except Exception:
        return default


def _fraction_list(raw: str, default: Sequence[Fraction]) -> List[Fraction]:
    parts = [p.strip() for p in re.split(r"[,;\s]+", raw or "") if p.strip()]
    try:
        return [Fraction(p) for p in parts] or list(default)
    except (ValueError, ZeroDivisionError):
        return list(default)


@dataclass
class Settings:
    output_dir: Path
    precision: int
    discrete_tol: Fraction
    continuous_tol: Fraction
    jobs: int
    limit_ladder: List[Fraction]
    limit_points: List[Fraction]
    max_sum_terms: int

    @classmethod
    def from_env(cls) -> "Settings":
        load_dotenv()

        output_dir = Path(os.getenv("OUTPUT_DIR", "data"))
        precision = _to_int(os.getenv("PRECISION_BITS"), 256)
        if precision < 53:
            precision = 256
        discrete_tol = _to_fraction(os.getenv("DISCRETE_TOL", "1e-20"), Fraction(1, 10 ** 20))
        continuous_tol = _to_fraction(os.getenv("CONTINUOUS_TOL", "1e-12"), Fraction(1, 10 ** 12))
        cpu = os.cpu_count() or 1
        jobs = _to_int(os.getenv("JOBS"), cpu)
        if jobs < 1:
            jobs = cpu
        # Escada de a para o limite Charlier → Hermite (deve ser crescente)
        ladder = _fraction_list(os.getenv("LIMIT_A_LADDER", ""), [Fraction(10 ** 2), Fraction(10 ** 4), Fraction(10 ** 6)])
        points = _fraction_list(os.getenv("LIMIT_POINTS", ""), [Fraction(0), Fraction(1, 2), Fraction(1)])
        max_sum_terms = _to_int(os.getenv("MAX_SUM_TERMS"), 5000)

        return cls(
            output_dir=output_dir,
            precision=precision,
            discrete_tol=discrete_tol,
            continuous_tol=continuous_tol,
            jobs=jobs,
            limit_ladder=ladder,
            limit_points=points,
            max_sum_terms=max_sum_terms,
        )


def parse_int_list(text: str) -> List[int]:
    """"0,3,4" ou "2:6" (inclusivo) ou combinações "0,2:4"."""
    out: List[int] = []
    for part in (p.strip() for p in text.split(",")):
        if not part:
            continue
        if ":" in part:
            lo, hi = part.split(":", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def parse_grid(text: str) -> Tuple[Fraction, Fraction, Fraction]:
    """"lo:hi:step" com racionais ou decimais (ex.: -3:3:0.1)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grade deve ser lo:hi:step, recebido {text!r}")
    try:
        lo, hi, step = (Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"grade inválida {text!r}: {e}") from e
    if step <= 0 or hi < lo:
        raise ConfigError(f"grade inválida {text!r}: exige step > 0 e lo ≤ hi")
    return lo, hi, step


def grid_points(grid: Tuple[Fraction, Fraction, Fraction]) -> List[Fraction]:
    lo, hi, step = grid
    count = int((hi - lo) / step)
    return [lo + i * step for i in range(count + 1)]


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    F: FiniteSet = EMPTY
    a: Fraction | None = None
    n_values: List[int] = field(default_factory=list)
    nmax: int | None = None
    precision: int = 256
    discrete_tol: Fraction = Fraction(1, 10 ** 20)
    continuous_tol: Fraction = Fraction(1, 10 ** 12)
    out: Path = Path("data")
    jobs: int = 1
    suites: List[str] = field(default_factory=list)
    max_fk: int = 6
    family_file: Path | None = None
    family_param: Fraction | None = None
    evidence: str | None = None
    csv: bool = False
    omega: bool = False
    lambda_: bool = False
    q: bool = False
    operator: bool = False
    eval_grid: Tuple[Fraction, Fraction, Fraction] | None = None
    timings: bool = False
    limit_ladder: List[Fraction] = field(default_factory=list)
    limit_points: List[Fraction] = field(default_factory=list)
    max_sum_terms: int = 5000

    @classmethod
    def from_args(cls, args, settings: Settings) -> "RunConfig":
        """Argumentos do argparse sobre ``Settings``; valida tudo antes do despacho."""
        try:
            F = FiniteSet.parse(getattr(args, "set", "") or "")
        except ValueError as e:
            raise ConfigError(f"--set inválido: {e}") from e
        a = None
        if getattr(args, "a", None) is not None:
            try:
                a = Fraction(args.a.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ConfigError(f"--a inválido {args.a!r}: {e}") from e
        n_values: List[int] = []
        if getattr(args, "n", None):
            try:
                n_values = parse_int_list(args.n)
            except ValueError as e:
                raise ConfigError(f"--n inválido {args.n!r}") from e
        tol = getattr(args, "tol", None)
        discrete_tol, continuous_tol = settings.discrete_tol, settings.continuous_tol
        if tol is not None:
            try:
                discrete_tol = continuous_tol = Fraction(tol.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ConfigError(f"--tol inválido {tol!r}") from e
        family_param = None
        if getattr(args, "param", None) is not None:
            try:
                family_param = Fraction(args.param.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ConfigError(f"--param inválido {args.param!r}") from e
        grid = parse_grid(args.eval_grid) if getattr(args, "eval_grid", None) else None
        suites = list(getattr(args, "suite", None) or [])
        if "all" in suites:
            suites = list(SUITES)
        cfg = cls(
            command=args.command,
            family=getattr(args, "family", None),
            F=F,
            a=a,
            n_values=n_values,
            nmax=getattr(args, "nmax", None),
            precision=getattr(args, "precision", None) or settings.precision,
            discrete_tol=discrete_tol,
            continuous_tol=continuous_tol,
            out=Path(getattr(args, "out", None) or settings.output_dir),
            jobs=getattr(args, "jobs", None) or settings.jobs,
            suites=suites,
            max_fk=getattr(args, "max_fk", None) or 6,
            family_file=Path(args.family_file) if getattr(args, "family_file", None) else None,
            family_param=family_param,
            evidence=getattr(args, "evidence", None),
            csv=bool(getattr(args, "csv", False)),
            omega=bool(getattr(args, "omega", False)),
            lambda_=bool(getattr(args, "lambda_", False)),
            q=bool(getattr(args, "q", False)),
            operator=bool(getattr(args, "operator", False)),
            eval_grid=grid,
            timings=bool(getattr(args, "timings", False)),
            limit_ladder=list(settings.limit_ladder),
            limit_points=list(settings.limit_points),
            max_sum_terms=settings.max_sum_terms,
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        allowed = SCAN_FAMILIES if self.command == "scan" else FAMILIES
        if self.family is not None and self.family not in allowed:
            raise ConfigError(f"--family deve ser um de {allowed}")
        if self.precision < 53:
            raise ConfigError("--precision deve ser ≥ 53 bits")
        if self.discrete_tol <= 0 or self.continuous_tol <= 0:
            raise ConfigError("--tol deve ser positivo")
        if self.jobs < 1:
            raise ConfigError("--jobs deve ser ≥ 1")
        if self.max_fk < 1:
            raise ConfigError("--max-fk deve ser ≥ 1")
        if any(n < 0 for n in self.n_values):
            raise ConfigError("--n não aceita índices negativos")
        if self.nmax is not None and self.nmax < 0:
            raise ConfigError("--nmax deve ser ≥ 0")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ConfigError(f"suíte desconhecida: {', '.join(unknown)}")
        if self.a is not None and self.a == 0:
            raise ConfigError("--a deve ser não nulo")
        if self.command == "generate":
            if self.family is None:
                raise ConfigError("generate exige --family")
            if self.family == "charlier" and self.a is None:
                raise ConfigError("--family charlier exige --a")
            if self.q and (self.a is None or self.a <= 0):
                raise ConfigError("--q exige a > 0")
            if (self.q or self.lambda_) and self.family != "charlier":
                raise ConfigError("--q e --lambda só valem para --family charlier")
            if self.eval_grid is not None and not self.n_values:
                raise ConfigError("--eval-grid exige --n")
            if self.csv and self.eval_grid is None:
                raise ConfigError("--csv exige --eval-grid")
        if self.command == "verify":
            if not self.F.k:
                raise ConfigError("verify exige --set não vazio")
            if self.family == "charlier" and self.a is None:
                raise ConfigError("--family charlier exige --a")
        if self.command == "scan":
            if self.evidence is not None and self.family_file is not None:
                raise ConfigError("--evidence e --family-file são exclusivos")
            if self.family is None and self.family_file is None and self.evidence is None:
                self.family = "hermite"

    @property
    def charlier_a(self) -> Fraction | None:
        """Parâmetro a para as suítes Charlier (None se a família pedida é só Hermite)."""
        if self.family == "hermite":
            return None
        return self.a if self.a is not None else Fraction(1)

    @property
    def run_hermite(self) -> bool:
        return self.family in (None, "hermite")
