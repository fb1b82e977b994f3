"""Famílias clássicas: Charlier c_n^a e Hermite H_n.

Os polinômios vêm da soma explícita e são conferidos contra a recorrência
de três termos; as relações (operador, escadas, dualidade) são verificadas
como identidades polinomiais exatas.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Sequence, Union

import mpmath

from .polycore import Poly
from .reports import VerificationReport
from .scalars import DualRational, eval_mpf, to_mpf, to_rational

Param = Union[Fraction, DualRational]


@dataclass(frozen=True)
class CharlierFamily:
    a: Param

    def __post_init__(self):
        a = self.a if isinstance(self.a, DualRational) else to_rational(self.a)
        if a == 0 or (isinstance(a, DualRational) and a.value == 0):
            raise ValueError("o parâmetro a deve ser não nulo")
        object.__setattr__(self, "a", a)

    @property
    def rational_a(self) -> Fraction:
        return self.a.value if isinstance(self.a, DualRational) else self.a

    def poly(self, n: int) -> Poly:
        return charlier_poly(self, n)


@dataclass(frozen=True)
class HermiteFamily:
    def poly(self, n: int) -> Poly:
        return hermite_poly(n)


def _param(fam_or_a) -> Param:
    if isinstance(fam_or_a, CharlierFamily):
        return fam_or_a.a
    return CharlierFamily(fam_or_a).a


@lru_cache(maxsize=None)
def _falling(j: int) -> Poly:
    return Poly.falling_factorial(j)


@lru_cache(maxsize=None)
def _charlier(a: Param, n: int) -> Poly:
    if n < 0:
        return Poly.zero()
    out = Poly.zero()
    for j in range(n + 1):
        coef = (-a) ** (n - j) / (math.factorial(n - j) * math.factorial(j))
        out = out + _falling(j) * coef
    return out


def charlier_poly(fam_or_a, n: int) -> Poly:
    """c_n^a; zero para n < 0."""
    return _charlier(_param(fam_or_a), n)


@lru_cache(maxsize=None)
def hermite_poly(n: int) -> Poly:
    if n < 0:
        return Poly.zero()
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = Fraction(
            math.factorial(n) * (-1) ** j * 2 ** (n - 2 * j),
            math.factorial(j) * math.factorial(n - 2 * j),
        )
    return Poly(tuple(coeffs))


def charlier_from_recurrence(fam_or_a, nmax: int) -> List[Poly]:
    """Segundo caminho: (n+1)c_{n+1} = (x − n − a)c_n − a c_{n−1}."""
    a = _param(fam_or_a)
    x = Poly.x()
    out = [Poly.one()]
    prev = Poly.zero()
    for n in range(nmax):
        nxt = ((x - (n + a)) * out[n] - prev * a) / (n + 1)
        prev = out[n]
        out.append(nxt)
    return out


def hermite_from_recurrence(nmax: int) -> List[Poly]:
    x = Poly.x()
    out = [Poly.one()]
    prev = Poly.zero()
    for n in range(nmax):
        nxt = x * out[n] * 2 - prev * (2 * n)
        prev = out[n]
        out.append(nxt)
    return out


def charlier_classical_op(p: Poly, a) -> Poly:
    """D_a = −x S_{−1} + (x+a) S_0 − a S_1 aplicado a p."""
    x = Poly.x()
    return -x * p.shift(-1) + (x + a) * p - p.shift(1) * a


def hermite_classical_op(p: Poly) -> Poly:
    """D = ∂² − 2x∂."""
    return p.derivative(2) - Poly.x() * p.derivative() * 2


def _dual_parts(p: Poly):
    value = p.map(lambda c: c.value if isinstance(c, DualRational) else c)
    deriv = p.map(lambda c: c.derivative if isinstance(c, DualRational) else Fraction(0))
    return value, deriv


def verify_charlier_relations(fam, nmax: int) -> VerificationReport:
    if nmax < 1:
        raise ValueError("nmax deve ser ≥ 1")
    fam = fam if isinstance(fam, CharlierFamily) else CharlierFamily(fam)
    a = fam.rational_a
    rep = VerificationReport("charlier_relations", inputs={"a": a, "nmax": nmax})
    x = Poly.x()
    by_rec = charlier_from_recurrence(a, nmax + 1)
    dual_a = DualRational.variable(a)
    for n in range(nmax + 1):
        c = charlier_poly(a, n)
        rep.compare(c, by_rec[n], relation="explicit_vs_recurrence", n=n)
        rep.compare(
            x * c,
            charlier_poly(a, n + 1) * (n + 1) + c * (n + a) + charlier_poly(a, n - 1) * a,
            relation="three_term", n=n,
        )
        rep.compare(charlier_classical_op(c, a), c * n, relation="eigen", n=n)
        rep.compare(c.shift(1) - c, charlier_poly(a, n - 1), relation="forward_difference", n=n)
        value, deriv = _dual_parts(charlier_poly(dual_a, n))
        rep.compare(value, c, relation="dual_value", n=n)
        rep.compare(deriv, -charlier_poly(a, n - 1), relation="d_da", n=n)
        rep.record(c.degree == n and c.leading == Fraction(1, math.factorial(n)),
                   relation="degree_leading", n=n, degree=c.degree)
    return rep.finish()


def charlier_duality_check(fam, nmax: int, mmax: int) -> VerificationReport:
    fam = fam if isinstance(fam, CharlierFamily) else CharlierFamily(fam)
    a = fam.rational_a
    rep = VerificationReport("charlier_duality", inputs={"a": a, "nmax": nmax, "mmax": mmax})
    for n in range(nmax + 1):
        for m in range(mmax + 1):
            lhs = (-1) ** m * a ** m * math.factorial(n) * charlier_poly(a, n)(m)
            rhs = (-1) ** n * a ** n * math.factorial(m) * charlier_poly(a, m)(n)
            rep.compare(lhs, rhs, n=n, m=m)
    return rep.finish()


def hermite_relations(nmax: int) -> VerificationReport:
    rep = VerificationReport("hermite_relations", inputs={"nmax": nmax})
    by_rec = hermite_from_recurrence(nmax)
    for n in range(nmax + 1):
        h = hermite_poly(n)
        rep.compare(h, by_rec[n], relation="explicit_vs_recurrence", n=n)
        rep.compare(h.derivative(), hermite_poly(n - 1) * (2 * n), relation="derivative_ladder", n=n)
        rep.compare(h.reflect(), h * (-1) ** n, relation="parity", n=n)
        rep.compare(hermite_classical_op(h), h * (-2 * n), relation="eigen", n=n)
        rep.record(h.degree == n and h.leading == 2 ** n, relation="degree_leading", n=n)
    return rep.finish()


def decreasing_deviations(devs: Sequence[mpmath.mpf], precision: int) -> bool:
    """Decaimento estrito; dois desvios abaixo do ruído de arredondamento contam como zero."""
    eps = mpmath.mpf(2) ** (-(precision // 2))
    for d0, d1 in zip(devs, devs[1:]):
        if d0 <= eps and d1 <= eps:
            continue
        if not d1 < d0:
            return False
    return True


def limit_deviation_report(
    name: str,
    scaled: Callable[[Fraction], tuple],
    target: Poly,
    a_sequence: Sequence,
    at_points: Sequence,
    precision: int,
    inputs: dict,
) -> VerificationReport:
    """Tabela de desvios max_x |escala·p_a(√(2a)x + a) − alvo(x)| ao longo de a.

    ``scaled(a)`` devolve (polinômio exato em a, expoente e) e o valor comparado
    é (2/a)^(e/2)·p(√(2a)x + a).
    """
    a_seq = [to_rational(a) for a in a_sequence]
    if any(a <= 0 for a in a_seq) or any(b <= a for a, b in zip(a_seq, a_seq[1:])):
        raise ValueError("a_sequence deve ser positiva e estritamente crescente")
    pts = [to_rational(p) for p in at_points]
    rep = VerificationReport(name, inputs={**inputs, "a": a_seq, "points": pts, "precision": precision})
    devs = []
    with mpmath.workprec(precision):
        for a in a_seq:
            poly, e = scaled(a)
            A = to_mpf(a)
            s = mpmath.sqrt(2 * A)
            factor = (2 / A) ** (mpmath.mpf(e) / 2)
            dev = mpmath.mpf(0)
            for x in pts:
                X = to_mpf(x)
                v = factor * eval_mpf(poly.coeffs, s * X + A)
                dev = max(dev, abs(v - eval_mpf(target.coeffs, X)))
            devs.append(dev)
        table = [{"a": a, "deviation": d} for a, d in zip(a_seq, devs)]
        rep.notes["deviations"] = table
        rep.record(decreasing_deviations(devs, precision), deviations=table)
    return rep.finish()


def hermite_limit_check(F_or_n, a_sequence: Sequence, at_points: Sequence,
                        n: int | None = None, precision: int = 256) -> VerificationReport:
    """Limite Charlier → Hermite; com um conjunto F usa c_n^{a;F} e H_n^F/((n−u_F)!ν_F)."""
    if isinstance(F_or_n, int):
        n, F = F_or_n, None
    else:
        F = F_or_n
        if n is None:
            raise ValueError("informe n junto com F")
    if F is None or not F.k:
        target = hermite_poly(n) / math.factorial(n)
        return limit_deviation_report(
            "hermite_limit", lambda a: (charlier_poly(a, n), n), target,
            a_sequence, at_points, precision, {"n": n},
        )
    from .exceptional import charlier_exceptional, hermite_exceptional  # evita import circular
    from .fsets import nu, set_indices

    idx = set_indices(F)
    if not idx.contains(n):
        raise ValueError(f"n={n} fora de σ_F para F={F}")
    u = idx.u
    target = hermite_exceptional(n, F) / (math.factorial(n - u) * nu(F))
    return limit_deviation_report(
        "hermite_limit", lambda a: (charlier_exceptional(n, F, a), n), target,
        a_sequence, at_points, precision, {"n": n, "F": F},
    )
