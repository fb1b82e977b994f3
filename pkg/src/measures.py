"""Medidas, transformada de Christoffel q_n^F e produtos internos com cota de erro.

Tudo o que não envolve e^a ou √π é conferido de forma exata; as fórmulas de
norma são conferidas numericamente com cota de erro explícita.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence

import mpmath

from .errors import PreconditionError, ToleranceError
from .exceptional import casorati_polys, charlier_exceptional, hermite_exceptional, hermite_omega
from .families import charlier_poly
from .fsets import FiniteSet, involution, is_admissible, product_nonnegative_on_naturals, set_indices, u_index
from .polycore import (
    Poly,
    RationalFunction,
    SignVerdict,
    cauchy_bound,
    integer_zeros,
    poly_det,
    real_root_count,
    scalar_det,
    sign_constant_on_naturals,
)
from .reports import VerificationReport
from .scalars import to_mpf, to_rational

DEFAULT_PRECISION = 256
DEFAULT_MAX_TERMS = 5000


def _as_tol(tol) -> Fraction:
    if isinstance(tol, float):
        return Fraction(tol)
    return to_rational(tol)


def _check_reachable(tol: Fraction, precision: int) -> None:
    if tol <= 0 or tol < Fraction(1, 2 ** (precision - 4)):
        raise ToleranceError(f"tolerância {tol} inalcançável com {precision} bits")


def _fact_prod(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out *= math.factorial(v)
    return out


# medidas

@dataclass(frozen=True)
class DiscreteMeasure:
    """Σ_{x ≥ offset} factor(x)·a^{x−offset}/(x−offset)! δ_x."""

    a: Fraction
    factor: RationalFunction = RationalFunction(Poly.one())
    offset: int = 0
    name: str = "discrete"

    def mass(self, x: int) -> Fraction:
        if x < self.offset:
            return Fraction(0)
        y = x - self.offset
        return self.factor(x) * self.a ** y / math.factorial(y)

    def to_json(self) -> dict:
        return {"name": self.name, "a": str(self.a), "offset": self.offset, "factor": self.factor.to_json()}


@dataclass(frozen=True)
class ContinuousWeight:
    """e^{−x²}/den(x)²; ``den`` sem zeros reais."""

    den: Poly = Poly.one()
    name: str = "hermite"

    def __post_init__(self):
        if self.den.is_zero():
            raise ValueError("denominador nulo")
        if self.den.degree > 0 and real_root_count(self.den) > 0:
            raise PreconditionError(f"denominador do peso tem zeros reais: {self.den}", witness=self.den)

    def to_json(self) -> dict:
        return {"name": self.name, "den": self.den.to_json()}


def charlier_measure(a) -> DiscreteMeasure:
    return DiscreteMeasure(a=to_rational(a), name="rho_a")


def christoffel_measure(F: FiniteSet, a) -> DiscreteMeasure:
    """ρ_a^F: fator ∏(x−f−u_F), suporte a partir de u_F."""
    u = u_index(F)
    ann = Poly.from_roots([f + u for f in F])
    return DiscreteMeasure(a=to_rational(a), factor=RationalFunction(ann), offset=u, name="rho_a_F")


def exceptional_measure(F: FiniteSet, a) -> DiscreteMeasure:
    """ω_{a;F}: massa a^x/(x!Ω(x)Ω(x+1)); exige Ω_F^a(n) ≠ 0 em ℕ."""
    a = to_rational(a)
    omega = casorati_polys(F, a).omega
    zeros = integer_zeros(omega, lo=0)
    if zeros:
        raise PreconditionError(f"Ω_F^a se anula em n={zeros[0]}", witness=zeros[0])
    factor = RationalFunction(Poly.one(), omega * omega.shift(1))
    return DiscreteMeasure(a=a, factor=factor, name="omega_a_F")


def hermite_weight(F: FiniteSet) -> ContinuousWeight:
    return ContinuousWeight(den=hermite_omega(F), name="omega_F")


# produtos internos

@dataclass
class InnerProductResult:
    value: mpmath.mpf
    error_bound: mpmath.mpf
    terms: int
    precision: int = DEFAULT_PRECISION
    notes: dict = field(default_factory=dict)

    def contains(self, target: mpmath.mpf, slack: mpmath.mpf = mpmath.mpf(0)) -> bool:
        return abs(self.value - target) <= self.error_bound + slack

    def relative_bound(self, target: mpmath.mpf) -> mpmath.mpf:
        return self.error_bound / abs(target) if target else mpmath.inf

    def to_json(self) -> dict:
        return {
            "value": mpmath.nstr(self.value, 30),
            "error_bound": mpmath.nstr(self.error_bound, 10),
            "terms": self.terms,
            "precision": self.precision,
        }


def _ratio_bound(x: int, R: Fraction, d: int, a: Fraction, offset: int) -> Fraction:
    """Cota de |t_{x+1}/t_x| para x > R: ((x+1+R)/(x−R))^d·|a|/(x+1−offset)."""
    return ((x + 1 + R) / (x - R)) ** d * abs(a) / (x + 1 - offset)


def discrete_inner(p: Poly, q: Poly, measure: DiscreteMeasure, precision: int = DEFAULT_PRECISION,
                   tol=Fraction(1, 10 ** 20), max_terms: int = DEFAULT_MAX_TERMS) -> InnerProductResult:
    """Soma exata em ``Fraction`` com cauda dominada por série geométrica.

    A partir de x > cota de Cauchy das raízes de p·q·fator e com razão ≤ 1/2,
    a cauda após o termo t_x é ≤ |t_x|·ρ/(1−ρ); para quando isso fica abaixo
    de ``tol``·Σ|t|.
    """
    tol = _as_tol(tol)
    _check_reachable(tol, precision)
    num = p * q * measure.factor.num
    den = measure.factor.den
    if num.is_zero():
        return InnerProductResult(mpmath.mpf(0), mpmath.mpf(0), 0, precision)
    R = max(cauchy_bound(num), cauchy_bound(den))
    d = max(num.degree, 0)
    x0 = max(measure.offset + 2 * math.ceil(abs(measure.a)), measure.offset + 4 * d, math.floor(R) + 1)
    total = Fraction(0)
    abs_total = Fraction(0)
    x = measure.offset
    terms = 0
    tail = None
    while True:
        if terms >= max_terms:
            raise ToleranceError(f"cota de cauda não atingida em {max_terms} termos")
        t = p(x) * q(x) * measure.mass(x)
        total += t
        abs_total += abs(t)
        terms += 1
        if x >= x0 and x > R:
            rho = _ratio_bound(x, R, d, measure.a, measure.offset)
            if rho <= Fraction(1, 2):
                tail = abs(t) * rho / (1 - rho)
                if tail <= tol * abs_total:
                    break
        x += 1
    with mpmath.workprec(precision):
        value = to_mpf(total)
        rounding = abs(value) * mpmath.ldexp(1, 1 - precision)
        bound = to_mpf(tail) + rounding
    return InnerProductResult(value, bound, terms, precision, notes={"last_x": x})


def _abs_coeff_sum(p: Poly) -> Fraction:
    return sum((abs(c) for c in p.coeffs), Fraction(0))


def continuous_inner(p: Poly, q: Poly, weight: ContinuousWeight, precision: int = DEFAULT_PRECISION,
                     tol=Fraction(1, 10 ** 12)) -> InnerProductResult:
    """∫ p q e^{−x²}/den² em [−R, R] por quadratura do mpmath, mais cota analítica da cauda.

    Para |x| ≥ R ≥ max(1, 2Σ_{i<e}|d_i|/|d_e|) vale |den(x)| ≥ |d_e||x|^e/2, logo
    |integrando| ≤ K|x|^E e^{−x²} e cada cauda é ≤ (K/2)Γ((E+1)/2, R²).

    Só a cauda é cota rigorosa: o erro da quadratura em [−R, R] é a estimativa
    do próprio ``mpmath.quad`` (diferença entre graus sucessivos), registrada em
    ``notes["quad_error_kind"] = "estimate"``. O ``error_bound`` devolvido soma
    as duas parcelas e deve ser lido como estimativa, não como certificado.
    """
    tol = _as_tol(tol)
    _check_reachable(tol, precision)
    pq = p * q
    if pq.is_zero():
        return InnerProductResult(mpmath.mpf(0), mpmath.mpf(0), 0, precision)
    den = weight.den
    e = den.degree
    lead = abs(den.leading)
    R0 = max(Fraction(1), 2 * _abs_coeff_sum(Poly(den.coeffs[:-1])) / lead) if e > 0 else Fraction(1)
    K = _abs_coeff_sum(pq) * 4 / (lead * lead)
    E = max(pq.degree - 2 * e, 0)
    with mpmath.workprec(precision):
        pq_c = [to_mpf(c) for c in reversed(pq.coeffs)]
        den_c = [to_mpf(c) for c in reversed(den.coeffs)]

        def g(x):
            return mpmath.polyval(pq_c, x) * mpmath.exp(-x * x) / mpmath.polyval(den_c, x) ** 2

        def tail(R):
            return to_mpf(K) * mpmath.gammainc(mpmath.mpf(E + 1) / 2, R * R)

        R = math.ceil(R0) + 1
        scale = abs(mpmath.quad(g, [-1, 0, 1])) or mpmath.mpf(1)
        while tail(R) > to_mpf(tol) * scale / 4:
            R += 1
        while True:
            nodes = list(range(-R, R + 1))
            value, err = mpmath.quad(g, nodes, error=True)
            abs_value = mpmath.quad(lambda x: abs(g(x)), nodes)
            if tail(R) <= to_mpf(tol) * max(abs(value), abs_value) / 4:
                break
            R += 2
        tail_bound = tail(R)
        bound = err + tail_bound + abs(value) * mpmath.ldexp(1, 1 - precision)
    notes = {"R": R, "quad_error": err, "quad_error_kind": "estimate", "tail_bound": tail_bound}
    return InnerProductResult(value, bound, len(nodes), precision, notes=notes)


# transformada de Christoffel

def phi(n: int, F: FiniteSet, a) -> Fraction:
    """Φ_n^F = |c_{n+j−1}^a(f_i)|."""
    a = to_rational(a)
    return scalar_det([[charlier_poly(a, n + j)(f) for j in range(F.k)] for f in F]) if F.k else Fraction(1)


def psi(n: int, F: FiniteSet, a) -> Fraction:
    """Ψ_n^F: colunas n, ..., n+k−2, n+k; zero para F = ∅."""
    if not F.k:
        return Fraction(0)
    a = to_rational(a)
    cols = list(range(F.k - 1)) + [F.k]
    return scalar_det([[charlier_poly(a, n + j)(f) for j in cols] for f in F])


def christoffel_q(n: int, F: FiniteSet, a) -> Poly:
    """q_n^F: determinante orlado dividido exatamente por ∏(x−f−u_F)."""
    a = to_rational(a)
    if n < 0:
        return Poly.zero()
    u = u_index(F)
    rows = [[charlier_poly(a, n + j).shift(-u) for j in range(F.k + 1)]]
    for f in F:
        rows.append([Poly.constant(charlier_poly(a, n + j)(f)) for j in range(F.k + 1)])
    ann = Poly.from_roots([f + u for f in F])
    return poly_det(rows).exact_div(ann)


def alpha_constant(n: int, F: FiniteSet, a) -> Fraction:
    a = to_rational(a)
    k, u = F.k, u_index(F)
    den = 1
    for i in range(1, k + 1):
        den *= math.factorial(n + i)
    return Fraction((-1) ** (k * (n + 1))) * a ** (k * (n - 1) - u) * _fact_prod(F) / den


def christoffel_q_alt(n: int, F: FiniteSet, a) -> Poly:
    """q_n^F via G = I(F); vale quando Ω_F^a(n) ≠ 0 em ℕ."""
    a = to_rational(a)
    if not F.k:
        return charlier_poly(a, n)
    G = involution(F)
    v = set_indices(F).v
    rows = [[charlier_poly(a, n - j).shift(-v) * (-1) ** j for j in range(G.k + 1)]]
    for g in G:
        c = charlier_poly(-a, g)
        rows.append([Poly.constant(c(-n - 1 + j)) for j in range(G.k + 1)])
    return poly_det(rows) * alpha_constant(n, F, a)


def largest_integer_zero(F: FiniteSet, a) -> int:
    """x_a^F: maior zero natural de Ω_F^a, −1 se não houver."""
    zeros = integer_zeros(casorati_polys(F, a).omega, lo=0)
    return zeros[-1] if zeros else -1


def xi(u: int, F: FiniteSet, a) -> Fraction:
    a = to_rational(a)
    den = 1
    for i in range(F.k + 1):
        den *= math.factorial(u + i)
    return (-a) ** ((F.k + 1) * u) / den


def zeta(v: int, F: FiniteSet, a) -> Fraction:
    a = to_rational(a)
    u = u_index(F)
    den = Fraction(1)
    for f in F:
        den *= v - f - u
    return (-a) ** (-v) * math.factorial(v - u) * _fact_prod(F) / den


def duality_checks(F: FiniteSet, a, umax: int = 8, extra: int = 5) -> VerificationReport:
    """q_u^F(v) = ξ_u ζ_v c_v^F(u) e as dualidades de Ω_F(n) com Φ_n e de Λ_F(n) com Ψ_n."""
    a = to_rational(a)
    rep = VerificationReport("duality_christoffel", inputs={"F": F, "a": a, "umax": umax})
    idx = set_indices(F)
    k, u_F = F.k, idx.u
    vs = idx.upto(idx.v + extra)
    for u in range(umax + 1):
        q = christoffel_q(u, F, a)
        for v in vs:
            rep.compare(q(v), xi(u, F, a) * zeta(v, F, a) * charlier_exceptional(v, F, a)(u),
                        relation="q_vs_c", u=u, v=v)
    data = casorati_polys(F, a)
    for n in range(umax + 1):
        num = 1
        for i in range(k):
            num *= math.factorial(n + i)
        rhs = Fraction(num) / ((-a) ** (k * (n - 1) - u_F) * _fact_prod(F)) * phi(n, F, a)
        rep.compare(data.omega(n), rhs, relation="omega_phi", n=n)
        if k:
            num = math.factorial(n + k)
            for i in range(k - 1):
                num *= math.factorial(n + i)
            rhs = Fraction(num) / ((-a) ** (k * (n - 1) - u_F + 1) * _fact_prod(F)) * psi(n, F, a)
            rep.compare(data.lambda_(n), rhs, relation="lambda_psi", n=n)
    return rep.finish()


def christoffel_alt_check(F: FiniteSet, a, nmax: int = 6) -> VerificationReport:
    a = to_rational(a)
    rep = VerificationReport("christoffel_alt", inputs={"F": F, "a": a, "nmax": nmax})
    if largest_integer_zero(F, a) >= 0:
        rep.notes["skipped"] = "Ω_F^a se anula em ℕ"
        return rep.finish()
    for n in range(nmax + 1):
        rep.compare(christoffel_q_alt(n, F, a), christoffel_q(n, F, a), n=n)
    return rep.finish()


@dataclass(frozen=True)
class RecurrenceCoefficients:
    a_n: Fraction
    b_n: Fraction
    c_n: Fraction


def q_recurrence_coefficients(n: int, F: FiniteSet, a) -> RecurrenceCoefficients:
    a = to_rational(a)
    k, u = F.k, u_index(F)
    ph0, ph1 = phi(n, F, a), phi(n + 1, F, a)
    if ph0 == 0 or ph1 == 0:
        raise ZeroDivisionError(f"Φ_n nulo para n={n}")
    an = (n + k + 1) * ph0 / ph1
    bn = (n + k + a + u) + (n + k + 1) * psi(n + 1, F, a) / ph1 - (n + k) * psi(n, F, a) / ph0
    cn = a * ph1 / ph0
    return RecurrenceCoefficients(an, bn, cn)


def q_recurrence_check(F: FiniteSet, a, n_values: Iterable[int]) -> VerificationReport:
    """x q_n = a_n^Q q_{n+1} + b_n^Q q_n + c_n^Q q_{n−1}, só para n > x_a^F + 1."""
    a = to_rational(a)
    x_top = largest_integer_zero(F, a)
    rep = VerificationReport("q_recurrence", inputs={"F": F, "a": a, "x_a_F": x_top})
    X = Poly.x()
    empty_zero_set = x_top < 0
    for n in n_values:
        if not empty_zero_set and n <= x_top + 1:
            rep.notes.setdefault("outside_regime", []).append(n)
            continue
        try:
            co = q_recurrence_coefficients(n, F, a)
        except ZeroDivisionError:
            rep.notes.setdefault("phi_zero", []).append(n)
            continue
        prev = christoffel_q(n - 1, F, a) if n > 0 else Poly.zero()
        rhs = christoffel_q(n + 1, F, a) * co.a_n + christoffel_q(n, F, a) * co.b_n + prev * co.c_n
        rep.compare(X * christoffel_q(n, F, a), rhs, n=n)
    return rep.finish()


# normas

def charlier_norm(n: int, F: FiniteSet, a) -> mpmath.mpf:
    """a^{n−u_F−k} e^a ∏(n−f−u_F)/(n−u_F)!, no contexto corrente do mpmath."""
    a = to_rational(a)
    u = u_index(F)
    prod = Fraction(1)
    for f in F:
        prod *= n - f - u
    exact = a ** (n - u - F.k) * prod / math.factorial(n - u)
    return to_mpf(exact) * mpmath.exp(to_mpf(a))


def hermite_norm(n: int, F: FiniteSet) -> mpmath.mpf:
    """√π 2^{n−u_F+k}(n−u_F)! ∏(n−f−u_F)."""
    u = u_index(F)
    prod = Fraction(1)
    for f in F:
        prod *= n - f - u
    exact = Fraction(2) ** (n - u + F.k) * math.factorial(n - u) * prod
    return to_mpf(exact) * mpmath.sqrt(mpmath.pi)


def _norm_record(rep: VerificationReport, res: InnerProductResult, expected, tol, n: int, table: list) -> None:
    slack = abs(expected) * mpmath.ldexp(1, 8 - res.precision)
    rel = res.relative_bound(expected)
    ok = res.contains(expected, slack) and rel <= to_mpf(_as_tol(tol))
    table.append({"n": n, "value": res.value, "expected": expected, "error_bound": res.error_bound})
    rep.record(ok, n=n, value=res.value, expected=expected, error_bound=res.error_bound)


def charlier_norm_check(F: FiniteSet, a, n_values: Iterable[int], precision: int = DEFAULT_PRECISION,
                        tol=Fraction(1, 10 ** 20), max_terms: int = DEFAULT_MAX_TERMS) -> VerificationReport:
    a = to_rational(a)
    rep = VerificationReport("norm_charlier", inputs={"F": F, "a": a, "tol": tol, "precision": precision})
    measure = exceptional_measure(F, a) if F.k else charlier_measure(a)
    table: list = []
    with mpmath.workprec(precision):
        for n in n_values:
            c = charlier_exceptional(n, F, a)
            res = discrete_inner(c, c, measure, precision, tol, max_terms)
            _norm_record(rep, res, charlier_norm(n, F, a), tol, n, table)
    rep.notes["table"] = table
    return rep.finish()


def hermite_norm_check(F: FiniteSet, n_values: Iterable[int], precision: int = DEFAULT_PRECISION,
                       tol=Fraction(1, 10 ** 12)) -> VerificationReport:
    rep = VerificationReport("norm_hermite", inputs={"F": F, "tol": tol, "precision": precision})
    weight = hermite_weight(F)
    table: list = []
    with mpmath.workprec(precision):
        for n in n_values:
            h = hermite_exceptional(n, F)
            res = continuous_inner(h, h, weight, precision, tol)
            _norm_record(rep, res, hermite_norm(n, F), tol, n, table)
    rep.notes["table"] = table
    return rep.finish()


def q_norm_check(F: FiniteSet, a, n_values: Iterable[int], precision: int = DEFAULT_PRECISION,
                 tol=Fraction(1, 10 ** 20), max_terms: int = DEFAULT_MAX_TERMS) -> VerificationReport:
    """⟨q_n,q_n⟩_{ρ_a^F} = (−1)^k (n!/(n+k)!) Φ_nΦ_{n+1} a^n e^a/n!."""
    a = to_rational(a)
    rep = VerificationReport("norm_christoffel_q", inputs={"F": F, "a": a, "tol": tol})
    measure = christoffel_measure(F, a)
    x_top = largest_integer_zero(F, a)
    table: list = []
    with mpmath.workprec(precision):
        for n in n_values:
            if x_top >= 0 and n <= x_top + 1:
                rep.notes.setdefault("outside_regime", []).append(n)
                continue
            q = christoffel_q(n, F, a)
            exact = (Fraction((-1) ** F.k * math.factorial(n), math.factorial(n + F.k))
                     * phi(n, F, a) * phi(n + 1, F, a) * a ** n / math.factorial(n))
            expected = to_mpf(exact) * mpmath.exp(to_mpf(a))
            res = discrete_inner(q, q, measure, precision, tol, max_terms)
            _norm_record(rep, res, expected, tol, n, table)
    rep.notes["table"] = table
    return rep.finish()


def orthogonality_check(F: FiniteSet, a, n_values: Sequence[int], precision: int = DEFAULT_PRECISION,
                        tol=None, max_terms: int = DEFAULT_MAX_TERMS) -> VerificationReport:
    """|⟨p_n, p_m⟩| ≤ cota para n ≠ m (Charlier com ``a``; Hermite com ``a=None``)."""
    hermite = a is None
    name = "orthogonality_hermite" if hermite else "orthogonality_charlier"
    rep = VerificationReport(name, inputs={"F": F, "n": list(n_values), **({} if hermite else {"a": to_rational(a)})})
    if hermite:
        weight = hermite_weight(F)
        polys = {n: hermite_exceptional(n, F) for n in n_values}
        inner: Callable = lambda p, q: continuous_inner(p, q, weight, precision, tol or Fraction(1, 10 ** 12))
    else:
        measure = exceptional_measure(F, a)
        rep.notes["signed"] = not is_admissible(F).admissible
        polys = {n: charlier_exceptional(n, F, a) for n in n_values}
        inner = lambda p, q: discrete_inner(p, q, measure, precision, tol or Fraction(1, 10 ** 20), max_terms)
    with mpmath.workprec(precision):
        ns = list(n_values)
        for i, n in enumerate(ns):
            for m in ns[i + 1:]:
                res = inner(polys[n], polys[m])
                rep.record(res.contains(mpmath.mpf(0)), n=n, m=m, value=res.value, error_bound=res.error_bound)
    return rep.finish()


# positividade

@dataclass(frozen=True)
class PositivityVerdict:
    admissible: bool
    rho_positive: bool
    omega_sign_constant: bool
    omega_verdict: SignVerdict
    measure: str

    @property
    def equivalent(self) -> bool:
        return self.admissible == self.rho_positive == self.omega_sign_constant

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible,
            "rho_positive": self.rho_positive,
            "omega_sign_constant": self.omega_sign_constant,
            "omega_verdict": self.omega_verdict.value,
            "measure": self.measure,
            "equivalent": self.equivalent,
        }


def positivity_scan(F: FiniteSet, a) -> PositivityVerdict:
    """Admissível ⇔ ρ_a^F positiva ⇔ Ω_F^a de sinal constante em ℕ (a > 0)."""
    a = to_rational(a)
    if a <= 0:
        raise ValueError("positivity_scan exige a > 0")
    verdict = sign_constant_on_naturals(casorati_polys(F, a).omega)
    constant = verdict in (SignVerdict.ALWAYS_POSITIVE, SignVerdict.ALWAYS_NEGATIVE)
    admissible = is_admissible(F).admissible
    if verdict is SignVerdict.HAS_INTEGER_ZERO:
        kind = "undefined"
    else:
        kind = "positive" if constant and admissible else "signed"
    return PositivityVerdict(
        admissible=admissible,
        rho_positive=product_nonnegative_on_naturals(F),
        omega_sign_constant=constant,
        omega_verdict=verdict,
        measure=kind,
    )


def positivity_report(sets: Iterable[FiniteSet], a) -> VerificationReport:
    rep = VerificationReport("positivity", inputs={"a": to_rational(a)})
    tallies = {"positive": 0, "signed": 0, "undefined": 0}
    for F in sets:
        v = positivity_scan(F, a)
        tallies[v.measure] += 1
        rep.record(v.equivalent, F=F, verdict=v)
    rep.notes["measures"] = tallies
    return rep.finish()


# Parseval

@dataclass
class ParsevalResult:
    point: int
    sums: List[mpmath.mpf]
    norm_squared: mpmath.mpf
    monotone: bool
    bounded: bool

    def to_json(self) -> dict:
        return {
            "point": self.point,
            "sums": [mpmath.nstr(s, 20) for s in self.sums],
            "norm_squared": mpmath.nstr(self.norm_squared, 20),
            "monotone": self.monotone,
            "bounded": self.bounded,
        }


def parseval_partial_sums(F: FiniteSet, a, point: int, count: int = 30,
                          precision: int = DEFAULT_PRECISION) -> ParsevalResult:
    """Somas de Bessel de f = δ_point na base c_n^F, com as normas fechadas."""
    a = to_rational(a)
    measure = exceptional_measure(F, a) if F.k else charlier_measure(a)
    idx = set_indices(F)
    w = measure.mass(point)
    sums: List[mpmath.mpf] = []
    with mpmath.workprec(precision):
        acc = mpmath.mpf(0)
        for n in idx.first(count):
            coef = w * charlier_exceptional(n, F, a)(point)
            acc += to_mpf(coef * coef) / charlier_norm(n, F, a)
            sums.append(acc)
        norm2 = to_mpf(w)
        eps = abs(norm2) * mpmath.ldexp(1, 16 - precision)
        monotone = all(s1 >= s0 for s0, s1 in zip(sums, sums[1:]))
        bounded = all(s <= norm2 + eps for s in sums)
    return ParsevalResult(point, sums, norm2, monotone, bounded)
