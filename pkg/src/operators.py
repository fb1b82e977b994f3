"""Operadores de segunda ordem D_F, fatorações de Darboux e simetria.

``DiffOp`` guarda coeficientes por deslocamento (Sh_l p(x) = p(x+l)) e
``DiffeOp`` por ordem de derivada; ambos com coeficientes ``RationalFunction``
reduzidos, de modo que igualdade de operadores é comparação coeficiente a
coeficiente.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from .errors import ComputationError, NotPolynomialError, PreconditionError
from .exceptional import (
    casorati_polys,
    charlier_exceptional,
    hermite_exceptional,
    hermite_omega,
    hermite_omega_tilde,
)
from .families import charlier_poly, hermite_poly
from .fsets import EMPTY, FiniteSet, down, involution, s_index, set_indices, u_index
from .polycore import Poly, RationalFunction, integer_zeros, sylvester_check
from .reports import VerificationReport
from .scalars import to_rational

X = Poly.x()


def _rf(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Poly):
        return RationalFunction(value)
    return RationalFunction(Poly.constant(to_rational(value)))


def _clean(coeffs: Mapping[int, object]) -> Tuple[Tuple[int, RationalFunction], ...]:
    out = {}
    for key, c in coeffs.items():
        r = _rf(c)
        if not r.is_zero():
            out[int(key)] = r
    return tuple(sorted(out.items()))


class _Operator:
    """Base comum: coeficientes como tupla ordenada de pares (chave, coeficiente)."""

    terms: Tuple[Tuple[int, RationalFunction], ...]

    @classmethod
    def of(cls, coeffs: Mapping[int, object]):
        return cls(_clean(coeffs))

    @classmethod
    def identity(cls, c=1):
        return cls.of({0: c})

    def coeff(self, key: int) -> RationalFunction:
        return dict(self.terms).get(key, RationalFunction(Poly.zero()))

    def keys(self) -> List[int]:
        return [k for k, _ in self.terms]

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        acc: Dict[int, RationalFunction] = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc[k] + c if k in acc else c
        return type(self).of(acc)

    def __neg__(self):
        return type(self).of({k: -c for k, c in self.terms})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        return type(self).of({k: v * _rf(c) for k, v in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> dict:
        return {str(k): c.to_json() for k, c in self.terms}

    def __matmul__(self, other):
        return self.compose(other)


@dataclass(frozen=True)
class DiffOp(_Operator):
    """Σ_l h_l(x) Sh_l."""

    terms: Tuple[Tuple[int, RationalFunction], ...] = ()

    def compose(self, other: "DiffOp") -> "DiffOp":
        """(self∘other)(p) = self(other(p))."""
        acc: Dict[int, RationalFunction] = {}
        for l, a in self.terms:
            for m, b in other.terms:
                term = a * b.shift(l)
                acc[l + m] = acc[l + m] + term if l + m in acc else term
        return DiffOp.of(acc)

    def image(self, p: Poly) -> RationalFunction:
        out = RationalFunction(Poly.zero())
        for l, c in self.terms:
            out = out + c * p.shift(l)
        return out


def _rf_derivative(r: RationalFunction, order: int) -> RationalFunction:
    for _ in range(order):
        r = r.derivative()
    return r


@dataclass(frozen=True)
class DiffeOp(_Operator):
    """Σ_j h_j(x) ∂^j."""

    terms: Tuple[Tuple[int, RationalFunction], ...] = ()

    def compose(self, other: "DiffeOp") -> "DiffeOp":
        # Leibniz: ∂^i (b ∂^j) = Σ_t C(i,t) b^{(t)} ∂^{i−t+j}
        acc: Dict[int, RationalFunction] = {}
        for i, a in self.terms:
            for j, b in other.terms:
                for t in range(i + 1):
                    term = a * _rf_derivative(b, t) * math.comb(i, t)
                    key = i - t + j
                    acc[key] = acc[key] + term if key in acc else term
        return DiffeOp.of(acc)

    def image(self, p: Poly) -> RationalFunction:
        out = RationalFunction(Poly.zero())
        for j, c in self.terms:
            out = out + c * p.derivative(j)
        return out


Operator = Union[DiffOp, DiffeOp]


def apply_op(op: Operator, p: Poly) -> Poly:
    """Imagem polinomial exata; resto não nulo levanta ``NotPolynomialError``."""
    if p.is_zero():
        return Poly.zero()
    return op.image(p).as_poly()


# construção de D_F

@dataclass(frozen=True)
class CharlierOperators:
    primary: DiffOp
    tilde: DiffOp

    @property
    def forms_agree(self) -> bool:
        return self.primary == self.tilde

    def to_json(self) -> dict:
        return {"primary": self.primary.to_json(), "tilde": self.tilde.to_json(),
                "forms_agree": self.forms_agree}


def _charlier_from(omega: Poly, lam: Poly, const, a: Fraction, sign: int) -> DiffOp:
    om, om1 = _rf(omega), _rf(omega.shift(1))
    if om.is_zero():
        raise ComputationError("Ω_F identicamente nulo")
    h_m1 = -X * om1 / om
    h_0 = (X + const) + (_rf(lam.shift(1)) / om1 - _rf(lam) / om) * (-sign * a)
    h_1 = om * (-a) / om1
    return DiffOp.of({-1: h_m1, 0: h_0, 1: h_1})


@lru_cache(maxsize=None)
def build_charlier_op(F: FiniteSet, a) -> CharlierOperators:
    """D_F nas duas formas: via (Ω, Λ) e via (Ω̃, Λ̃) de G = I(F)."""
    a = to_rational(a)
    if a == 0:
        raise ValueError("a deve ser não nulo")
    data = casorati_polys(F, a)
    primary = _charlier_from(data.omega, data.lambda_, F.k + a + u_index(F), a, sign=1)
    if not F.k:
        return CharlierOperators(primary, primary)
    G = involution(F)
    tilde = _charlier_from(data.omega_tilde, data.lambda_tilde, G.k + a + u_index(G), a, sign=-1)
    return CharlierOperators(primary, tilde)


@lru_cache(maxsize=None)
def build_hermite_op(F: FiniteSet) -> DiffeOp:
    """D_F = −∂² + h_1∂ + h_0."""
    omega = hermite_omega(F)
    om = _rf(omega)
    ratio = _rf(omega.derivative()) / om
    h_1 = (X + ratio) * 2
    h_0 = (RationalFunction(Poly.constant(F.k + u_index(F))) - X * ratio) * 2 - _rf(omega.derivative(2)) / om
    return DiffeOp.of({2: -1, 1: h_1, 0: h_0})


def _family_poly(n: int, F: FiniteSet, a) -> Poly:
    return hermite_exceptional(n, F) if a is None else charlier_exceptional(n, F, a)


def verify_eigen(F: FiniteSet, a, n_values: Iterable[int]) -> VerificationReport:
    """D_F(c_n^F) = n c_n^F (Charlier) ou D_F(H_n^F) = 2n H_n^F (``a=None``)."""
    hermite = a is None
    op = build_hermite_op(F) if hermite else build_charlier_op(F, a).primary
    name = "eigen_hermite" if hermite else "eigen_charlier"
    rep = VerificationReport(name, inputs={"F": F, **({} if hermite else {"a": to_rational(a)})})
    idx = set_indices(F)
    for n in n_values:
        p = _family_poly(n, F, a)
        eigenvalue = 2 * n if hermite else n
        try:
            image = apply_op(op, p)
        except NotPolynomialError as exc:
            rep.record(False, n=n, remainder=exc.remainder)
            continue
        ok = rep.compare(image, p * eigenvalue, vacuous=not idx.contains(n), n=n)
        if not ok:
            rep.failures[-1]["difference"] = (image - p * eigenvalue).to_json()
    return rep.finish()


# regras de composição de primeira ordem

@dataclass(frozen=True)
class FactorResult:
    op: DiffOp
    consistent: bool


def factor_right(D: DiffOp, A: DiffOp) -> FactorResult:
    """B com D = B∘A, para A = a_0 Sh_0 + a_1 Sh_1."""
    a0, a1 = A.coeff(0), A.coeff(1)
    f_m1, f0, f1 = D.coeff(-1), D.coeff(0), D.coeff(1)
    b_m1 = f_m1 / a0.shift(-1)
    b0 = f1 / a1
    centre = f_m1 * a1.shift(-1) / a0.shift(-1) + f1 * a0 / a1
    return FactorResult(DiffOp.of({-1: b_m1, 0: b0}), centre == f0)


def factor_left(D: DiffOp, B: DiffOp) -> FactorResult:
    """A com D = A∘B, para B = b_{−1} Sh_{−1} + b_0 Sh_0."""
    b_m1, b0 = B.coeff(-1), B.coeff(0)
    f_m1, f0, f1 = D.coeff(-1), D.coeff(0), D.coeff(1)
    a0 = f_m1 / b_m1
    a1 = f1 / b0.shift(1)
    centre = f_m1 * b0 / b_m1 + f1 * b_m1.shift(1) / b0.shift(1)
    return FactorResult(DiffOp.of({0: a0, 1: a1}), centre == f0)


# Darboux

@dataclass
class DarbouxFactors:
    ops: Dict[str, Operator]
    report: VerificationReport
    signs: Dict[str, int] = field(default_factory=dict)
    evidence: VerificationReport | None = None

    def to_json(self) -> dict:
        return {
            "ops": {k: v.to_json() for k, v in self.ops.items()},
            "signs": self.signs,
            "report": self.report.to_dict(),
            "evidence": None if self.evidence is None else self.evidence.to_dict(),
        }


def _resolve_shift(rep: VerificationReport, label: str, D: Operator, product: Operator,
                   const: int, signs: Dict[str, int]) -> None:
    """Decide o sinal de ±const·Id pelo resíduo exato e registra o escolhido."""
    residuals = {}
    for sign in (1, -1):
        residual = D - (product + type(D).identity(sign * const))
        residuals[sign] = residual
        if residual.is_zero():
            signs[label] = sign
            rep.record(True, relation=label, sign=sign)
            return
    rep.record(False, relation=label, constant=const,
               residual_plus=residuals[1], residual_minus=residuals[-1])


def _intertwine_range(F: FiniteSet, extra: int = 5) -> List[int]:
    idx = set_indices(F)
    return idx.upto(idx.v + extra)


def _charlier_matrix(n: int, F: FiniteSet, a) -> List[List[Poly]]:
    u = u_index(F)
    return [[charlier_poly(a, i).shift(j) for j in range(F.k + 1)] for i in [n - u, *F.elements]]


def darboux_split(F: FiniteSet, a=None) -> DarbouxFactors:
    """A_F, B_F a partir de Ω_F e Ω_{F_{k}} (Charlier com ``a``, Hermite com ``a=None``)."""
    if not F.k:
        raise ValueError("F deve ser não vazio")
    Fk = F.drop(F.k)
    const_low = F.max + u_index(Fk)
    const_high = F.max + u_index(F)
    signs: Dict[str, int] = {}
    if a is None:
        rep = VerificationReport("darboux_split_hermite", inputs={"F": F})
        om, omk = hermite_omega(F), hermite_omega(Fk)
        A = DiffeOp.of({1: -_rf(om) / _rf(omk), 0: _rf(om.derivative()) / _rf(omk)})
        B = DiffeOp.of({1: _rf(omk) / _rf(om), 0: -_rf(X * omk * 2 + omk.derivative()) / _rf(om)})
        D_low, D_high = build_hermite_op(Fk), build_hermite_op(F)
        const_low, const_high = 2 * const_low, 2 * const_high
    else:
        a = to_rational(a)
        rep = VerificationReport("darboux_split_charlier", inputs={"F": F, "a": a})
        om, omk = casorati_polys(F, a).omega, casorati_polys(Fk, a).omega
        A = DiffOp.of({0: _rf(om.shift(1)) / _rf(omk.shift(1)), 1: -_rf(om) / _rf(omk.shift(1))})
        B = DiffOp.of({-1: -X * _rf(omk.shift(1)) / _rf(om), 0: _rf(omk) * a / _rf(om)})
        D_low, D_high = build_charlier_op(Fk, a).primary, build_charlier_op(F, a).primary
    for n in _intertwine_range(F):
        lower = _family_poly(n - F.max + F.k, Fk, a)
        rep.compare(apply_op(A, lower), _family_poly(n, F, a), relation="intertwining", n=n)
    _resolve_shift(rep, "lower_equals_BA", D_low, B @ A, const_low, signs)
    _resolve_shift(rep, "upper_equals_AB", D_high, A @ B, const_high, signs)
    if a is not None:
        if "lower_equals_BA" in signs:
            fr = factor_right(D_low - DiffOp.identity(signs["lower_equals_BA"] * const_low), A)
            rep.record(fr.consistent and fr.op == B, relation="factor_right_recovers_B")
        v = set_indices(F).v
        rep.absorb(sylvester_check(_charlier_matrix(v, F, a), 1, F.k + 1, F.k, F.k + 1), "sylvester")
    return DarbouxFactors(ops={"A": A, "B": B}, report=rep.finish(), signs=signs)


def darboux_chain(F: FiniteSet, a=None) -> VerificationReport:
    """Aplica ``darboux_split`` em F, F_{k}, ... até ∅."""
    rep = VerificationReport("darboux_chain", inputs={"F": F, "a": None if a is None else to_rational(a)})
    cur = F
    while cur.k:
        step = darboux_split(cur, a)
        rep.absorb(step.report, prefix=str(cur))
        rep.notes[f"{cur}.signs"] = step.signs
        cur = cur.drop(cur.k)
    return rep.finish()


def charlier_down_precondition(F: FiniteSet, a) -> None:
    """Ω_F^a(n) ≠ 0 para todo n natural; senão ``PreconditionError`` com o inteiro."""
    zeros = integer_zeros(casorati_polys(F, a).omega, lo=0)
    if zeros:
        raise PreconditionError(f"Ω_F^a se anula em n={zeros[0]} (F={F}, a={a})", witness=zeros[0])


def hermite_down_constant(n: int, F: FiniteSet) -> Fraction:
    """Constante da relação C_F(H^{F↓}_{n−k−1}) = K·H_n^F na forma fechada."""
    G = involution(F)
    k, m, s, u = F.k, G.k, s_index(F), u_index(F)
    num = -Fraction(2) ** (m + math.comb(k - s + 2, 2) - math.comb(k + 1, 2) - 1)
    for j in range(1, m):
        num *= G[m] - G[j]
    den = Fraction(1)
    for j in range(1, s):
        den *= math.factorial(j - 1) * (j - n + u)
        for f in F:
            if f > s:
                den *= f - j
    return num / den


def _proportional(lhs: Poly, rhs: Poly) -> Fraction | None:
    if lhs.is_zero():
        return Fraction(0)
    if rhs.is_zero() or lhs.degree != rhs.degree:
        return None
    K = lhs.leading / rhs.leading
    return K if lhs == rhs * K else None


def darboux_down(F: FiniteSet, a=None, extra: int = 5) -> DarbouxFactors:
    """C_F, E_F a partir de Ω̃_F e Ω̃_{F↓}.

    Para n ≥ v_F a relação de entrelaçamento é afirmada; para n ∈ σ_F com
    u_F ≤ n < v_F o resultado vai para um relatório de evidência.
    """
    if not F.k:
        raise ValueError("F deve ser não vazio")
    Fd = down(F)
    idx = set_indices(F)
    k, u, ud = F.k, idx.u, u_index(Fd)
    signs: Dict[str, int] = {}
    if a is None:
        rep = VerificationReport("darboux_down_hermite", inputs={"F": F})
        ev = VerificationReport("darboux_down_hermite_below_v", kind="evidence", inputs={"F": F})
        ot, otd = hermite_omega_tilde(F), hermite_omega_tilde(Fd)
        C = DiffeOp.of({1: _rf(ot) / _rf(otd), 0: -_rf(ot.derivative() + X * ot * 2) / _rf(otd)})
        E = DiffeOp.of({1: -_rf(otd) / _rf(ot), 0: _rf(otd.derivative()) / _rf(ot)})
        D_low, D_high = build_hermite_op(Fd), build_hermite_op(F)
        const_low, const_high = 2 * (u - k - 1), 2 * u
    else:
        a = to_rational(a)
        charlier_down_precondition(F, a)
        rep = VerificationReport("darboux_down_charlier", inputs={"F": F, "a": a})
        ev = VerificationReport("darboux_down_charlier_below_v", kind="evidence", inputs={"F": F, "a": a})
        ot, otd = casorati_polys(F, a).omega_tilde, casorati_polys(Fd, a).omega_tilde
        C = DiffOp.of({-1: -X * _rf(ot.shift(1)) / (_rf(otd) * a), 0: _rf(ot) / _rf(otd)})
        E = DiffOp.of({0: _rf(otd.shift(1)) * a / _rf(ot.shift(1)), 1: -_rf(otd) * a / _rf(ot.shift(1))})
        D_low, D_high = build_charlier_op(Fd, a).primary, build_charlier_op(F, a).primary
        const_low, const_high = u - k - 1, u
    _resolve_shift(rep, "down_equals_EC", D_low, E @ C, const_low, signs)
    _resolve_shift(rep, "upper_equals_CE", D_high, C @ E, const_high, signs)
    for n in idx.upto(idx.v + extra):
        lhs = apply_op(C, _family_poly(n - k - 1, Fd, a))
        target = _family_poly(n, F, a)
        sink = rep if n >= idx.v else ev
        if a is None:
            K = _proportional(lhs, target)
            sink.record(K is not None, relation="intertwining", n=n)
            if K is not None and n >= idx.v:
                rep.compare(K, hermite_down_constant(n, F), relation="closed_form_constant", n=n)
        else:
            factor = Fraction((-1) ** (u + ud + 1) * (n - u)) / a
            sink.compare(lhs, target * factor, relation="intertwining", n=n)
    return DarbouxFactors(ops={"C": C, "E": E}, report=rep.finish(), signs=signs, evidence=ev.finish())


# simetria / Pearson

def symmetry_pearson_check(F: FiniteSet, a=None) -> VerificationReport:
    """Charlier: h_1(x−1)w(x−1) = h_{−1}(x)w(x), dividida por a^x/x!; Hermite: equação de Pearson."""
    if a is None:
        rep = VerificationReport("pearson_hermite", inputs={"F": F})
        op = build_hermite_op(F)
        omega = hermite_omega(F)
        # (a_2 f)' = a_1 f  com f = e^{−x²}/Ω², isto é a_2' + a_2·f'/f = a_1
        log_der = -X * 2 - _rf(omega.derivative()) * 2 / _rf(omega)
        a2 = op.coeff(2)
        rep.compare(a2.derivative() + a2 * log_der, op.coeff(1), relation="pearson")
        return rep.finish()
    a = to_rational(a)
    rep = VerificationReport("symmetry_charlier", inputs={"F": F, "a": a})
    ops = build_charlier_op(F, a)
    omega = casorati_polys(F, a).omega
    om = _rf(omega)
    # w(x)·x!/a^x = 1/(Ω(x)Ω(x+1));  w(x−1)·x!/a^x = x/(a Ω(x−1)Ω(x))
    w_here = RationalFunction(Poly.one()) / (om * _rf(omega.shift(1)))
    w_prev = X / (_rf(omega.shift(-1)) * om * a)
    lhs = ops.primary.coeff(1).shift(-1) * w_prev
    rhs = ops.primary.coeff(-1) * w_here
    rep.compare(lhs, rhs, relation="symmetry")
    rep.record(ops.forms_agree, relation="primary_equals_tilde")
    h_m1 = ops.primary.coeff(-1)
    if h_m1.den(0) != 0:
        rep.compare(h_m1(0), Fraction(0), relation="boundary_h_minus_1_at_0")
    else:
        rep.notes["boundary_skipped"] = "polo de h_{-1} em 0"
    cross = ops.primary.coeff(1) * ops.primary.coeff(-1).shift(1)
    expected = (X + 1) * a * _rf(omega) * _rf(omega.shift(2)) / (_rf(omega.shift(1)) * _rf(omega.shift(1)))
    rep.compare(cross, expected, relation="cross_product")
    return rep.finish()


def classical_operator(a=None) -> Operator:
    """D para F = ∅: −xSh_{−1} + (x+a)Sh_0 − aSh_1, ou −∂² + 2x∂."""
    return build_hermite_op(EMPTY) if a is None else build_charlier_op(EMPTY, a).primary


def hermite_classical_check(nmax: int) -> VerificationReport:
    rep = VerificationReport("eigen_hermite_classical", inputs={"nmax": nmax})
    op = classical_operator()
    for n in range(nmax + 1):
        rep.compare(apply_op(op, hermite_poly(n)), hermite_poly(n) * (2 * n), n=n)
    return rep.finish()
