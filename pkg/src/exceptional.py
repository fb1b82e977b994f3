"""Construções determinantais: Ω_F, Λ_F (e versões til), c_n^{a;F}, H_n^F.

Cada objeto tem dois caminhos de cálculo sempre que possível (Casorati por
deslocamentos vs. forma reduzida por colunas; forma primária vs. forma
alternativa via G = I(F)); a comparação exata entre eles é o teste.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence

from .errors import ComputationError
from .families import charlier_poly, hermite_poly, limit_deviation_report
from .fsets import EMPTY, FiniteSet, derived_sets, involution, nu, set_indices, u_index
from .polycore import Poly, certify_real, poly_det, vandermonde
from .reports import VerificationReport
from .scalars import DualRational, GaussRational, to_rational

I = GaussRational(0, 1)
MINUS_I_X = Poly((0, GaussRational(0, -1)))


def _a(a):
    return a if isinstance(a, DualRational) else to_rational(a)


def _fact_prod(F: Iterable[int]) -> int:
    out = 1
    for f in F:
        out *= math.factorial(f)
    return out


# Charlier: Ω, Λ e versões til

@dataclass(frozen=True)
class CasoratiData:
    omega: Poly
    lambda_: Poly
    omega_tilde: Poly
    lambda_tilde: Poly

    def to_json(self) -> dict:
        return {
            "omega": self.omega.to_json(),
            "lambda": self.lambda_.to_json(),
            "omega_tilde": self.omega_tilde.to_json(),
            "lambda_tilde": self.lambda_tilde.to_json(),
        }


def _casorati(indices: Sequence[int], a, shifts: Sequence[int], reflect: bool = False) -> Poly:
    """|c^a_{idx_i}(±x + s_j)|."""
    rows = []
    for f in indices:
        c = charlier_poly(a, f)
        rows.append([c.reflect(s) if reflect else c.shift(s) for s in shifts])
    return poly_det(rows)


def omega_charlier(F: FiniteSet, a) -> Poly:
    return _casorati(F.elements, _a(a), range(F.k))


def omega_charlier_reduced(F: FiniteSet, a) -> Poly:
    """|c_{f_i−j+1}^a(x)|."""
    a = _a(a)
    rows = [[charlier_poly(a, f - j) for j in range(F.k)] for f in F]
    return poly_det(rows)


def lambda_charlier(F: FiniteSet, a) -> Poly:
    if not F.k:
        return Poly.zero()
    shifts = list(range(F.k - 1)) + [F.k]
    return _casorati(F.elements, _a(a), shifts)


def omega_tilde_charlier(F: FiniteSet, a) -> Poly:
    if not F.k:
        return Poly.one()
    G = involution(F)
    return _casorati(G.elements, -_a(a), range(G.k), reflect=True)


def lambda_tilde_charlier(F: FiniteSet, a) -> Poly:
    if not F.k:
        return Poly.zero()
    G = involution(F)
    shifts = list(range(G.k - 1)) + [G.k]
    return _casorati(G.elements, -_a(a), shifts, reflect=True)


@lru_cache(maxsize=None)
def casorati_polys(F: FiniteSet, a) -> CasoratiData:
    a = _a(a)
    if not F.k:
        return CasoratiData(Poly.one(), Poly.zero(), Poly.one(), Poly.zero())
    omega = omega_charlier(F, a)
    if omega != omega_charlier_reduced(F, a):
        raise ComputationError(f"Ω_F por deslocamentos difere da forma reduzida (F={F})")
    return CasoratiData(
        omega=omega,
        lambda_=lambda_charlier(F, a),
        omega_tilde=omega_tilde_charlier(F, a),
        lambda_tilde=lambda_tilde_charlier(F, a),
    )


# Charlier: c_n^{a;F}

@lru_cache(maxsize=None)
def charlier_exceptional(n: int, F: FiniteSet, a, form: str = "casorati") -> Poly:
    """c_n^{a;F}; ``form="reduced"`` usa as entradas c_{f_i−j+1}(x)."""
    a = _a(a)
    if n < 0:
        return Poly.zero()
    if not F.k:
        return charlier_poly(a, n)
    u = u_index(F)
    top = [n - u] + list(F.elements)
    if form == "casorati":
        rows = [[charlier_poly(a, idx).shift(j) for j in range(F.k + 1)] for idx in top]
    elif form == "reduced":
        rows = [[charlier_poly(a, idx - j) for j in range(F.k + 1)] for idx in top]
    else:
        raise ValueError(f"forma desconhecida: {form}")
    return poly_det(rows)


def charlier_leading_coefficient(n: int, F: FiniteSet) -> Fraction:
    u = u_index(F)
    num = Fraction(1)
    for f in F:
        num *= f - n + u
    return num * vandermonde(F) / (math.factorial(n - u) * _fact_prod(F))


@dataclass(frozen=True)
class NormConstants:
    nu_F: Fraction
    beta_n: Fraction | None
    gamma_n: GaussRational | None

    def to_json(self) -> dict:
        return {
            "nu_F": str(self.nu_F),
            "beta_n": None if self.beta_n is None else str(self.beta_n),
            "gamma_n": None if self.gamma_n is None else str(self.gamma_n),
        }


def beta_constant(n: int, F: FiniteSet, a) -> Fraction:
    a = to_rational(a)
    idx = set_indices(F)
    if n < idx.v:
        raise ValueError(f"β_n exige n ≥ v_F (n={n}, v_F={idx.v})")
    G = involution(F)
    k, m, u = F.k, G.k, idx.u
    prod = Fraction(1)
    for f in F:
        prod *= f - n + u
    return (Fraction((-1) ** (m + k + u)) * a ** m * math.factorial(n - idx.v) * vandermonde(F)
            * _fact_prod(G) * prod / (math.factorial(n - u) * vandermonde(G) * _fact_prod(F)))


def gamma_constant(n: int, F: FiniteSet) -> GaussRational:
    G = involution(F)
    k, m, u = F.k, G.k, u_index(F)
    prod = Fraction(1)
    for f in F:
        prod *= f - n + u
    scale = Fraction(2) ** (math.comb(k + 1, 2) - math.comb(m, 2)) * vandermonde(F) / vandermonde(G) * prod
    return I ** u_index(G) * scale


def norm_constants(n: int, F: FiniteSet, a=None) -> NormConstants:
    beta = None
    if a is not None and F.k and n >= set_indices(F).v:
        beta = beta_constant(n, F, a)
    gamma = gamma_constant(n, F) if F.k else None
    return NormConstants(nu_F=nu(F), beta_n=beta, gamma_n=gamma)


def charlier_exceptional_alt(n: int, F: FiniteSet, a) -> Poly:
    """Forma alternativa de ordem m+1 via G = I(F), válida para n ≥ v_F.

    Primeira linha: (x)_j/a^j · c_{n−v_F}(x−j); demais: c^{−a}_{g_i}(−x−1+j).
    """
    a = to_rational(a)
    if not F.k:
        return charlier_poly(a, n)
    idx = set_indices(F)
    if n < idx.v:
        # c_{n−v_F} = 0 anula a primeira linha: a forma não está definida aqui
        raise ValueError(f"forma alternativa exige n ≥ v_F (n={n}, v_F={idx.v})")
    G = involution(F)
    base = charlier_poly(a, n - idx.v)
    first = [Poly.falling_factorial(j) * base.shift(-j) / a ** j for j in range(G.k + 1)]
    rows = [first]
    for g in G:
        c = charlier_poly(-a, g)
        rows.append([c.reflect(j - 1) for j in range(G.k + 1)])
    return poly_det(rows) * beta_constant(n, F, a)


# Hermite

@dataclass(frozen=True)
class WronskianData:
    omega: Poly
    omega_tilde: Poly

    def to_json(self) -> dict:
        return {"omega": self.omega.to_json(), "omega_tilde": self.omega_tilde.to_json()}


def _wronskian(polys: Sequence[Poly], order: int) -> Poly:
    return poly_det([[p.derivative(j) for j in range(order)] for p in polys])


@lru_cache(maxsize=None)
def hermite_omega(F: FiniteSet) -> Poly:
    return _wronskian([hermite_poly(f) for f in F], F.k)


@lru_cache(maxsize=None)
def hermite_omega_tilde(F: FiniteSet) -> Poly:
    """i^{u_G+m}·|H_{g_i}^{(j−1)}(−ix)|, montado sobre GaussRational e certificado real."""
    if not F.k:
        return Poly.one()
    G = involution(F)
    rows = [[hermite_poly(g).derivative(j).compose(MINUS_I_X) for j in range(G.k)] for g in G]
    return certify_real(poly_det(rows) * I ** (u_index(G) + G.k))


def wronskian_polys(F: FiniteSet) -> WronskianData:
    return WronskianData(omega=hermite_omega(F), omega_tilde=hermite_omega_tilde(F))


@lru_cache(maxsize=None)
def hermite_exceptional(n: int, F: FiniteSet) -> Poly:
    if n < 0:
        return Poly.zero()
    if not F.k:
        return hermite_poly(n)
    u = u_index(F)
    polys = [hermite_poly(n - u)] + [hermite_poly(f) for f in F]
    return _wronskian(polys, F.k + 1)


def hermite_leading_coefficient(n: int, F: FiniteSet) -> Fraction:
    u = u_index(F)
    prod = Fraction(1)
    for f in F:
        prod *= f - n + u
    return Fraction(2) ** (n + math.comb(F.k + 1, 2)) * vandermonde(F) * prod


def hermite_exceptional_alt(n: int, F: FiniteSet, variant: str = "ascending") -> Poly:
    """γ_n·det de ordem m+1 via G = I(F).

    ``ascending``: primeira linha (−i)^j H_{n−v_F+j}(x);
    ``descending``: primeira linha (−1)^j H_{n−v_F−j}(x).
    Levanta ``ComputationError`` se o resultado não for real.
    """
    if not F.k:
        return hermite_poly(n)
    idx = set_indices(F)
    G = involution(F)
    d = n - idx.v
    if variant == "ascending":
        first = [hermite_poly(d + j) * (-I) ** j for j in range(G.k + 1)]
    elif variant == "descending":
        first = [hermite_poly(d - j) * (-1) ** j for j in range(G.k + 1)]
    else:
        raise ValueError(f"variante desconhecida: {variant}")
    rows = [first]
    for g in G:
        h = hermite_poly(g)
        rows.append([h.derivative(j).compose(MINUS_I_X) for j in range(G.k + 1)])
    return certify_real(poly_det(rows) * gamma_constant(n, F))


def hermite_exceptional_alt_variant(n: int, F: FiniteSet) -> Poly:
    """Variante descendente, primeira linha (−1)^j H_{n−v_F−j}(x)."""
    return hermite_exceptional_alt(n, F, variant="descending")


def hermite_alt_variant_probe(n: int, F: FiniteSet) -> Dict[str, bool]:
    """Compara as duas variantes de primeira linha com H_n^F."""
    primary = hermite_exceptional(n, F)
    out: Dict[str, bool] = {}
    variants = {"ascending": hermite_exceptional_alt, "descending": hermite_exceptional_alt_variant}
    for variant, build in variants.items():
        try:
            out[variant] = build(n, F) == primary
        except ComputationError:
            out[variant] = False
    return out


# verificações

def invariance_check(F: FiniteSet, a=None) -> VerificationReport:
    """Charlier (com ``a``): Ω = (−1)^{k+u_F} Ω̃. Hermite (``a=None``): Ω = 2^{C(k,2)−C(m,2)}(V_F/V_G) Ω̃."""
    if not F.k:
        raise ValueError("F deve ser não vazio")
    G = involution(F)
    if a is not None:
        a = to_rational(a)
        rep = VerificationReport("invariance_charlier", inputs={"F": F, "a": a})
        data = casorati_polys(F, a)
        rep.compare(data.omega, data.omega_tilde * (-1) ** (F.k + u_index(F)), F=F)
    else:
        rep = VerificationReport("invariance_hermite", inputs={"F": F})
        factor = (Fraction(2) ** (math.comb(F.k, 2) - math.comb(G.k, 2))
                  * vandermonde(F) / vandermonde(G))
        rep.compare(hermite_omega(F), hermite_omega_tilde(F) * factor, F=F)
    return rep.finish()


def lambda_dual_check(F: FiniteSet, a) -> VerificationReport:
    """Λ = kΩ − dΩ/da, com a derivada em a obtida por números duais."""
    a = to_rational(a)
    rep = VerificationReport("lambda_dual", inputs={"F": F, "a": a})
    dual = omega_charlier(F, DualRational.variable(a))
    value = dual.map(lambda c: c.value if isinstance(c, DualRational) else c)
    deriv = dual.map(lambda c: c.derivative if isinstance(c, DualRational) else Fraction(0))
    data = casorati_polys(F, a)
    rep.compare(value, data.omega, relation="dual_value")
    rep.compare(data.lambda_, data.omega * F.k - deriv, relation="lambda")
    return rep.finish()


def index_identity_check(F: FiniteSet, a) -> VerificationReport:
    a = to_rational(a)
    rep = VerificationReport("index_identities", inputs={"F": F, "a": a})
    if not F.k:
        return rep.finish()
    ds = derived_sets(F)
    rep.record(ds.down_matches_involution, relation="down_is_involution", down=ds.down)
    u = u_index(F)
    Fk = F.drop(F.k)
    rep.compare(
        casorati_polys(F, a).omega,
        charlier_exceptional(F.max + u_index(Fk), Fk, a) * (-1) ** (F.k - 1),
        relation="omega_as_lower_exceptional",
    )
    rep.compare(charlier_exceptional(u, F, a), casorati_polys(ds.down, a).omega,
                relation="charlier_at_u")
    factor = Fraction(2) ** (F.k - ds.s + 1) * nu(F) / nu(ds.down)
    rep.compare(hermite_exceptional(u, F), hermite_omega(ds.down) * factor, relation="hermite_at_u")
    data = casorati_polys(F, a)
    rep.record(data.omega.degree == u + F.k and data.lambda_.degree == u + F.k,
               relation="omega_lambda_degree", omega=data.omega.degree, lambda_=data.lambda_.degree)
    rep.record(hermite_omega(F).degree == u + F.k, relation="hermite_omega_degree")
    return rep.finish()


def structure_check(F: FiniteSet, a, extra: int = 8) -> VerificationReport:
    """Grau, coeficiente líder, anulação fora de σ_F e concordância das duas formas."""
    a = to_rational(a)
    idx = set_indices(F)
    rep = VerificationReport("structure", inputs={"F": F, "a": a, "nmax": idx.v + extra})
    for n in range(0, idx.v + extra + 1):
        c = charlier_exceptional(n, F, a)
        h = hermite_exceptional(n, F)
        rep.compare(c, charlier_exceptional(n, F, a, form="reduced"), relation="two_forms", n=n)
        if idx.contains(n):
            rep.record(c.degree == n and c.leading == charlier_leading_coefficient(n, F),
                       relation="charlier_degree_leading", n=n, degree=c.degree)
            rep.record(h.degree == n and h.leading == hermite_leading_coefficient(n, F),
                       relation="hermite_degree_leading", n=n, degree=h.degree)
        else:
            rep.record(c.is_zero() and h.is_zero(), relation="zero_outside_sigma", n=n)
    return rep.finish()


def charlier_alt_check(F: FiniteSet, a, n_values: Iterable[int], kind: str = "assert") -> VerificationReport:
    a = to_rational(a)
    rep = VerificationReport("alt_form_charlier", kind=kind, inputs={"F": F, "a": a})
    v = set_indices(F).v
    for n in n_values:
        if n < v:
            rep.notes.setdefault("undefined_below_v", []).append(n)
            continue
        alt = charlier_exceptional_alt(n, F, a)
        primary = charlier_exceptional(n, F, a)
        rep.compare(alt, primary, vacuous=primary.is_zero(), n=n)
    return rep.finish()


def hermite_alt_check(F: FiniteSet, n_values: Iterable[int], kind: str = "assert") -> VerificationReport:
    rep = VerificationReport("alt_form_hermite", kind=kind, inputs={"F": F})
    wins: Dict[str, int] = {"ascending": 0, "descending": 0}
    v = set_indices(F).v
    m = involution(F).k if F.k else 0
    for n in n_values:
        if n < v and n - v + m < 0:
            # H_{n−v_F+j} = 0 para todo j ≤ m: primeira linha nula
            rep.notes.setdefault("undefined_below_v", []).append(n)
            continue
        probe = hermite_alt_variant_probe(n, F)
        for variant, ok in probe.items():
            wins[variant] += int(ok)
        primary = hermite_exceptional(n, F)
        rep.record(probe["ascending"], n=n, probe=probe)
        if primary.is_zero():
            rep.vacuous += 1
    rep.notes["variant_matches"] = wins
    return rep.finish()


def omega_limit_check(F: FiniteSet, a_sequence: Sequence, points: Sequence,
                      precision: int = 256) -> VerificationReport:
    """(2/a)^{(u_F+k)/2} Ω_F^a(√(2a)x + a) → 2^k Ω_F(x)/ν_F."""
    target = hermite_omega(F) * Fraction(2 ** F.k) / nu(F)
    e = u_index(F) + F.k
    return limit_deviation_report(
        "omega_limit", lambda a: (casorati_polys(F, a).omega, e), target,
        a_sequence, points, precision, {"F": F},
    )


def sigma_window(F: FiniteSet, below: bool, extra: int = 5) -> List[int]:
    """Índices de σ_F em [u_F, v_F) (``below``) ou em [v_F, v_F+extra]."""
    idx = set_indices(F)
    if below:
        return [n for n in range(idx.u, idx.v) if idx.contains(n)]
    return [n for n in range(idx.v, idx.v + extra + 1) if idx.contains(n)]


def empty_conventions() -> Dict[str, Poly]:
    """Ω_∅ = 1, Λ_∅ = 0 (usado pela CLI para documentar as convenções)."""
    return {"omega": Poly.one(), "lambda": Poly.zero(), "set": EMPTY}
