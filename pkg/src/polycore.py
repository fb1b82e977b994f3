"""Polinômios densos exatos, funções racionais, determinantes e Sturm.

Os coeficientes vivem em qualquer anel de ``scalars`` (``Fraction``,
``GaussRational``, ``DualRational``); gcd, Sturm e ``RationalFunction``
exigem coeficientes racionais.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import ComputationError, NotPolynomialError
from .reports import VerificationReport
from .scalars import DualRational, GaussRational

DEGREE_OF_ZERO = -1


def _norm_coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


@dataclass(frozen=True)
class Poly:
    coeffs: Tuple = ()

    def __post_init__(self):
        cs = [_norm_coeff(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # construtores
    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def constant(c) -> "Poly":
        return Poly((c,))

    @staticmethod
    def falling_factorial(j: int, shift=0) -> "Poly":
        """(x+shift)(x+shift-1)...(x+shift-j+1); (x)_0 = 1."""
        out = Poly.one()
        for i in range(j):
            out = out * Poly((shift - i, 1))
        return out

    @staticmethod
    def from_roots(roots: Iterable) -> "Poly":
        out = Poly.one()
        for r in roots:
            out = out * Poly((-r, 1))
        return out

    # propriedades
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else DEGREE_OF_ZERO

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # aritmética
    @staticmethod
    def _lift(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, GaussRational, DualRational)):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(tuple(self.coeff(i) + o.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            o = self._lift(other)
            if o is None:
                return NotImplemented
            return Poly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(tuple(out))

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly(tuple(other * c for c in self.coeffs))

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction, GaussRational, DualRational)):
            return NotImplemented
        return Poly(tuple(c / scalar for c in self.coeffs))

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("expoente negativo")
        out = Poly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("divisão polinomial por zero")
        dq = other.degree
        rem = list(self.coeffs)
        if len(rem) <= dq:
            return Poly.zero(), self
        inv = 1 / other.leading
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1 - dq, -1, -1):
            c = rem[i + dq] * inv
            quot[i] = c
            if c != 0:
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * oc
        return Poly(tuple(quot)), Poly(tuple(rem[:dq]))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NotPolynomialError("divisão polinomial não exata", remainder=r)
        return q

    # avaliação e transformações
    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> "Poly":
        cs = list(self.coeffs)
        for _ in range(order):
            cs = [i * cs[i] for i in range(1, len(cs))]
        return Poly(tuple(cs))

    def compose(self, q: "Poly") -> "Poly":
        out = Poly.zero()
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def shift(self, c) -> "Poly":
        """p(x + c)."""
        if c == 0:
            return self
        return self.compose(Poly((c, 1)))

    def reflect(self, c=0) -> "Poly":
        """p(-x + c)."""
        return self.compose(Poly((c, -1)))

    def map(self, fn) -> "Poly":
        return Poly(tuple(fn(c) for c in self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.leading

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if i == 0 else f"({c})x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def as_poly(value) -> Poly:
    return value if isinstance(value, Poly) else Poly((value,))


def poly_eval(p: Poly, x):
    return p(x)


def certify_real(p: Poly) -> Poly:
    """Rebaixa um polinômio sobre GaussRational para ℚ, exigindo parte imaginária nula."""
    out = []
    for c in p.coeffs:
        if isinstance(c, GaussRational):
            if c.im != 0:
                raise ComputationError(f"parte imaginária não nula após montagem: {c}")
            out.append(c.re)
        else:
            out.append(c)
    return Poly(tuple(out))


# gcd e funções racionais (coeficientes racionais)

def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: Poly) -> Poly:
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g)


@dataclass(frozen=True)
class RationalFunction:
    num: Poly
    den: Poly = Poly.one()

    def __post_init__(self):
        num, den = as_poly(self.num), as_poly(self.den)
        if den.is_zero():
            raise ZeroDivisionError("denominador nulo em RationalFunction")
        if num.is_zero():
            num, den = Poly.zero(), Poly.one()
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.leading
        if lc != 1:
            num, den = num / lc, den / lc
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def _lift(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Poly((other,)))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("divisão por função racional nula")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"polo em x={x}")
        return self.num(x) / d

    evaluate = __call__

    def shift(self, c) -> "RationalFunction":
        return RationalFunction(self.num.shift(c), self.den.shift(c))

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def as_poly(self) -> Poly:
        if self.den.degree == 0:
            return self.num
        raise NotPolynomialError("imagem não polinomial", remainder=self.num % self.den)

    def to_json(self) -> dict:
        return {"num": self.num.to_json()["coeffs"], "den": self.den.to_json()["coeffs"]}


# determinantes

def _cofactor_det(M: List[List[Poly]]) -> Poly:
    n = len(M)
    if n == 0:
        return Poly.one()
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = Poly.zero()
    for j in range(n):
        e = M[0][j]
        if e.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = e * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(M: List[List[Poly]]) -> Poly:
    n = len(M)
    M = [row[:] for row in M]
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = elt.exact_div(prev) if k > 0 else elt
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def poly_det(M: Sequence[Sequence], method: str = "auto") -> Poly:
    """Determinante exato de uma matriz quadrada de polinômios (ou escalares).

    ``auto``: cofatores até 4×4, Bareiss acima disso; se o Bareiss encontrar um
    coeficiente líder não inversível (anel dual), cai para cofatores.
    """
    rows = [[as_poly(e) for e in row] for row in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matriz não quadrada")
    if method == "cofactor" or (method == "auto" and n <= 4):
        return _cofactor_det(rows)
    if method not in ("auto", "bareiss"):
        raise ValueError(f"método desconhecido: {method}")
    try:
        return _bareiss_det(rows)
    except (ZeroDivisionError, NotPolynomialError):
        if method == "bareiss":
            raise
        return _cofactor_det(rows)


def scalar_det(M: Sequence[Sequence]):
    return poly_det(M).coeff(0)


def _delete(M, rows: Iterable[int], cols: Iterable[int]):
    rows, cols = set(rows), set(cols)
    return [[e for j, e in enumerate(r) if j not in cols] for i, r in enumerate(M) if i not in rows]


def sylvester_check(M: Sequence[Sequence], i0: int, i1: int, j0: int, j1: int) -> VerificationReport:
    """Identidade de Sylvester (Desnanot–Jacobi) com índices 1-based."""
    k = len(M)
    if not (1 <= i0 < i1 <= k and 1 <= j0 < j1 <= k):
        raise IndexError(f"índices fora do intervalo para matriz {k}×{k}")
    a, b, c, d = i0 - 1, i1 - 1, j0 - 1, j1 - 1
    rep = VerificationReport("sylvester", inputs={"size": k, "rows": [i0, i1], "cols": [j0, j1]})
    lhs = poly_det(M) * poly_det(_delete(M, (a, b), (c, d)))
    rhs = (poly_det(_delete(M, (a,), (c,))) * poly_det(_delete(M, (b,), (d,)))
           - poly_det(_delete(M, (a,), (d,))) * poly_det(_delete(M, (b,), (c,))))
    rep.compare(lhs, rhs)
    return rep.finish()


# raízes reais

def cauchy_bound(p: Poly) -> Fraction:
    if p.is_zero():
        raise ValueError("polinômio nulo não tem cota de Cauchy")
    if p.degree == 0:
        return Fraction(1)
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def sturm_sequence(p: Poly) -> List[Poly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return [s for s in seq if not s.is_zero()]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _sign_changes(seq: List[Poly], x) -> int:
    signs = [s for s in (_sign(p(x)) for p in seq) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def real_root_count(p: Poly, interval: Tuple | None = None) -> int:
    """Número de raízes reais DISTINTAS em (lo, hi) ou em toda a reta."""
    if p.is_zero():
        raise ValueError("polinômio nulo")
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    if interval is None:
        b = cauchy_bound(q)
        lo, hi = -b, b
    else:
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        if lo >= hi:
            return 0
    seq = sturm_sequence(q)
    count = _sign_changes(seq, lo) - _sign_changes(seq, hi)
    if q(hi) == 0:
        count -= 1
    return count


class SignVerdict(str, Enum):
    ALWAYS_POSITIVE = "always_positive"
    ALWAYS_NEGATIVE = "always_negative"
    CHANGES_SIGN = "changes_sign"
    HAS_INTEGER_ZERO = "has_integer_zero"


def integer_zeros(p: Poly, lo: int = 0, hi: int | None = None) -> List[int]:
    """Zeros inteiros em [lo, hi]; sem ``hi`` varre até a cota de Cauchy."""
    if p.is_zero():
        raise ValueError("polinômio nulo")
    if hi is None:
        hi = math.ceil(cauchy_bound(p))
    return [n for n in range(lo, hi + 1) if p(n) == 0]


def sign_constant_on_naturals(p: Poly) -> SignVerdict:
    if p.is_zero():
        raise ValueError("polinômio nulo")
    top = math.ceil(cauchy_bound(p)) + 1
    signs = set()
    for n in range(0, top + 1):
        s = _sign(p(n))
        if s == 0:
            return SignVerdict.HAS_INTEGER_ZERO
        signs.add(s)
    # além da cota o sinal é o do coeficiente líder, já visto em n = top
    if signs == {1}:
        return SignVerdict.ALWAYS_POSITIVE
    if signs == {-1}:
        return SignVerdict.ALWAYS_NEGATIVE
    return SignVerdict.CHANGES_SIGN


def vandermonde(F: Iterable[int]) -> Fraction:
    fs = list(F)
    out = Fraction(1)
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            out *= fs[j] - fs[i]
    return out
