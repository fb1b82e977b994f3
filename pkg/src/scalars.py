"""Escalares exatos: racionais (``Fraction``), racionais gaussianos e duais.

Os três tipos convivem nos coeficientes de ``Poly``. Operações mistas com
``int``/``Fraction`` são promovidas automaticamente.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import mpmath

Rational = Fraction
Scalar = Union[int, Fraction, "GaussRational", "DualRational"]


def to_rational(value) -> Fraction:
    """Converte int/str/Fraction para ``Fraction`` (aceita "p/q" e decimais)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"não é racional exato: {value!r}")


def _as_fraction(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None


@dataclass(frozen=True)
class GaussRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def i() -> "GaussRational":
        return GaussRational(0, 1)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GaussRational):
            return other
        q = _as_fraction(other)
        if q is None:
            return None
        return cls(q, 0)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("divisão de GaussRational por zero")
        p = self * o.conjugate()
        return GaussRational(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return GaussRational(1) / (self ** (-e))
        out = GaussRational(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"{self.re}+{self.im}i"


@dataclass(frozen=True)
class DualRational:
    """p + q·ε com ε² = 0; ``derivative`` guarda q."""

    value: Fraction
    derivative: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        object.__setattr__(self, "derivative", Fraction(self.derivative))

    @classmethod
    def variable(cls, a) -> "DualRational":
        return cls(to_rational(a), 1)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, DualRational):
            return other
        q = _as_fraction(other)
        if q is None:
            return None
        return cls(q, 0)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualRational(self.value + o.value, self.derivative + o.derivative)

    __radd__ = __add__

    def __neg__(self):
        return DualRational(-self.value, -self.derivative)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualRational(self.value - o.value, self.derivative - o.derivative)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualRational(
            self.value * o.value,
            self.value * o.derivative + self.derivative * o.value,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError("divisão de DualRational por parte real nula")
        return DualRational(
            self.value / o.value,
            (self.derivative * o.value - self.value * o.derivative) / (o.value * o.value),
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return DualRational(1) / (self ** (-e))
        # (p + qε)^e = p^e + e p^(e-1) q ε
        if e == 0:
            return DualRational(1)
        return DualRational(self.value ** e, e * self.value ** (e - 1) * self.derivative)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value == o.value and self.derivative == o.derivative

    def __hash__(self):
        if self.derivative == 0:
            return hash(self.value)
        return hash((self.value, self.derivative))

    def __str__(self) -> str:
        return f"{self.value}+{self.derivative}ε"


def to_mpf(q) -> mpmath.mpf:
    """Racional exato para big-float no contexto corrente do mpmath."""
    q = to_rational(q)
    return mpmath.mpf(q.numerator) / q.denominator


def eval_mpf(coeffs: Sequence, x) -> mpmath.mpf:
    """Avalia coeficientes racionais (ordem crescente) num big-float."""
    if not coeffs:
        return mpmath.mpf(0)
    return mpmath.polyval([to_mpf(c) for c in reversed(coeffs)], x)
