from __future__ import annotations

from typing import Any


class ExceptionalError(Exception):
    """Base de todos os erros do pacote."""

    exit_code = 3


class ConfigError(ExceptionalError):
    """Entrada inválida (conjunto, parâmetro a, faixa de n, flags)."""

    exit_code = 2


class ComputationError(ExceptionalError):
    """Inconsistência interna: indica bug de transcrição, não falha de identidade."""

    exit_code = 3


class NotPolynomialError(ComputationError):
    def __init__(self, message: str, remainder: Any = None):
        super().__init__(message)
        self.remainder = remainder


class PreconditionError(ExceptionalError):
    """Hipótese matemática não satisfeita (ex.: Ω_F^a(n) = 0 para algum n natural)."""

    exit_code = 1

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class ToleranceError(ExceptionalError):
    exit_code = 3
