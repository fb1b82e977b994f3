"""Polinômios excepcionais de Charlier e Hermite em aritmética exata.

Mantemos o ``__init__`` leve (sem reexports imediatos): mpmath, pandas e os
determinantes só são carregados quando um submódulo é usado.
"""

__all__ = [
    "main",
]


def main(argv=None) -> int:
    """Entrypoint programático da CLI (mesmos argumentos de ``python -m src``)."""
    from .cli import main as cli_main  # lazy import

    return cli_main(argv)
