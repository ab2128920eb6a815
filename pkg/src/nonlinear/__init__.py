"""Damped Newton-Krylov solver"""

from .newton import newton_solve

__all__ = [
    "newton_solve",
]
