"""Monotone quadrature scheme for the Monge-Ampere operator"""

from .quadrature import QuadratureWeights, quad_weights
from .data import ProblemData
from .operator import MongeAmpereScheme
from .system import SchemeSystem

__all__ = [
    "QuadratureWeights",
    "quad_weights",
    "ProblemData",
    "MongeAmpereScheme",
    "SchemeSystem",
]
