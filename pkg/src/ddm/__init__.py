"""Overlapping domain decomposition for the discrete Monge-Ampere system"""

from .decomposition import Decomposition, MergeWeights, Subdomain, decompose
from .local_solve import solve_global, solve_restricted
from .initialization import coarse_initialize, quadratic_seed
from .schwarz import SchwarzSolver

__all__ = [
    "Decomposition",
    "MergeWeights",
    "Subdomain",
    "decompose",
    "solve_global",
    "solve_restricted",
    "coarse_initialize",
    "quadratic_seed",
    "SchwarzSolver",
]
