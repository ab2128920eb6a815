"""Sparse storage and Krylov solver"""

from .sparse import assemble_csr, spmv, write_matrix_market
from .gmres import KrylovResult, gmres_solve

__all__ = [
    "assemble_csr",
    "spmv",
    "write_matrix_market",
    "KrylovResult",
    "gmres_solve",
]
