"""CSR helpers around scipy.sparse"""

from pathlib import Path
from typing import Union

import numpy as np
from scipy import io as spio
from scipy import sparse


def assemble_csr(
    rows: np.ndarray, cols: np.ndarray, values: np.ndarray, n: int
) -> sparse.csr_matrix:
    """
    Square n x n CSR matrix from triplets.

    Duplicate (row, col) pairs are summed; column indices end up sorted and
    unique within each row.
    """
    A = sparse.coo_matrix((values, (rows, cols)), shape=(n, n)).tocsr()
    A.sum_duplicates()
    A.sort_indices()
    return A


def spmv(A: sparse.spmatrix, x: np.ndarray) -> np.ndarray:
    """y = A x"""
    x = np.asarray(x, dtype=float)
    if x.shape != (A.shape[1],):
        raise ValueError(f"vector of shape {x.shape} does not match matrix {A.shape}")
    return A @ x


def write_matrix_market(A: sparse.spmatrix, path: Union[str, Path]) -> None:
    """Matrix Market coordinate dump (row, col, value) for debugging"""
    spio.mmwrite(str(path), sparse.coo_matrix(A), precision=17)
