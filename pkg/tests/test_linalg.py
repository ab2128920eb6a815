"""Tests for CSR helpers and restarted GMRES"""

import numpy as np
import pytest
from scipy import sparse

from src.linalg import assemble_csr, gmres_solve, spmv, write_matrix_market
from src.models.solver import KrylovConfig


def test_assemble_sums_duplicates():
    A = assemble_csr(
        np.array([0, 0, 1, 1]), np.array([1, 1, 0, 1]), np.array([1.0, 2.0, 3.0, 4.0]), 2
    )
    np.testing.assert_array_equal(A.toarray(), [[0.0, 3.0], [3.0, 4.0]])
    assert A.has_sorted_indices


def test_spmv_examples(rng):
    x = rng.standard_normal(4)
    np.testing.assert_array_equal(spmv(sparse.identity(4, format="csr"), x), x)
    D = sparse.diags([1.0, 2.0, 3.0]).tocsr()
    np.testing.assert_allclose(spmv(D, np.ones(3)), [1.0, 2.0, 3.0])

    dense = rng.standard_normal((5, 5)) * (rng.random((5, 5)) < 0.5)
    y = rng.standard_normal(5)
    np.testing.assert_allclose(spmv(sparse.csr_matrix(dense), y), dense @ y, atol=1e-14)

    with pytest.raises(ValueError):
        spmv(D, np.ones(4))


def test_matrix_market_dump(tmp_path):
    path = tmp_path / "jac.mtx"
    write_matrix_market(sparse.diags([2.0, 4.0]).tocsr(), path)
    assert path.read_text().startswith("%%MatrixMarket")


def test_gmres_identity(rng):
    b = rng.standard_normal(6)
    result = gmres_solve(sparse.identity(6, format="csr"), b)
    assert result.converged
    assert result.iterations == 1
    np.testing.assert_allclose(result.x, b)


def test_gmres_diagonal():
    A = sparse.diags([2.0, 4.0]).tocsr()
    result = gmres_solve(A, np.array([2.0, 4.0]), KrylovConfig(tolerance=1e-12))
    assert result.converged
    np.testing.assert_allclose(result.x, [1.0, 1.0], rtol=1e-12)
    assert np.linalg.norm(A @ result.x - [2.0, 4.0]) < 1e-12


def test_gmres_jacobi_diagonal():
    """Right Jacobi scaling turns a diagonal system into the identity"""
    A = sparse.diags([2.0, 4.0, 8.0]).tocsr()
    result = gmres_solve(A, np.array([2.0, 4.0, 8.0]), KrylovConfig(jacobi=True))
    assert result.iterations == 1
    np.testing.assert_allclose(result.x, [1.0, 1.0, 1.0])


def test_gmres_zero_rhs():
    result = gmres_solve(sparse.identity(3, format="csr"), np.zeros(3))
    assert result.converged
    assert result.iterations == 0
    np.testing.assert_array_equal(result.x, np.zeros(3))


@pytest.mark.parametrize("restart", [30, 5])
def test_gmres_random_system(rng, restart):
    n = 20
    dense = 4.0 * np.eye(n) + rng.standard_normal((n, n)) / np.sqrt(n)
    x_true = rng.standard_normal(n)
    b = dense @ x_true
    result = gmres_solve(sparse.csr_matrix(dense), b, KrylovConfig(restart=restart))
    assert result.converged
    assert np.linalg.norm(result.x - x_true) / np.linalg.norm(x_true) <= 1e-4
    assert result.residual_norms[-1] <= 1e-5


def test_gmres_history_is_monotone(rng):
    n = 30
    dense = 3.0 * np.eye(n) + rng.standard_normal((n, n)) / np.sqrt(n)
    result = gmres_solve(
        sparse.csr_matrix(dense), rng.standard_normal(n), KrylovConfig(tolerance=1e-10, restart=n)
    )
    history = np.array(result.residual_norms)
    assert len(history) == result.iterations + 1
    assert np.all(np.diff(history) <= 1e-12)


def test_gmres_iteration_cap(rng):
    n = 40
    dense = np.diag(np.linspace(1.0, 1e4, n)) + rng.standard_normal((n, n))
    result = gmres_solve(
        sparse.csr_matrix(dense),
        rng.standard_normal(n),
        KrylovConfig(tolerance=1e-14, restart=3, max_iterations=6),
    )
    assert not result.converged
    assert result.iterations == 6
    assert np.all(np.isfinite(result.x))
