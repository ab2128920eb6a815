"""Restarted GMRES with modified Gram-Schmidt and Givens rotations"""

from typing import List, NamedTuple, Optional

import numpy as np
import scipy.linalg as scla
import structlog
from scipy import sparse

from ..models.solver import KrylovConfig

logger = structlog.get_logger(__name__)

REORTHOGONALIZE_ABOVE = 1e-8


class KrylovResult(NamedTuple):
    x: np.ndarray
    converged: bool
    iterations: int
    residual_norms: List[float]


def _least_squares(H: np.ndarray, g: np.ndarray, k: int) -> np.ndarray:
    R = H[:k, :k]
    if np.all(np.abs(np.diag(R)) > 0):
        return scla.solve_triangular(R, g[:k])
    return np.linalg.lstsq(R, g[:k], rcond=None)[0]


def gmres_solve(
    A: sparse.spmatrix,
    b: np.ndarray,
    cfg: Optional[KrylovConfig] = None,
    x0: Optional[np.ndarray] = None,
) -> KrylovResult:
    """
    Solve A x = b by restarted GMRES.

    Args:
        A: Square sparse (or dense) matrix
        b: Right-hand side
        cfg: Tolerance, restart length, iteration cap and preconditioning
        x0: Initial guess, zero by default

    Returns:
        KrylovResult with the iterate, convergence flag, total inner
        iterations and the relative residual after each inner step.
        On an exact Arnoldi breakdown or when the iteration cap is hit, the
        current iterate is returned with converged=False unless it already
        meets the tolerance.
    """
    cfg = cfg or KrylovConfig()
    b = np.asarray(b, dtype=float)
    n = b.shape[0]
    if n < 1:
        raise ValueError("empty system")

    b_norm = float(np.linalg.norm(b))
    x = np.zeros(n) if x0 is None else np.array(x0, dtype=float)
    if b_norm == 0.0:
        return KrylovResult(np.zeros(n), True, 0, [0.0])

    if cfg.jacobi:
        diag = np.asarray(A.diagonal(), dtype=float)
        inv_diag = np.where(diag != 0.0, 1.0 / np.where(diag != 0.0, diag, 1.0), 1.0)
    else:
        inv_diag = None

    def precondition(v: np.ndarray) -> np.ndarray:
        return v if inv_diag is None else inv_diag * v

    cap = cfg.iteration_cap(n)
    target = cfg.tolerance * b_norm
    r = b - A @ x
    beta = float(np.linalg.norm(r))
    history = [beta / b_norm]
    total = 0
    breakdown = False

    while beta > target and total < cap and not breakdown:
        m = min(cfg.restart, cap - total)
        V = np.zeros((m + 1, n))
        H = np.zeros((m + 1, m))
        cs = np.zeros(m)
        sn = np.zeros(m)
        g = np.zeros(m + 1)
        g[0] = beta
        V[0] = r / beta
        k = 0

        for j in range(m):
            w = A @ precondition(V[j])
            for i in range(j + 1):
                H[i, j] = V[i] @ w
                w -= H[i, j] * V[i]
            w_norm = float(np.linalg.norm(w))
            if w_norm > 0.0 and np.max(np.abs(V[: j + 1] @ w)) > REORTHOGONALIZE_ABOVE * w_norm:
                for i in range(j + 1):
                    correction = V[i] @ w
                    H[i, j] += correction
                    w -= correction * V[i]
                w_norm = float(np.linalg.norm(w))
            H[j + 1, j] = w_norm

            for i in range(j):
                upper = cs[i] * H[i, j] + sn[i] * H[i + 1, j]
                H[i + 1, j] = -sn[i] * H[i, j] + cs[i] * H[i + 1, j]
                H[i, j] = upper
            denom = float(np.hypot(H[j, j], H[j + 1, j]))
            if denom == 0.0:
                breakdown = True
                break
            cs[j] = H[j, j] / denom
            sn[j] = H[j + 1, j] / denom
            H[j, j] = denom
            H[j + 1, j] = 0.0
            g[j + 1] = -sn[j] * g[j]
            g[j] = cs[j] * g[j]

            k = j + 1
            total += 1
            history.append(abs(g[j + 1]) / b_norm)
            if abs(g[j + 1]) <= target:
                break
            if w_norm == 0.0:
                breakdown = True
                break
            V[j + 1] = w / w_norm

        if k > 0:
            y = _least_squares(H, g, k)
            x = x + precondition(V[:k].T @ y)
        r = b - A @ x
        beta = float(np.linalg.norm(r))

    converged = beta <= target
    if breakdown and not converged:
        logger.debug("gmres_breakdown", iterations=total, relative_residual=beta / b_norm)
    return KrylovResult(x, converged, total, history)
