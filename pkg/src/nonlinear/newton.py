"""Damped Newton iteration with backtracking line search"""

from typing import Callable, Tuple

import numpy as np
import structlog
from scipy import sparse

from ..exceptions import LinearSolveFailure
from ..linalg.gmres import gmres_solve
from ..models.report import NewtonReport
from ..models.solver import NewtonConfig

logger = structlog.get_logger(__name__)

ResidualFn = Callable[[np.ndarray], np.ndarray]
JacobianFn = Callable[[np.ndarray], sparse.spmatrix]


def newton_solve(
    residual_fn: ResidualFn,
    jacobian_fn: JacobianFn,
    u0: np.ndarray,
    cfg: NewtonConfig,
) -> Tuple[np.ndarray, NewtonReport]:
    """
    Solve F(u) = 0 by Newton's method with GMRES inner solves.

    Each step solves J y = -F and backtracks lam = 1, 1/2, 1/4, ... until
    ||F(u + lam y)|| <= (1 - c lam) ||F(u)||. If lam drops below
    cfg.min_step the full step is taken anyway and counted as a fallback.

    Args:
        residual_fn: Maps the unknown vector to the residual vector
        jacobian_fn: Maps the unknown vector to the sparse Jacobian
        u0: Starting iterate
        cfg: Newton settings; cfg.tolerance must be set

    Returns:
        The final iterate (the best one seen if not converged) and a report

    Raises:
        LinearSolveFailure: if GMRES fails or produces a non-finite direction
    """
    if cfg.tolerance is None:
        raise ValueError("Newton tolerance must be resolved before solving")
    if not np.all(np.isfinite(u0)):
        raise ValueError("initial iterate is not finite")

    u = np.array(u0, dtype=float, copy=True)
    F = residual_fn(u)
    norm = float(np.linalg.norm(F))
    history = [norm]
    best_u, best_norm = u, norm
    krylov_total = 0
    fallbacks = 0
    iteration = 0

    while norm >= cfg.tolerance and iteration < cfg.max_iterations:
        J = jacobian_fn(u)
        try:
            result = gmres_solve(J, -F, cfg.krylov)
        except (np.linalg.LinAlgError, ValueError) as e:
            raise LinearSolveFailure(f"Krylov solver failed: {e}", iteration) from e
        if not np.all(np.isfinite(result.x)):
            raise LinearSolveFailure("Krylov solver returned a non-finite step", iteration)
        krylov_total += result.iterations
        step = result.x

        lam = 1.0
        while True:
            trial = u + lam * step
            F_trial = residual_fn(trial)
            trial_norm = float(np.linalg.norm(F_trial))
            if trial_norm <= (1.0 - cfg.sufficient_decrease * lam) * norm:
                break
            lam *= 0.5
            if lam < cfg.min_step:
                logger.warning("line_search_exhausted", iteration=iteration, residual=norm)
                fallbacks += 1
                lam = 1.0
                trial = u + step
                F_trial = residual_fn(trial)
                trial_norm = float(np.linalg.norm(F_trial))
                break

        u, F, norm = trial, F_trial, trial_norm
        iteration += 1
        history.append(norm)
        logger.debug(
            "newton_step",
            iteration=iteration,
            residual=norm,
            step=lam,
            krylov_iterations=result.iterations,
            krylov_converged=result.converged,
        )
        if norm < best_norm:
            best_u, best_norm = u, norm

    converged = norm < cfg.tolerance
    if not converged:
        logger.warning(
            "newton_not_converged", iterations=iteration, residual=norm, best=best_norm
        )
        u, norm = best_u, best_norm

    report = NewtonReport(
        iterations=iteration,
        final_residual=norm,
        residual_history=history,
        converged=converged,
        krylov_iterations=krylov_total,
        line_search_fallbacks=fallbacks,
    )
    return u, report
