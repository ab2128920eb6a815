"""Starting guesses: quadratic seed and coarse-grid solve"""

from typing import Optional, Tuple

import numpy as np
import structlog
from scipy.interpolate import RegularGridInterpolator

from ..exceptions import LinearSolveFailure
from ..geometry.grid import Grid, build_grid
from ..models.solver import NewtonConfig
from ..problems.base import AnalyticProblem, ProblemSpec
from ..scheme.data import ProblemData
from ..scheme.operator import MongeAmpereScheme
from .local_solve import solve_global

logger = structlog.get_logger(__name__)

COARSENING = 4


def quadratic_seed(grid: Grid, data: ProblemData) -> np.ndarray:
    """u = |x|^2 / 2 at interior nodes, g on the boundary"""
    u = np.empty(grid.n_nodes)
    xy = grid.interior_coords
    u[: grid.n_interior] = 0.5 * (xy[:, 0] ** 2 + xy[:, 1] ** 2)
    return data.with_boundary(u)


def _lattice_axis(L: float, N: int) -> np.ndarray:
    axis = -L + np.arange(N + 2) * (2.0 * L / (N + 1))
    axis[0], axis[-1] = -L, L
    return axis


def coarse_start(
    problem: ProblemSpec, grid: Grid, cfg: Optional[NewtonConfig] = None
) -> Tuple[np.ndarray, bool]:
    """
    Coarse-grid initial guess and whether it fell back to the quadratic seed.

    The coarse lattice has N_c = (N + 1) // 4 - 1 nodes per axis (at least 1),
    i.e. spacing close to 4h. Its Newton solution, framed by g on the walls,
    is bilinearly interpolated onto the fine interior. A coarse solve that
    fails or does not converge falls back to the quadratic seed.
    """
    data = problem.sample(grid)
    if not isinstance(problem, AnalyticProblem):
        logger.warning("coarse_init_unavailable", problem=problem.identifier.value)
        return quadratic_seed(grid, data), True

    coarse_spec = grid.spec.coarsened(COARSENING)
    coarse_grid = build_grid(coarse_spec)
    coarse_data = problem.sample(coarse_grid)
    newton_cfg = (cfg or NewtonConfig()).model_copy(update={"tolerance": None})
    try:
        u_coarse, report = solve_global(
            MongeAmpereScheme(coarse_grid),
            coarse_data,
            quadratic_seed(coarse_grid, coarse_data),
            newton_cfg,
        )
    except LinearSolveFailure as e:
        logger.warning("coarse_solve_failed", N=coarse_spec.N, error=str(e))
        return quadratic_seed(grid, data), True
    if not report.converged:
        logger.warning(
            "coarse_solve_failed", N=coarse_spec.N, residual=report.final_residual
        )
        return quadratic_seed(grid, data), True

    Nc = coarse_spec.N
    axis = _lattice_axis(grid.spec.L, Nc)
    X, Y = np.meshgrid(axis, axis, indexing="ij")
    table = problem.boundary(np.column_stack([X.ravel(), Y.ravel()])).reshape(X.shape)
    # interior id (j-1)*Nc + (i-1) -> table[i, j]
    table[1:-1, 1:-1] = u_coarse[: coarse_grid.n_interior].reshape(Nc, Nc).T

    interpolate = RegularGridInterpolator((axis, axis), table, method="linear")
    u = np.empty(grid.n_nodes)
    u[: grid.n_interior] = interpolate(grid.interior_coords)
    logger.debug("coarse_init", N_coarse=Nc, newton_iterations=report.iterations)
    return data.with_boundary(u), False


def coarse_initialize(
    problem: ProblemSpec, grid: Grid, cfg: Optional[NewtonConfig] = None
) -> np.ndarray:
    """Initial guess on `grid` from a solve at roughly four times the spacing"""
    return coarse_start(problem, grid, cfg)[0]
