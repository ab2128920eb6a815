"""Discrete error norms over interior nodes"""

from typing import Callable

import numpy as np

from ..geometry.grid import Grid

Evaluator = Callable[[np.ndarray], np.ndarray]


def l2_error(u: np.ndarray, exact: Evaluator, grid: Grid) -> float:
    """h * ||u - u_exact||_2 over interior nodes, approximating the L2 integral"""
    diff = u[: grid.n_interior] - exact(grid.interior_coords)
    return float(grid.h * np.sqrt(np.sum(diff ** 2)))


def max_error(u: np.ndarray, exact: Evaluator, grid: Grid) -> float:
    diff = u[: grid.n_interior] - exact(grid.interior_coords)
    return float(np.max(np.abs(diff)))
