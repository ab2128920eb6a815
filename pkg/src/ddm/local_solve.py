"""Newton solves over a subset of interior unknowns"""

from typing import Tuple

import numpy as np

from ..models.report import NewtonReport
from ..models.solver import NewtonConfig
from ..nonlinear.newton import newton_solve
from ..scheme.data import ProblemData
from ..scheme.operator import MongeAmpereScheme
from ..scheme.system import SchemeSystem


def solve_restricted(
    scheme: MongeAmpereScheme,
    data: ProblemData,
    unknowns: np.ndarray,
    frozen: np.ndarray,
    cfg: NewtonConfig,
    threshold: float,
) -> Tuple[np.ndarray, NewtonReport]:
    """
    Newton-solve the scheme rows at `unknowns`, warm-started from `frozen`.

    Returns the full grid function: solved values at `unknowns`, g on the
    boundary and `frozen` everywhere else.
    """
    system = SchemeSystem(scheme, data, unknowns, frozen)
    newton_cfg = cfg.model_copy(update={"tolerance": threshold})
    x, report = newton_solve(
        system.residual, system.jacobian, system.restrict(system.base), newton_cfg
    )
    return system.expand(x), report


def solve_global(
    scheme: MongeAmpereScheme,
    data: ProblemData,
    u0: np.ndarray,
    cfg: NewtonConfig,
) -> Tuple[np.ndarray, NewtonReport]:
    """Single-domain Newton solve over every interior node"""
    grid = scheme.grid
    return solve_restricted(scheme, data, grid.interior_ids, u0, cfg, cfg.threshold(grid.h))
