"""Built-in benchmark problems"""

import numpy as np

from ..models.domain import ProblemId
from .base import AnalyticProblem, ProblemSpec


def _radius_squared(points: np.ndarray) -> np.ndarray:
    points = np.atleast_2d(points)
    return points[:, 0] ** 2 + points[:, 1] ** 2


class SmoothExponential(AnalyticProblem):
    """u = exp(|x|^2 / 2), f = (1 + |x|^2) exp(|x|^2); smooth and uniformly convex"""

    def __init__(self):
        super().__init__(ProblemId.EX1)

    def exact(self, points: np.ndarray) -> np.ndarray:
        return np.exp(_radius_squared(points) / 2.0)

    def rhs(self, points: np.ndarray) -> np.ndarray:
        r2 = _radius_squared(points)
        return (1.0 + r2) * np.exp(r2)


class DegenerateRadial(AnalyticProblem):
    """
    u = max(|x| - 1/5, 0)^(5/2), f = (3/8) max(5|x| - 1, 0)^2 / |x|.

    Only C^1 and flat on the disc |x| <= 1/5, where f vanishes.
    """

    def __init__(self):
        super().__init__(ProblemId.EX2)

    def exact(self, points: np.ndarray) -> np.ndarray:
        r = np.sqrt(_radius_squared(points))
        return np.maximum(r - 0.2, 0.0) ** 2.5

    def rhs(self, points: np.ndarray) -> np.ndarray:
        r = np.sqrt(_radius_squared(points))
        active = np.maximum(5.0 * r - 1.0, 0.0)
        out = np.zeros_like(r)
        nonzero = r > 0
        out[nonzero] = 0.375 * active[nonzero] ** 2 / r[nonzero]
        return out


def example1() -> SmoothExponential:
    return SmoothExponential()


def example2() -> DegenerateRadial:
    return DegenerateRadial()


def get_problem(identifier: ProblemId) -> ProblemSpec:
    """Built-in problem by id; sampled problems are loaded from files instead"""
    if identifier == ProblemId.EX1:
        return example1()
    if identifier == ProblemId.EX2:
        return example2()
    raise ValueError(f"problem '{identifier.value}' is not built in")
