"""Problem interface"""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from ..geometry.grid import Grid
from ..models.domain import ProblemId
from ..scheme.data import ProblemData


class ProblemSpec(ABC):
    """Base class for Dirichlet Monge-Ampere problems"""

    def __init__(self, identifier: ProblemId):
        self.identifier = identifier

    @abstractmethod
    def sample(self, grid: Grid) -> ProblemData:
        """
        Sample the problem on a grid.

        Args:
            grid: Grid whose interior nodes receive f and boundary nodes g

        Returns:
            ProblemData for the scheme
        """
        pass

    @property
    def has_exact(self) -> bool:
        return False

    def exact_on(self, grid: Grid) -> Optional[np.ndarray]:
        """Exact solution at every node, if known"""
        return None

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(identifier={self.identifier.value})"


class AnalyticProblem(ProblemSpec):
    """Problem given by point evaluators; g is the exact solution on the boundary"""

    @abstractmethod
    def rhs(self, points: np.ndarray) -> np.ndarray:
        """f at points of shape (k, 2)"""
        pass

    @abstractmethod
    def exact(self, points: np.ndarray) -> np.ndarray:
        """Exact solution at points of shape (k, 2)"""
        pass

    def boundary(self, points: np.ndarray) -> np.ndarray:
        return self.exact(points)

    @property
    def has_exact(self) -> bool:
        return True

    def exact_on(self, grid: Grid) -> np.ndarray:
        return self.exact(grid.coords)

    def sample(self, grid: Grid) -> ProblemData:
        return ProblemData(
            f=self.rhs(grid.interior_coords), g=self.boundary(grid.boundary_coords)
        )
