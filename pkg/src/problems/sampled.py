"""Custom problems from sampled node values"""

from pathlib import Path
from typing import Union

import numpy as np

from ..exceptions import UsageError
from ..geometry.grid import Grid
from ..models.domain import ProblemId
from ..scheme.data import ProblemData
from ..utils.io import read_node_values
from .base import ProblemSpec


class SampledProblem(ProblemSpec):
    """
    f on interior ids and g on boundary ids of one specific grid.

    The node ids must come from a grid emitted for the same (L, N).
    """

    def __init__(self, values: np.ndarray):
        super().__init__(ProblemId.CUSTOM)
        self.values = np.asarray(values, dtype=float)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "SampledProblem":
        return cls(read_node_values(path))

    def sample(self, grid: Grid) -> ProblemData:
        if self.values.shape != (grid.n_nodes,):
            raise UsageError(
                f"sampled data has {self.values.shape[0]} values, grid has {grid.n_nodes} nodes"
            )
        return ProblemData(f=self.values[: grid.n_interior], g=self.values[grid.n_interior:])
