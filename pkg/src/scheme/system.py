"""Scheme rows restricted to a set of unknowns with all other values frozen"""

import numpy as np
from scipy import sparse

from .data import ProblemData
from .operator import MongeAmpereScheme


class SchemeSystem:
    """
    Residual/Jacobian pair over `unknowns` (interior ids, sorted).

    Values outside `unknowns` come from `frozen`; boundary entries are
    always g, so boundary and frozen rows of the enlarged system vanish.
    """

    def __init__(
        self,
        scheme: MongeAmpereScheme,
        data: ProblemData,
        unknowns: np.ndarray,
        frozen: np.ndarray,
    ):
        self.scheme = scheme
        self.data = data
        self.unknowns = np.asarray(unknowns, dtype=np.int64)
        self.base = data.with_boundary(frozen)

    @property
    def size(self) -> int:
        return self.unknowns.size

    def restrict(self, u: np.ndarray) -> np.ndarray:
        return np.array(u[self.unknowns], dtype=float)

    def expand(self, x: np.ndarray) -> np.ndarray:
        u = self.base.copy()
        u[self.unknowns] = x
        return u

    def residual(self, x: np.ndarray) -> np.ndarray:
        return self.scheme.interior_residuals(self.expand(x), self.data, self.unknowns)

    def jacobian(self, x: np.ndarray) -> sparse.csr_matrix:
        return self.scheme.assemble_jacobian(self.expand(x), self.data, self.unknowns)
