"""Residual and exact Jacobian of the regularised quadrature scheme"""

from typing import Optional, Sequence, Union

import numpy as np
from scipy import sparse

from ..geometry.grid import Grid
from ..linalg.sparse import assemble_csr
from .data import ProblemData
from .quadrature import QuadratureWeights, quad_weights

Rows = Optional[Union[np.ndarray, Sequence[int]]]


class MongeAmpereScheme:
    """
    Monotone wide-stencil discretisation of det(D^2 u) = f.

    Interior rows:

        F = -((1/pi) sum_j mu_j / max(D_j, h^2))^(-2) - min(min_j D_j, h^2) + f

    where D_j is the (possibly uncentered) second difference along direction
    j. Boundary rows are u - g.
    """

    def __init__(self, grid: Grid, weights: Optional[QuadratureWeights] = None):
        self.grid = grid
        self.weights = weights or quad_weights(grid.directions)
        self.h2 = grid.h ** 2

        rp, rm = grid.r_plus, grid.r_minus
        span = rp + rm
        # D_j = c_plus * u(x+) + c_minus * u(x-) + c_center * u(x); exact on quadratics
        self.c_plus = 2.0 / (rp * span)
        self.c_minus = 2.0 / (rm * span)
        self.c_center = -2.0 / (rp * rm)

    def _rows(self, rows: Rows) -> np.ndarray:
        if rows is None:
            return self.grid.interior_ids
        return np.asarray(rows, dtype=np.int64)

    def second_differences(self, u: np.ndarray, rows: Rows = None) -> np.ndarray:
        """D_j at the given interior rows, shape (len(rows), 2w)"""
        rows = self._rows(rows)
        g = self.grid
        return (
            self.c_plus[rows] * u[g.plus[rows]]
            + self.c_minus[rows] * u[g.minus[rows]]
            + self.c_center[rows] * u[rows][:, None]
        )

    def dir_second_diff(self, u: np.ndarray, node: int, j: int) -> float:
        """Second difference of u at an interior node along direction j"""
        if not self.grid.is_interior(node):
            raise IndexError(f"node {node} is not interior")
        return float(self.second_differences(u, [node])[0, j])

    def interior_residuals(self, u: np.ndarray, data: ProblemData, rows: Rows = None) -> np.ndarray:
        rows = self._rows(rows)
        D = self.second_differences(u, rows)
        harmonic = (self.weights.values / np.maximum(D, self.h2)).sum(axis=1) / np.pi
        return -harmonic ** -2 - np.minimum(D.min(axis=1), self.h2) + data.f[rows]

    def residual(self, u: np.ndarray, data: ProblemData, node: int) -> float:
        """Scheme row at one node (interior or boundary)"""
        if self.grid.is_interior(node):
            return float(self.interior_residuals(u, data, [node])[0])
        if node >= self.grid.n_nodes:
            raise IndexError(f"node {node} out of range")
        return float(u[node] - data.g[node - self.grid.n_interior])

    def full_residual(self, u: np.ndarray, data: ProblemData) -> np.ndarray:
        """All rows, interior ids first, then boundary ids"""
        n = self.grid.n_interior
        return np.concatenate([self.interior_residuals(u, data), u[n:] - data.g])

    def residual_norm(self, u: np.ndarray, data: ProblemData) -> float:
        """2-norm over interior rows"""
        return float(np.linalg.norm(self.interior_residuals(u, data)))

    def classify(self, u: np.ndarray, data: ProblemData, slack: float = 0.0) -> str:
        """'subsolution' if every row is <= slack, 'supersolution' if >= -slack"""
        rows = self.full_residual(u, data)
        if np.all(rows <= slack):
            return "subsolution"
        if np.all(rows >= -slack):
            return "supersolution"
        return "neither"

    def assemble_jacobian(
        self, u: np.ndarray, data: ProblemData, unknowns: Rows = None
    ) -> sparse.csr_matrix:
        """
        Exact derivative of the interior rows at `unknowns` with respect to u
        at `unknowns`; every other node is fixed data.

        At kinks, max(D_j, h^2) differentiates as D_j when D_j >= h^2, and the
        min term differentiates through its first minimising direction only
        when that direction is strictly below h^2.
        """
        rows = self._rows(unknowns)
        g = self.grid
        k = rows.size
        D = self.second_differences(u, rows)
        mu = self.weights.values

        clipped = np.maximum(D, self.h2)
        harmonic = (mu / clipped).sum(axis=1) / np.pi
        dF_dD = np.where(
            D >= self.h2, -2.0 * mu / (np.pi * harmonic[:, None] ** 3 * clipped ** 2), 0.0
        )
        first_min = D.argmin(axis=1)
        min_active = D[np.arange(k), first_min] < self.h2
        dF_dD[np.flatnonzero(min_active), first_min[min_active]] -= 1.0

        column = np.full(g.n_nodes, -1, dtype=np.int64)
        column[rows] = np.arange(k)
        local = np.arange(k)

        row_parts = [local]
        col_parts = [local]
        val_parts = [(dF_dD * self.c_center[rows]).sum(axis=1)]
        for neighbours, coeff in ((g.plus, self.c_plus), (g.minus, self.c_minus)):
            cols = column[neighbours[rows]]
            vals = dF_dD * coeff[rows]
            keep = (cols >= 0) & (vals != 0.0)
            row_parts.append(np.broadcast_to(local[:, None], cols.shape)[keep])
            col_parts.append(cols[keep])
            val_parts.append(vals[keep])

        return assemble_csr(
            np.concatenate(row_parts),
            np.concatenate(col_parts),
            np.concatenate(val_parts),
            k,
        )
