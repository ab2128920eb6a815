"""Additive Schwarz outer iteration"""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np
import structlog

from ..exceptions import SubdomainDivergedError
from ..geometry.grid import Grid
from ..models.report import NewtonReport, SolveReport
from ..models.solver import DdmConfig
from ..problems.base import ProblemSpec
from ..scheme.operator import MongeAmpereScheme
from .decomposition import decompose
from .initialization import coarse_start, quadratic_seed
from .local_solve import solve_restricted

logger = structlog.get_logger(__name__)


class SchwarzSolver:
    """
    Overlapping domain decomposition solver.

    One outer step solves every subdomain problem with all values outside
    G_i frozen to the previous iterate, then merges the subdomain solutions
    with the partition-of-unity weights. Subdomain solves are independent,
    so the result does not depend on their order or on the thread count.
    """

    def __init__(
        self,
        grid: Grid,
        problem: ProblemSpec,
        cfg: Optional[DdmConfig] = None,
        scheme: Optional[MongeAmpereScheme] = None,
    ):
        self.grid = grid
        self.problem = problem
        self.cfg = cfg or DdmConfig()
        self.scheme = scheme or MongeAmpereScheme(grid)
        self.data = problem.sample(grid)
        self.decomposition = decompose(grid.spec, self.cfg.decomposition)
        self.newton_threshold = self.cfg.subdomain_threshold(grid.h)
        self.outer_threshold = self.cfg.threshold(grid.h)

    def subdomain_residual(self, i: int, u_i: np.ndarray, v: np.ndarray, node: int) -> float:
        """Row `node` of subdomain operator i at u_i with exterior data v"""
        if not self.grid.is_interior(node):
            return self.scheme.residual(u_i, self.data, node)
        if node in self.decomposition[i]:
            return self.scheme.residual(u_i, self.data, node)
        return float(u_i[node] - v[node])

    def solve_subdomain(self, i: int, v: np.ndarray) -> Tuple[np.ndarray, NewtonReport]:
        """
        Solution operator S_i[v]: v outside G_i, g on the boundary, Newton
        solution inside G_i.

        Raises:
            SubdomainDivergedError: if Newton does not reach the threshold
        """
        u_i, report = solve_restricted(
            self.scheme,
            self.data,
            self.decomposition[i].nodes,
            v,
            self.cfg.newton,
            self.newton_threshold,
        )
        if not report.converged:
            raise SubdomainDivergedError(i, report)
        return u_i, report

    def iterate(self, u_prev: np.ndarray) -> Tuple[np.ndarray, List[NewtonReport]]:
        """u_next = sum_i lambda_i S_i[u_prev] on the interior, g on the boundary"""
        v = self.data.with_boundary(u_prev)
        indices = range(len(self.decomposition))
        if self.cfg.threads > 1 and len(self.decomposition) > 1:
            with ThreadPoolExecutor(max_workers=self.cfg.threads) as pool:
                results = list(pool.map(lambda i: self.solve_subdomain(i, v), indices))
        else:
            results = [self.solve_subdomain(i, v) for i in indices]

        n = self.grid.n_interior
        merged = np.zeros(n)
        # fixed subdomain order keeps the sum reproducible
        for i, (u_i, _) in enumerate(results):
            merged += self.decomposition.weights[i] * u_i[:n]
        u_next = v.copy()
        u_next[:n] = merged
        return u_next, [report for _, report in results]

    def initial_guess(self) -> Tuple[np.ndarray, bool]:
        if self.cfg.coarse_initialization:
            return coarse_start(self.problem, self.grid, self.cfg.newton)
        return quadratic_seed(self.grid, self.data), False

    def solve(self, u0: Optional[np.ndarray] = None) -> Tuple[np.ndarray, SolveReport]:
        """
        Repeat outer steps until the interior residual 2-norm drops below the
        threshold (h by default), max_outer is reached, or an outer step
        leaves every subdomain untouched.

        Returns:
            The final iterate (best seen when not converged) and a report
            without error norms
        """
        started = time.perf_counter()
        fallback = False
        if u0 is None:
            u, fallback = self.initial_guess()
        else:
            u = self.data.with_boundary(u0)

        norm = self.scheme.residual_norm(u, self.data)
        history = [norm]
        best_u, best_norm = u, norm
        newton_total = 0
        krylov_total = 0
        outer = 0
        message = None

        while norm >= self.outer_threshold and outer < self.cfg.max_outer:
            u, reports = self.iterate(u)
            outer += 1
            newton_total += sum(r.iterations for r in reports)
            krylov_total += sum(r.krylov_iterations for r in reports)
            norm = self.scheme.residual_norm(u, self.data)
            history.append(norm)
            logger.info(
                "ddm_iteration",
                iteration=outer,
                residual=norm,
                newton_iterations=sum(r.iterations for r in reports),
            )
            if norm < best_norm:
                best_u, best_norm = u, norm
            if norm >= self.outer_threshold and all(r.iterations == 0 for r in reports):
                # no subdomain moved, so further outer steps repeat this iterate
                message = "outer iteration stalled"
                logger.warning("ddm_stalled", iteration=outer, residual=norm)
                break

        converged = norm < self.outer_threshold
        if not converged:
            logger.warning("ddm_not_converged", iterations=outer, residual=norm)
            u = best_u

        spec = self.grid.spec
        dspec = self.cfg.decomposition
        report = SolveReport(
            problem=self.problem.identifier.value,
            L=spec.L,
            h=spec.h,
            N=spec.N,
            w=spec.w,
            m=dspec.m,
            n=dspec.n,
            p_x=dspec.overlap_x,
            p_y=dspec.overlap_y,
            outer_iterations=outer,
            converged=converged,
            total_newton_iterations=newton_total,
            total_krylov_iterations=krylov_total,
            wall_seconds=time.perf_counter() - started,
            residual_history=history,
            coarse_fallback=fallback,
            message=message,
        )
        return u, report
