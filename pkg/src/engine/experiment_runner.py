"""Benchmark harness: single runs and parameter sweeps"""

from typing import List, Optional

import structlog

from ..ddm.schwarz import SchwarzSolver
from ..exceptions import MongeAmpereError
from ..geometry.grid import build_grid
from ..linalg.sparse import write_matrix_market
from ..models.domain import ProblemId
from ..models.report import CSV_COLUMNS, SolveReport
from ..models.run import RunConfig
from ..problems import AnalyticProblem, ProblemSpec, SampledProblem, get_problem
from ..problems.norms import l2_error, max_error
from ..utils.io import format_csv, write_csv, write_node_values, write_solution, write_text

logger = structlog.get_logger(__name__)


class ExperimentRunner:
    """
    Runs the DDM solver for harness configurations.

    A single run writes a key=value record; a sweep writes one CSV row per
    point of the cross product, in expansion order.
    """

    def load_problem(self, cfg: RunConfig) -> ProblemSpec:
        if cfg.problem == ProblemId.CUSTOM:
            return SampledProblem.from_file(cfg.data_file)
        return get_problem(cfg.problem)

    def run_single(self, cfg: RunConfig) -> SolveReport:
        """
        Solve one configuration and attach error norms when the exact
        solution is known.

        Raises:
            MongeAmpereError: on usage problems or solver failure
        """
        spec = cfg.domain_spec()
        grid = build_grid(spec)
        problem = self.load_problem(cfg)
        logger.info(
            "run_started",
            problem=problem.identifier.value,
            L=spec.L,
            N=spec.N,
            w=spec.w,
            m=cfg.m,
            n=cfg.n,
        )

        solver = SchwarzSolver(grid, problem, cfg.ddm_config())
        u, report = solver.solve()

        if isinstance(problem, AnalyticProblem):
            report = report.model_copy(
                update={
                    "l2_error": l2_error(u, problem.exact, grid),
                    "max_error": max_error(u, problem.exact, grid),
                }
            )

        logger.info(
            "run_finished",
            converged=report.converged,
            outer_iterations=report.outer_iterations,
            l2_error=report.l2_error,
            wall_seconds=round(report.wall_seconds, 3),
        )
        if cfg.out is not None:
            write_text(cfg.out, report.to_record())
        if cfg.dump_solution is not None:
            write_solution(cfg.dump_solution, grid.coords, u)
        if cfg.dump_residual is not None:
            write_node_values(cfg.dump_residual, solver.scheme.full_residual(u, solver.data))
        if cfg.dump_jacobian is not None:
            write_matrix_market(solver.scheme.assemble_jacobian(u, solver.data), cfg.dump_jacobian)
        return report

    def _failed_report(self, cfg: RunConfig, error: Exception) -> SolveReport:
        try:
            spec = cfg.domain_spec()
            h, N, w = spec.h, spec.N, spec.w
        except MongeAmpereError:
            # the grid itself is invalid
            h = cfg.h if cfg.h is not None else float("nan")
            N, w = cfg.N or 0, 0
        return SolveReport(
            problem=cfg.problem.value,
            L=cfg.L,
            h=h,
            N=N,
            w=w,
            m=cfg.m,
            n=cfg.n,
            p_x=cfg.overlap_x,
            p_y=cfg.overlap_y,
            converged=False,
            message=str(error),
        )

    def run_sweep(self, cfg: RunConfig) -> List[SolveReport]:
        """Every sweep point in order; solver failures become non-converged rows"""
        reports: List[SolveReport] = []
        for point in cfg.expand():
            try:
                reports.append(self.run_single(point))
            except MongeAmpereError as e:
                logger.error(
                    "sweep_point_failed",
                    problem=point.problem.value,
                    L=point.L,
                    m=point.m,
                    n=point.n,
                    error=str(e),
                )
                reports.append(self._failed_report(point, e))

        if cfg.out is not None:
            write_csv(cfg.out, CSV_COLUMNS, (r.to_csv_row() for r in reports))
        return reports

    @staticmethod
    def format_sweep(reports: List[SolveReport]) -> str:
        return format_csv(CSV_COLUMNS, (r.to_csv_row() for r in reports))


def run_experiment(
    cfg: RunConfig, runner: Optional[ExperimentRunner] = None
) -> List[SolveReport]:
    """A sweep when cfg carries one, otherwise a single run"""
    runner = runner or ExperimentRunner()
    if cfg.sweep is not None:
        return runner.run_sweep(cfg)
    return [runner.run_single(cfg)]
