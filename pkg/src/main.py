"""Command-line entry point for the Monge-Ampere DDM solver"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

import structlog
from pydantic import ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from .engine import ExperimentRunner, load_sweep, parse_partition, percent, run_experiment
from .exceptions import MongeAmpereError, UsageError
from .geometry.grid import build_grid
from .models.domain import DomainSpec, ProblemId
from .models.run import RunConfig
from .utils.io import write_text
from .utils.log import configure_logging

EXIT_CONVERGED = 0
EXIT_NOT_CONVERGED = 2
EXIT_USAGE = 64

logger = structlog.get_logger(__name__)


class Settings(BaseSettings):
    """Defaults read from MA_* environment variables or .env"""
    log_level: str = "INFO"
    threads: int = 1
    krylov_tolerance: float = 1e-5
    restart: int = 30
    max_outer: int = 500
    max_newton: int = 200

    model_config = SettingsConfigDict(
        env_prefix="MA_", env_file=".env", case_sensitive=False, extra="ignore"
    )


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ma-ddm",
        description="Solve the Dirichlet Monge-Ampere equation on (-L, L)^2 with "
        "overlapping domain decomposition",
    )
    parser.add_argument("--problem", choices=[p.value for p in ProblemId], default="ex1")
    parser.add_argument("--L", type=float, default=0.5, help="half-width of the square")
    resolution = parser.add_mutually_exclusive_group()
    resolution.add_argument("--h", type=float, help="target grid spacing")
    resolution.add_argument("--N", type=int, help="interior nodes per axis")
    parser.add_argument("--nd", default="1x1", help="subdomain partition MxN (M along x)")
    parser.add_argument("--overlap", type=float, default=20.0, help="overlap in percent")
    parser.add_argument("--overlap-x", type=float, help="x overlap in percent")
    parser.add_argument("--overlap-y", type=float, help="y overlap in percent")
    parser.add_argument("--max-outer", type=int, default=settings.max_outer)
    parser.add_argument("--max-newton", type=int, default=settings.max_newton)
    parser.add_argument(
        "--newton-tol-factor",
        type=float,
        help="subdomain Newton tolerance as a multiple of h (default 1/N_d)",
    )
    parser.add_argument("--krylov-tol", type=float, default=settings.krylov_tolerance)
    parser.add_argument("--restart", type=int, default=settings.restart)
    parser.add_argument("--jacobi", action="store_true", help="Jacobi-precondition GMRES")
    parser.add_argument("--threads", type=int, default=settings.threads)
    parser.add_argument("--no-coarse-init", action="store_true")
    parser.add_argument("--out", type=Path, help="record (single run) or CSV (sweep) path")
    parser.add_argument("--dump-solution", type=Path, help="x,y,value table of the solution")
    parser.add_argument(
        "--dump-residual", type=Path, help="node_id,value table of every scheme row"
    )
    parser.add_argument(
        "--dump-jacobian", type=Path, help="Matrix Market file of the final Jacobian"
    )
    parser.add_argument("--sweep", type=Path, help="sweep file of key = v1, v2, ... lines")
    parser.add_argument("--data", type=Path, help="node_id,value file for --problem custom")
    parser.add_argument(
        "--emit-boundary-nodes",
        type=Path,
        metavar="PATH",
        help="write the node table for (L, N) and exit",
    )
    parser.add_argument("--log-level", default=settings.log_level)
    return parser


def build_run_config(args: argparse.Namespace) -> RunConfig:
    m, n = parse_partition(args.nd)
    overlap_x = args.overlap if args.overlap_x is None else args.overlap_x
    overlap_y = args.overlap if args.overlap_y is None else args.overlap_y
    sweep = load_sweep(args.sweep) if args.sweep is not None else None
    return RunConfig(
        problem=ProblemId(args.problem),
        L=args.L,
        h=args.h,
        N=args.N,
        m=m,
        n=n,
        overlap_x=percent(overlap_x),
        overlap_y=percent(overlap_y),
        max_outer=args.max_outer,
        max_newton=args.max_newton,
        newton_tol_factor=args.newton_tol_factor,
        krylov_tol=args.krylov_tol,
        restart=args.restart,
        jacobi=args.jacobi,
        threads=args.threads,
        coarse_init=not args.no_coarse_init,
        out=args.out,
        dump_solution=args.dump_solution,
        dump_residual=args.dump_residual,
        dump_jacobian=args.dump_jacobian,
        data_file=args.data,
        sweep=sweep,
    )


def emit_nodes(args: argparse.Namespace) -> None:
    if args.N is not None:
        spec = DomainSpec(L=args.L, N=args.N)
    elif args.h is not None:
        spec = DomainSpec.from_spacing(args.L, args.h)
    else:
        raise UsageError("--emit-boundary-nodes needs --h or --N")
    grid = build_grid(spec)
    write_text(args.emit_boundary_nodes, grid.dump())
    logger.info(
        "nodes_written",
        path=str(args.emit_boundary_nodes),
        interior=grid.n_interior,
        boundary=grid.n_boundary,
    )


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = Settings()
        args = build_parser(settings).parse_args(argv)
        configure_logging(args.log_level)
        if args.emit_boundary_nodes is not None:
            emit_nodes(args)
            return EXIT_CONVERGED
        cfg = build_run_config(args)
        points = list(cfg.expand())
        if cfg.sweep is None:
            cfg.domain_spec()
        logger.debug("runs_planned", count=len(points))
    except (UsageError, ValidationError, ValueError) as e:
        print(f"ma-ddm: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        reports = run_experiment(cfg)
    except UsageError as e:
        print(f"ma-ddm: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MongeAmpereError as e:
        logger.error("solve_failed", error=str(e))
        return EXIT_NOT_CONVERGED

    if cfg.out is None:
        if cfg.sweep is not None:
            sys.stdout.write(ExperimentRunner.format_sweep(reports))
        else:
            sys.stdout.write(reports[0].to_record())

    if all(r.converged for r in reports):
        return EXIT_CONVERGED
    return EXIT_NOT_CONVERGED


if __name__ == "__main__":
    sys.exit(main())
