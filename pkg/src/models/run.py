"""Harness run and sweep models"""

import itertools
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from .domain import DecompositionSpec, DomainSpec, ProblemId
from .solver import DdmConfig, KrylovConfig, NewtonConfig

DUMP_FIELDS = ("dump_solution", "dump_residual", "dump_jacobian")


class SweepSpec(BaseModel):
    """Lists crossed in the order problem, L, h (or N), partition, overlap"""
    problems: List[ProblemId] = Field(default_factory=lambda: [ProblemId.EX1])
    lengths: List[float]
    spacings: Optional[List[float]] = None
    sizes: Optional[List[int]] = None
    partitions: List[Tuple[int, int]] = Field(default_factory=lambda: [(1, 1)])
    overlaps: List[Tuple[float, float]] = Field(default_factory=lambda: [(0.2, 0.2)])

    @model_validator(mode="after")
    def _check_lists(self) -> "SweepSpec":
        if (self.spacings is None) == (self.sizes is None):
            raise ValueError("exactly one of h or N must be swept")
        for name in ("problems", "lengths", "partitions", "overlaps"):
            if not getattr(self, name):
                raise ValueError(f"sweep list '{name}' is empty")
        if not (self.spacings or self.sizes):
            raise ValueError("sweep list for h/N is empty")
        return self


class RunConfig(BaseModel):
    """Everything one harness invocation needs"""
    problem: ProblemId = ProblemId.EX1
    L: float = Field(0.5, gt=0)
    h: Optional[float] = Field(None, gt=0)
    N: Optional[int] = Field(None, ge=1)
    m: int = Field(1, ge=1)
    n: int = Field(1, ge=1)
    overlap_x: float = Field(0.2, ge=0.0, le=1.0)
    overlap_y: float = Field(0.2, ge=0.0, le=1.0)
    max_outer: int = Field(500, ge=1)
    max_newton: int = Field(200, ge=1)
    newton_tol_factor: Optional[float] = Field(None, gt=0)
    krylov_tol: float = Field(1e-5, gt=0)
    restart: int = Field(30, ge=1)
    jacobi: bool = False
    threads: int = Field(1, ge=1)
    coarse_init: bool = True
    out: Optional[Path] = None
    dump_solution: Optional[Path] = None
    dump_residual: Optional[Path] = None
    dump_jacobian: Optional[Path] = None
    data_file: Optional[Path] = None
    sweep: Optional[SweepSpec] = None

    @model_validator(mode="after")
    def _check_resolution(self) -> "RunConfig":
        if self.sweep is None and (self.h is None) == (self.N is None):
            raise ValueError("exactly one of h or N must be given")
        if self.problem == ProblemId.CUSTOM and self.data_file is None:
            raise ValueError("custom problems need a sampled data file")
        return self

    def domain_spec(self) -> DomainSpec:
        if self.N is not None:
            return DomainSpec(L=self.L, N=self.N)
        return DomainSpec.from_spacing(self.L, self.h)

    def decomposition(self) -> DecompositionSpec:
        return DecompositionSpec(
            m=self.m, n=self.n, overlap_x=self.overlap_x, overlap_y=self.overlap_y
        )

    def ddm_config(self) -> DdmConfig:
        h = self.domain_spec().h
        # unset leaves subdomain solves at h / N_d
        tolerance = None if self.newton_tol_factor is None else self.newton_tol_factor * h
        newton = NewtonConfig(
            tolerance=tolerance,
            max_iterations=self.max_newton,
            krylov=KrylovConfig(
                tolerance=self.krylov_tol, restart=self.restart, jacobi=self.jacobi
            ),
        )
        return DdmConfig(
            decomposition=self.decomposition(),
            max_outer=self.max_outer,
            newton=newton,
            coarse_initialization=self.coarse_init,
            threads=self.threads,
        )

    def expand(self) -> Iterator["RunConfig"]:
        """Single-run configs for every point of the sweep, in cross-product order"""
        if self.sweep is None:
            yield self
            return
        sweep = self.sweep
        resolutions = (
            [("h", h) for h in sweep.spacings]
            if sweep.spacings is not None
            else [("N", N) for N in sweep.sizes]
        )
        base = self.model_dump(exclude={"sweep", "h", "N", "out", *DUMP_FIELDS})
        for problem, L, (key, value), (m, n), (px, py) in itertools.product(
            sweep.problems, sweep.lengths, resolutions, sweep.partitions, sweep.overlaps
        ):
            fields = dict(base)
            fields.update(
                problem=problem, L=L, m=m, n=n, overlap_x=px, overlap_y=py, **{key: value}
            )
            yield RunConfig(**fields)
