"""Solver configuration models"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from .domain import DecompositionSpec


class KrylovConfig(BaseModel):
    """Restarted GMRES settings"""
    model_config = ConfigDict(frozen=True)

    tolerance: float = Field(1e-5, gt=0, description="Relative residual tolerance")
    restart: int = Field(30, ge=1, description="Arnoldi basis size before restart")
    max_iterations: Optional[int] = Field(None, ge=1, description="Total cap, default 10 * n")
    jacobi: bool = Field(False, description="Right diagonal preconditioning")

    def iteration_cap(self, n: int) -> int:
        return self.max_iterations if self.max_iterations is not None else 10 * n


class NewtonConfig(BaseModel):
    """Damped Newton settings"""
    model_config = ConfigDict(frozen=True)

    tolerance: Optional[float] = Field(
        None, gt=0, description="Residual 2-norm threshold; callers default it to h"
    )
    max_iterations: int = Field(200, ge=1)
    sufficient_decrease: float = Field(1e-4, gt=0, lt=1)
    min_step: float = Field(1e-8, gt=0, lt=1)
    krylov: KrylovConfig = Field(default_factory=KrylovConfig)

    def threshold(self, h: float) -> float:
        return self.tolerance if self.tolerance is not None else h


class DdmConfig(BaseModel):
    """Outer Schwarz iteration settings"""
    model_config = ConfigDict(frozen=True)

    decomposition: DecompositionSpec = Field(default_factory=DecompositionSpec)
    outer_tolerance: Optional[float] = Field(
        None, gt=0, description="Global residual 2-norm threshold, default h"
    )
    max_outer: int = Field(500, ge=1)
    newton: NewtonConfig = Field(default_factory=NewtonConfig)
    coarse_initialization: bool = True
    threads: int = Field(1, ge=1)

    def threshold(self, h: float) -> float:
        return self.outer_tolerance if self.outer_tolerance is not None else h

    def subdomain_threshold(self, h: float) -> float:
        """
        Newton threshold for subdomain solves, default h / N_d.

        When every subdomain residual is below h / N_d the interior residual
        over the whole grid is below h, so the outer loop cannot stall above
        its own threshold.
        """
        if self.newton.tolerance is not None:
            return self.newton.tolerance
        return h / self.decomposition.count
