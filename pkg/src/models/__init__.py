"""Configuration and report models"""

from .domain import DomainSpec, DecompositionSpec, NodeKind, ProblemId, stencil_width
from .solver import KrylovConfig, NewtonConfig, DdmConfig
from .report import NewtonReport, SolveReport, CSV_COLUMNS
from .run import RunConfig, SweepSpec

__all__ = [
    "DomainSpec",
    "DecompositionSpec",
    "NodeKind",
    "ProblemId",
    "stencil_width",
    "KrylovConfig",
    "NewtonConfig",
    "DdmConfig",
    "NewtonReport",
    "SolveReport",
    "CSV_COLUMNS",
    "RunConfig",
    "SweepSpec",
]
