"""Benchmark problems and error norms"""

from .base import ProblemSpec, AnalyticProblem
from .examples import SmoothExponential, DegenerateRadial, example1, example2, get_problem
from .sampled import SampledProblem
from .norms import l2_error, max_error

__all__ = [
    "ProblemSpec",
    "AnalyticProblem",
    "SmoothExponential",
    "DegenerateRadial",
    "example1",
    "example2",
    "get_problem",
    "SampledProblem",
    "l2_error",
    "max_error",
]
