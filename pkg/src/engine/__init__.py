"""Benchmark harness"""

from .experiment_runner import ExperimentRunner, run_experiment
from .sweep_loader import SweepLoader, load_sweep, parse_partition, percent

__all__ = [
    "ExperimentRunner",
    "run_experiment",
    "SweepLoader",
    "load_sweep",
    "parse_partition",
    "percent",
]
