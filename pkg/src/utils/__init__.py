"""Utility modules"""

from .io import (
    format_csv,
    read_node_values,
    write_csv,
    write_node_values,
    write_solution,
    write_text,
)
from .log import configure_logging

__all__ = [
    "format_csv",
    "write_csv",
    "read_node_values",
    "write_node_values",
    "write_solution",
    "write_text",
    "configure_logging",
]
