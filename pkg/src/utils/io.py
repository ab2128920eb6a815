"""Text and CSV dumps of grid functions"""

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from ..exceptions import UsageError

PathLike = Union[str, Path]


def write_text(path: PathLike, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def write_node_values(path: PathLike, values: np.ndarray) -> None:
    """Grid function (or residual vector) as node_id,value rows"""
    lines = ["node_id,value"]
    lines.extend(f"{node},{value:.17g}" for node, value in enumerate(values))
    write_text(path, "\n".join(lines) + "\n")


def read_node_values(path: PathLike) -> np.ndarray:
    """
    Read a node_id,value file covering ids 0..n-1 exactly once each.

    Raises:
        UsageError: on missing, duplicated or malformed rows
    """
    path = Path(path)
    if not path.exists():
        raise UsageError(f"data file not found: {path}")
    entries = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"node_id", "value"} <= set(reader.fieldnames):
            raise UsageError(f"{path}: expected columns node_id,value")
        for line, row in enumerate(reader, start=2):
            try:
                node = int(row["node_id"])
                value = float(row["value"])
            except (TypeError, ValueError) as e:
                raise UsageError(f"{path}:{line}: {e}") from e
            if node in entries:
                raise UsageError(f"{path}:{line}: duplicate node {node}")
            entries[node] = value
    if sorted(entries) != list(range(len(entries))):
        raise UsageError(f"{path}: node ids must cover 0..{len(entries) - 1}")
    return np.array([entries[k] for k in range(len(entries))])


def write_solution(path: PathLike, coords: np.ndarray, values: np.ndarray) -> None:
    """x,y,value rows in node order (interior nodes first, then boundary)"""
    lines = ["x,y,value"]
    lines.extend(f"{x:.17g},{y:.17g},{v:.17g}" for (x, y), v in zip(coords, values))
    write_text(path, "\n".join(lines) + "\n")


def write_csv(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def format_csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()
