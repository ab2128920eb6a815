"""Solver report models"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class NewtonReport(BaseModel):
    """Outcome of a single damped Newton solve"""
    iterations: int = 0
    final_residual: float = 0.0
    residual_history: List[float] = Field(default_factory=list)
    converged: bool = False
    krylov_iterations: int = 0
    line_search_fallbacks: int = 0

    @model_validator(mode="after")
    def _check_history(self) -> "NewtonReport":
        if len(self.residual_history) != self.iterations + 1:
            raise ValueError(
                f"residual history has {len(self.residual_history)} entries "
                f"for {self.iterations} iterations"
            )
        return self


CSV_COLUMNS = [
    "problem",
    "L",
    "h",
    "N",
    "w",
    "m",
    "n",
    "p_x",
    "p_y",
    "outer_iterations",
    "converged",
    "total_newton_iterations",
    "total_krylov_iterations",
    "l2_error",
    "max_error",
    "wall_seconds",
]


def _format(value) -> str:
    if value is None:
        return "nan"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


class SolveReport(BaseModel):
    """
    Summary of one solve, as written by the harness.

    Serialises to a flat key=value record and to a CSV row whose columns are
    fixed by CSV_COLUMNS.
    """
    problem: str
    L: float
    h: float
    N: int
    w: int
    m: int = 1
    n: int = 1
    p_x: float = 0.0
    p_y: float = 0.0
    outer_iterations: int = 0
    converged: bool = False
    total_newton_iterations: int = 0
    total_krylov_iterations: int = 0
    l2_error: Optional[float] = None
    max_error: Optional[float] = None
    wall_seconds: float = 0.0
    residual_history: List[float] = Field(default_factory=list)
    coarse_fallback: bool = False
    message: Optional[str] = None

    def as_row(self) -> Dict[str, str]:
        data = self.model_dump()
        return {column: _format(data[column]) for column in CSV_COLUMNS}

    def to_csv_row(self) -> List[str]:
        row = self.as_row()
        return [row[column] for column in CSV_COLUMNS]

    def to_record(self) -> str:
        """Flat key=value text, one pair per line"""
        lines = [f"{key}={value}" for key, value in self.as_row().items()]
        lines.append(f"coarse_fallback={_format(self.coarse_fallback)}")
        lines.append(
            "residual_history=" + ",".join(f"{r:.17g}" for r in self.residual_history)
        )
        if self.message:
            lines.append(f"message={self.message}")
        return "\n".join(lines) + "\n"
