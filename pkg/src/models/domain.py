"""Domain and decomposition models"""

import math
from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exceptions import UsageError


class ProblemId(str, Enum):
    """Built-in benchmark problems and sampled custom data"""
    EX1 = "ex1"
    EX2 = "ex2"
    CUSTOM = "custom"


class NodeKind(str, Enum):
    """Kind of a grid node"""
    INTERIOR = "interior"
    BOUNDARY = "boundary"


def stencil_width(L: float, N: int) -> int:
    """
    Smallest integer w with w**3 * h >= 1, i.e. w = ceil(h ** (-1/3)).

    The floating-point cube root is only a starting guess; the result is
    corrected with the exact test w**3 * 2L >= N + 1.
    """
    h = 2.0 * L / (N + 1)
    w = max(1, math.ceil(h ** (-1.0 / 3.0)))
    while w > 1 and (w - 1) ** 3 * 2.0 * L >= N + 1:
        w -= 1
    while w ** 3 * 2.0 * L < N + 1:
        w += 1
    return w


class DomainSpec(BaseModel):
    """
    The square (-L, L)^2 discretised by an N x N interior lattice.

    Spacing h = 2L/(N+1) keeps one spacing between the outermost lattice
    nodes and each wall.
    """
    model_config = ConfigDict(frozen=True)

    L: float = Field(..., gt=0, description="Half-width of the square")
    N: int = Field(..., ge=1, description="Interior nodes per axis")

    @classmethod
    def from_spacing(cls, L: float, h: float) -> "DomainSpec":
        """
        Build the spec whose spacing is closest to h.

        Raises:
            UsageError: if h is not positive or leaves no interior node
        """
        if h <= 0:
            raise UsageError(f"grid spacing must be positive, got {h}")
        N = int(round(2.0 * L / h)) - 1
        if N < 1:
            raise UsageError(f"spacing h={h} leaves no interior node in (-{L}, {L})^2")
        return cls(L=L, N=N)

    @property
    def h(self) -> float:
        return 2.0 * self.L / (self.N + 1)

    @property
    def w(self) -> int:
        return stencil_width(self.L, self.N)

    @model_validator(mode="after")
    def _check_width(self) -> "DomainSpec":
        w = self.w
        if not (w >= 1 and w ** 3 * 2.0 * self.L >= self.N + 1):
            raise ValueError(f"inconsistent stencil width {w} for h={self.h}")
        return self

    def coarsened(self, factor: int = 4) -> "DomainSpec":
        """Spec on the same square with spacing close to factor * h"""
        return DomainSpec(L=self.L, N=max(1, (self.N + 1) // factor - 1))


def _layer_count(fraction: float, N: int, splits: int) -> int:
    if fraction <= 0:
        return 0
    return max(1, int(math.floor(fraction * N / splits + 0.5)))


class DecompositionSpec(BaseModel):
    """
    Block decomposition of the interior lattice.

    m splits the x-axis and n splits the y-axis, so N_d = m * n. Overlaps are
    fractions of the block length; a block is extended by the matching number
    of node layers on every side that faces another block.
    """
    model_config = ConfigDict(frozen=True)

    m: int = Field(1, ge=1, description="Splits along x")
    n: int = Field(1, ge=1, description="Splits along y")
    overlap_x: float = Field(0.2, ge=0.0, le=1.0)
    overlap_y: float = Field(0.2, ge=0.0, le=1.0)

    @classmethod
    def uniform(cls, m: int, n: int, overlap: float) -> "DecompositionSpec":
        return cls(m=m, n=n, overlap_x=overlap, overlap_y=overlap)

    @property
    def count(self) -> int:
        return self.m * self.n

    def layers(self, N: int) -> Tuple[int, int]:
        """Overlap layer counts (delta_x, delta_y) for an N x N lattice"""
        return _layer_count(self.overlap_x, N, self.m), _layer_count(self.overlap_y, N, self.n)
