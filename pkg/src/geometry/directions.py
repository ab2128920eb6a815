"""Angular discretisation of the half circle by grid-aligned directions"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DirectionSet:
    """
    The 2w stencil directions for width w.

    offsets[j] is the integer lattice vector e_j, angles[j] its polar angle
    in [0, pi) and gaps[j] = angles[j+1] - angles[j], with the last gap
    wrapping around through pi.
    """
    width: int
    offsets: np.ndarray
    angles: np.ndarray
    gaps: np.ndarray

    def __len__(self) -> int:
        return len(self.angles)

    @property
    def unit_vectors(self) -> np.ndarray:
        return np.column_stack([np.cos(self.angles), np.sin(self.angles)])

    @property
    def lengths(self) -> np.ndarray:
        """Euclidean length of each integer offset"""
        return np.hypot(self.offsets[:, 0], self.offsets[:, 1])


def build_directions(w: int) -> DirectionSet:
    """
    Build e_j = (w - j, w - |w - j|) for j = 0, ..., 2w - 1.

    Args:
        w: Stencil width (>= 1)

    Returns:
        Directions sorted by angle, starting at angle 0
    """
    if w < 1:
        raise ValueError(f"stencil width must be >= 1, got {w}")
    j = np.arange(2 * w)
    offsets = np.column_stack([w - j, w - np.abs(w - j)]).astype(np.int64)
    angles = np.arctan2(offsets[:, 1], offsets[:, 0]).astype(float)
    gaps = np.empty_like(angles)
    gaps[:-1] = np.diff(angles)
    gaps[-1] = angles[0] + np.pi - angles[-1]
    return DirectionSet(width=w, offsets=offsets, angles=angles, gaps=gaps)
