"""Non-uniform composite Simpson weights over the stencil angles"""

from dataclasses import dataclass

import numpy as np

from ..exceptions import NonPositiveWeightError
from ..geometry.directions import DirectionSet


@dataclass(frozen=True)
class QuadratureWeights:
    """Weights mu_j for integrating over theta in [0, pi)"""
    values: np.ndarray

    def __post_init__(self):
        for j, value in enumerate(self.values):
            if not value > 0:
                raise NonPositiveWeightError(j, float(value))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def total(self) -> float:
        return float(self.values.sum())


def quad_weights(directions: DirectionSet) -> QuadratureWeights:
    """
    Composite Simpson weights on the periodic angle set.

    Odd angles are panel midpoints, even angles are shared panel endpoints;
    gap indices wrap modulo 2w.

    Raises:
        NonPositiveWeightError: if the angle set is too non-uniform for
            Simpson positivity
    """
    gaps = directions.gaps
    count = len(gaps)
    if count < 2 or count % 2:
        raise ValueError(f"need an even number (>= 2) of directions, got {count}")

    mu = np.empty(count)
    for j in range(count):
        if j % 2:
            left, right = gaps[j - 1], gaps[j]
            mu[j] = (left + right) ** 3 / (6.0 * left * right)
        else:
            nxt, nxt2 = gaps[j], gaps[(j + 1) % count]
            prev2, prev = gaps[(j - 2) % count], gaps[(j - 1) % count]
            mu[j] = (nxt + nxt2) / 6.0 * (2.0 - nxt2 / nxt) + (prev2 + prev) / 6.0 * (
                2.0 - prev2 / prev
            )
    return QuadratureWeights(values=mu)
