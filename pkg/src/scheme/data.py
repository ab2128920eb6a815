"""Sampled right-hand side and Dirichlet data"""

from dataclasses import dataclass

import numpy as np
import structlog

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ProblemData:
    """
    f sampled at interior nodes, g sampled at boundary nodes.

    f[k] belongs to interior node k; g[k] belongs to node n_interior + k.
    """
    f: np.ndarray
    g: np.ndarray

    def __post_init__(self):
        if np.any(self.f < 0):
            logger.warning(
                "negative_rhs",
                nodes=int(np.count_nonzero(self.f < 0)),
                minimum=float(self.f.min()),
            )

    @property
    def n_interior(self) -> int:
        return self.f.shape[0]

    def with_boundary(self, u: np.ndarray) -> np.ndarray:
        """Copy of u with boundary entries replaced by g"""
        out = np.array(u, dtype=float, copy=True)
        out[self.n_interior:] = self.g
        return out
