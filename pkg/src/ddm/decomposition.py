"""Block partition of the interior lattice with overlap layers"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np
import structlog

from ..exceptions import EmptySubdomainError
from ..models.domain import DecompositionSpec, DomainSpec

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Subdomain:
    """Extended block G_i: inclusive lattice ranges and its interior node ids"""
    index: int
    x_range: Tuple[int, int]
    y_range: Tuple[int, int]
    nodes: np.ndarray
    mask: np.ndarray

    def __contains__(self, node: int) -> bool:
        return 0 <= node < self.mask.size and bool(self.mask[node])

    def __len__(self) -> int:
        return self.nodes.size


@dataclass(frozen=True)
class MergeWeights:
    """lambda_i(x), shape (N_d, n_interior); columns sum to one"""
    values: np.ndarray

    def __getitem__(self, i: int) -> np.ndarray:
        return self.values[i]


@dataclass(frozen=True)
class Decomposition:
    spec: DecompositionSpec
    layers: Tuple[int, int]
    subdomains: List[Subdomain]
    weights: MergeWeights

    def __len__(self) -> int:
        return len(self.subdomains)

    def __iter__(self) -> Iterator[Subdomain]:
        return iter(self.subdomains)

    def __getitem__(self, i: int) -> Subdomain:
        return self.subdomains[i]


def _extended_blocks(N: int, splits: int, layers: int) -> List[Tuple[int, int]]:
    parts = np.array_split(np.arange(1, N + 1), splits)
    if any(part.size == 0 for part in parts):
        raise EmptySubdomainError(f"cannot split {N} lattice lines into {splits} blocks")
    blocks = []
    for k, part in enumerate(parts):
        lo, hi = int(part[0]), int(part[-1])
        if k > 0:
            lo = max(1, lo - layers)
        if k < splits - 1:
            hi = min(N, hi + layers)
        blocks.append((lo, hi))
    return blocks


def decompose(spec: DomainSpec, dspec: DecompositionSpec) -> Decomposition:
    """
    Split 1..N into m (x) and n (y) near-equal contiguous blocks and extend
    every block by the overlap layers on each side facing another block.

    Subdomain index is bx + m * by. Merge weights are one over the number of
    subdomains covering a node.

    Raises:
        EmptySubdomainError: if m or n exceeds N
    """
    N = spec.N
    delta_x, delta_y = dspec.layers(N)
    if (dspec.m > 1 and delta_x == 0) or (dspec.n > 1 and delta_y == 0):
        logger.warning(
            "zero_overlap",
            m=dspec.m,
            n=dspec.n,
            detail="non-overlapping blocks cover the grid but may not converge",
        )

    x_blocks = _extended_blocks(N, dspec.m, delta_x)
    y_blocks = _extended_blocks(N, dspec.n, delta_y)

    ids = np.arange(N * N)
    I = ids % N + 1
    J = ids // N + 1

    subdomains = []
    for by, (ylo, yhi) in enumerate(y_blocks):
        for bx, (xlo, xhi) in enumerate(x_blocks):
            mask = (I >= xlo) & (I <= xhi) & (J >= ylo) & (J <= yhi)
            subdomains.append(
                Subdomain(
                    index=bx + dspec.m * by,
                    x_range=(xlo, xhi),
                    y_range=(ylo, yhi),
                    nodes=np.flatnonzero(mask),
                    mask=mask,
                )
            )

    masks = np.array([s.mask for s in subdomains], dtype=float)
    coverage = masks.sum(axis=0)
    assert np.all(coverage >= 1), "decomposition does not cover the lattice"
    return Decomposition(
        spec=dspec,
        layers=(delta_x, delta_y),
        subdomains=subdomains,
        weights=MergeWeights(values=masks / coverage),
    )
