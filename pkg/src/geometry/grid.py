"""Interior lattice plus over-resolved boundary nodes for the square (-L, L)^2"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
import structlog

from ..models.domain import DomainSpec, NodeKind
from .directions import DirectionSet, build_directions

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class NodeStencil:
    """Neighbours and distances of one interior node, one entry per direction"""
    node: int
    plus: np.ndarray
    minus: np.ndarray
    r_plus: np.ndarray
    r_minus: np.ndarray


@dataclass(frozen=True)
class Grid:
    """
    Node table and wide stencils.

    Interior ids come first: node (i, j), 1 <= i, j <= N, has id
    (j - 1) * N + (i - 1). Boundary ids follow, ordered by their exact
    lattice-unit coordinates.
    """
    spec: DomainSpec
    directions: DirectionSet
    coords: np.ndarray
    n_interior: int
    plus: np.ndarray
    minus: np.ndarray
    r_plus: np.ndarray
    r_minus: np.ndarray

    @property
    def h(self) -> float:
        return self.spec.h

    @property
    def n_nodes(self) -> int:
        return self.coords.shape[0]

    @property
    def n_boundary(self) -> int:
        return self.n_nodes - self.n_interior

    @property
    def interior_ids(self) -> np.ndarray:
        return np.arange(self.n_interior)

    @property
    def boundary_ids(self) -> np.ndarray:
        return np.arange(self.n_interior, self.n_nodes)

    @property
    def interior_coords(self) -> np.ndarray:
        return self.coords[: self.n_interior]

    @property
    def boundary_coords(self) -> np.ndarray:
        return self.coords[self.n_interior:]

    def node_id(self, i: int, j: int) -> int:
        """Id of lattice node (i, j), 1-based"""
        N = self.spec.N
        if not (1 <= i <= N and 1 <= j <= N):
            raise IndexError(f"lattice index ({i}, {j}) outside 1..{N}")
        return (j - 1) * N + (i - 1)

    def lattice_index(self, node: int) -> Tuple[int, int]:
        if not self.is_interior(node):
            raise IndexError(f"node {node} is not interior")
        N = self.spec.N
        return node % N + 1, node // N + 1

    def is_interior(self, node: int) -> bool:
        return 0 <= node < self.n_interior

    def kind(self, node: int) -> NodeKind:
        if self.is_interior(node):
            return NodeKind.INTERIOR
        if self.n_interior <= node < self.n_nodes:
            return NodeKind.BOUNDARY
        raise IndexError(f"node {node} out of range")

    def stencil(self, node: int) -> NodeStencil:
        if not self.is_interior(node):
            raise IndexError(f"node {node} has no stencil (not interior)")
        return NodeStencil(
            node=node,
            plus=self.plus[node],
            minus=self.minus[node],
            r_plus=self.r_plus[node],
            r_minus=self.r_minus[node],
        )

    def dump(self) -> str:
        """Node table: node_id, kind, x, y with 17 significant digits"""
        lines = ["node_id,kind,x,y"]
        for node, (x, y) in enumerate(self.coords):
            kind = "interior" if node < self.n_interior else "boundary"
            lines.append(f"{node},{kind},{x:.17g},{y:.17g}")
        return "\n".join(lines) + "\n"


def _axis_exit(P: np.ndarray, step: int, N: int) -> Tuple[np.ndarray, np.ndarray]:
    """Ray parameter num/den at which P + t*step reaches 0 or N+1"""
    if step > 0:
        return N + 1 - P, np.full_like(P, step)
    if step < 0:
        return P.copy(), np.full_like(P, -step)
    # parallel to these walls: represent t = +inf as 1/0
    return np.ones_like(P), np.zeros_like(P)


def _exit_parameter(
    I: np.ndarray, J: np.ndarray, A: int, B: int, N: int
) -> Tuple[np.ndarray, np.ndarray]:
    tx_num, tx_den = _axis_exit(I, A, N)
    ty_num, ty_den = _axis_exit(J, B, N)
    use_x = tx_num * ty_den <= ty_num * tx_den
    return np.where(use_x, tx_num, ty_num), np.where(use_x, tx_den, ty_den)


def _reduce(num: np.ndarray, den: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    g = np.gcd(num, den)
    return num // g, den // g


def build_grid(spec: DomainSpec) -> Grid:
    """
    Build interior lattice, supplemental boundary nodes and every stencil.

    Each interior node x and direction +-e_j gets the lattice neighbour
    x +- h e_j when it lies in the open square, otherwise the point where the
    ray from x leaves the square. Ray exits are computed in exact rational
    lattice units, so coinciding boundary points merge exactly.
    """
    N, L, h = spec.N, spec.L, spec.h
    directions = build_directions(spec.w)
    n_dirs = len(directions)
    n_interior = N * N

    idx = np.arange(1, N + 1, dtype=np.int64)
    I = np.tile(idx, N)
    J = np.repeat(idx, N)

    plus = np.full((n_interior, n_dirs), -1, dtype=np.int64)
    minus = np.full((n_interior, n_dirs), -1, dtype=np.int64)
    r_plus = np.zeros((n_interior, n_dirs))
    r_minus = np.zeros((n_interior, n_dirs))

    pending: List[Tuple[np.ndarray, np.ndarray, int, np.ndarray]] = []
    keys: List[np.ndarray] = []
    lengths = directions.lengths

    for sign, nbr, radius in ((1, plus, r_plus), (-1, minus, r_minus)):
        for d, (a, b) in enumerate(directions.offsets):
            A, B = sign * int(a), sign * int(b)
            TI, TJ = I + A, J + B
            inside = (TI >= 1) & (TI <= N) & (TJ >= 1) & (TJ <= N)
            nbr[inside, d] = (TJ[inside] - 1) * N + (TI[inside] - 1)
            radius[inside, d] = h * lengths[d]

            rows = np.flatnonzero(~inside)
            if rows.size == 0:
                continue
            num, den = _exit_parameter(I[rows], J[rows], A, B, N)
            xn, xd = _reduce(I[rows] * den + num * A, den)
            yn, yd = _reduce(J[rows] * den + num * B, den)
            radius[rows, d] = (num / den) * h * lengths[d]
            keys.append(np.column_stack([xn, xd, yn, yd]))
            pending.append((nbr, rows, d, np.arange(rows.size)))

    if keys:
        all_keys = np.concatenate(keys)
        unique_keys, inverse = np.unique(all_keys, axis=0, return_inverse=True)
        inverse = np.asarray(inverse).reshape(-1)
    else:
        unique_keys = np.zeros((0, 4), dtype=np.int64)
        inverse = np.zeros(0, dtype=np.int64)

    offset = 0
    for nbr, rows, d, local in pending:
        nbr[rows, d] = n_interior + inverse[offset + local]
        offset += rows.size

    coords = np.empty((n_interior + unique_keys.shape[0], 2))
    coords[:n_interior, 0] = -L + I * h
    coords[:n_interior, 1] = -L + J * h
    for axis, (num_col, den_col) in enumerate(((0, 1), (2, 3))):
        num = unique_keys[:, num_col]
        den = unique_keys[:, den_col]
        value = -L + (num / np.maximum(den, 1)) * h
        value = np.where(num == 0, -L, value)
        value = np.where(num == (N + 1) * den, L, value)
        coords[n_interior:, axis] = value

    assert (plus >= 0).all() and (minus >= 0).all(), "incomplete stencil"
    assert (r_plus > 0).all() and (r_minus > 0).all(), "degenerate stencil arm"

    logger.debug(
        "grid_built", N=N, h=h, w=spec.w, interior=n_interior, boundary=unique_keys.shape[0]
    )
    return Grid(
        spec=spec,
        directions=directions,
        coords=coords,
        n_interior=n_interior,
        plus=plus,
        minus=minus,
        r_plus=r_plus,
        r_minus=r_minus,
    )
