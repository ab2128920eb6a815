"""Grid and wide-stencil construction"""

from .directions import DirectionSet, build_directions
from .grid import Grid, build_grid

__all__ = [
    "DirectionSet",
    "build_directions",
    "Grid",
    "build_grid",
]
