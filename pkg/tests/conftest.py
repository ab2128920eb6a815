"""Shared fixtures"""

import numpy as np
import pytest
import structlog

from src.geometry.grid import build_grid
from src.models.domain import DomainSpec
from src.problems import example1, example2
from src.scheme import MongeAmpereScheme


@pytest.fixture(autouse=True)
def reset_logging():
    """main() binds structlog to the stderr of the calling test"""
    yield
    structlog.reset_defaults()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def tiny_grid():
    """L=0.5, N=3: h=0.25, w=2"""
    return build_grid(DomainSpec(L=0.5, N=3))


@pytest.fixture
def coarse_grid():
    """L=0.5, h=0.1"""
    return build_grid(DomainSpec.from_spacing(0.5, 0.1))


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def ex2():
    return example2()


@pytest.fixture
def coarse_scheme(coarse_grid):
    return MongeAmpereScheme(coarse_grid)
