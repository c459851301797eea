import numpy as np
import pytest

from axbkit.grids import HalfLineFunction, LogGrid, SpectralGrid
from axbkit.halfline import xp_norm
from axbkit.moduli import halfline_space
from axbkit.spectral import build_matrix_laplacian


@pytest.fixture(scope="session")
def grid():
    return LogGrid(-12.0, 6.0, 512)


@pytest.fixture(scope="session")
def sgrid():
    return SpectralGrid(12.0, 400)


@pytest.fixture(scope="session")
def op(grid):
    return build_matrix_laplacian(grid)


@pytest.fixture(scope="session")
def space(grid):
    return halfline_space(grid)


def normalized(grid, values):
    f = HalfLineFunction(grid, values)
    return f * (1.0 / xp_norm(f))


@pytest.fixture(scope="session")
def f_xexp(grid):
    return HalfLineFunction(grid, grid.x * np.exp(-grid.x))


@pytest.fixture(scope="session")
def f_lg(grid):
    return normalized(grid, np.exp(-((grid.u + 3.0) ** 2) / 2.0))


@pytest.fixture(scope="session")
def f_lg_wide(grid):
    return normalized(grid, np.exp(-((grid.u + 6.0) ** 2) / 8.0))
