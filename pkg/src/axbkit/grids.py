"""Discretization grids and the sampled-function containers.

The half-line carries the measure ``dx/x``, which becomes the uniform
measure ``du`` under ``u = ln x``.  All half-line data lives on a uniform
grid in ``u``; quadrature is trapezoidal in ``u``.  Values outside the
window are treated as zero, and the boundary-mass diagnostic
:func:`axbkit.halfline.window_loss` quantifies what that truncation costs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

__all__ = ["LogGrid", "SpectralGrid", "HalfLineFunction", "trapezoid_weights"]


def trapezoid_weights(n: int, step: float) -> np.ndarray:
    w = np.full(n, step)
    w[0] *= 0.5
    w[-1] *= 0.5
    return w


@dataclass(frozen=True)
class LogGrid:
    """Uniform grid in ``u = ln x`` covering ``[u_min, u_max]`` with n nodes."""

    u_min: float = -12.0
    u_max: float = 6.0
    n: int = 512

    def __post_init__(self):
        if not self.u_min < self.u_max:
            raise ValueError("u_min must be < u_max")
        if self.n < 16:
            raise ValueError("need at least 16 nodes")

    @property
    def h(self) -> float:
        return (self.u_max - self.u_min) / (self.n - 1)

    @cached_property
    def u(self) -> np.ndarray:
        nodes = np.linspace(self.u_min, self.u_max, self.n)
        nodes.flags.writeable = False
        return nodes

    @cached_property
    def x(self) -> np.ndarray:
        nodes = np.exp(self.u)
        nodes.flags.writeable = False
        return nodes

    @cached_property
    def weights(self) -> np.ndarray:
        """Trapezoid weights for integrals in the u variable (measure dx/x)."""
        w = trapezoid_weights(self.n, self.h)
        w.flags.writeable = False
        return w

    def key(self) -> tuple:
        return (self.u_min, self.u_max, self.n)


@dataclass(frozen=True)
class SpectralGrid:
    """Uniform grid of the spectral parameter ``tau`` on ``[0, tau_max]``.

    The Laplacian corresponds to ``lambda = tau**2``, so ``tau`` carries
    the scale of the square root of the operator.
    """

    tau_max: float = 12.0
    m: int = 400

    def __post_init__(self):
        if not self.tau_max > 0:
            raise ValueError("tau_max must be positive")
        if self.m < 32:
            raise ValueError("need at least 32 spectral nodes")

    @property
    def step(self) -> float:
        return self.tau_max / (self.m - 1)

    @cached_property
    def tau(self) -> np.ndarray:
        nodes = np.linspace(0.0, self.tau_max, self.m)
        nodes.flags.writeable = False
        return nodes

    @cached_property
    def weights(self) -> np.ndarray:
        w = trapezoid_weights(self.m, self.step)
        w.flags.writeable = False
        return w

    def key(self) -> tuple:
        return (self.tau_max, self.m)


@dataclass(frozen=True)
class HalfLineFunction:
    """Complex samples of a function on the half-line over a :class:`LogGrid`."""

    grid: LogGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (self.grid.n,):
            raise ValueError(
                f"values shape {vals.shape} does not match grid size {self.grid.n}"
            )
        if not np.all(np.isfinite(vals)):
            raise ValueError("values must be finite")
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def with_values(self, values: np.ndarray) -> "HalfLineFunction":
        return HalfLineFunction(self.grid, values)

    def __add__(self, other: "HalfLineFunction") -> "HalfLineFunction":
        self._check_same_grid(other)
        return HalfLineFunction(self.grid, self.values + other.values)

    def __sub__(self, other: "HalfLineFunction") -> "HalfLineFunction":
        self._check_same_grid(other)
        return HalfLineFunction(self.grid, self.values - other.values)

    def __mul__(self, scalar) -> "HalfLineFunction":
        return HalfLineFunction(self.grid, self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "HalfLineFunction":
        return HalfLineFunction(self.grid, -self.values)

    def _check_same_grid(self, other: "HalfLineFunction"):
        if self.grid != other.grid:
            raise ValueError("functions live on different grids")
