"""Left- and right-regular representations on the half-plane, at desk scale.

The group is identified with the right half-plane ``(x, y), x > 0``; the
left-invariant measure is ``x^{-2} dx dy`` and the right-invariant one is
``x^{-1} dx dy``.  In the log variable ``u = ln x`` these are ``e^{-u} du dy``
and ``du dy``.

Actions:

* left:  ``U^L(a, b) f(x, y) = f(a x, a y + b)``, generators
  ``D1 = x dx + y dy`` and ``D2 = dy``;
* right: ``U^R(a, b) f(x, y) = f(x a, x b + y)``, generators
  ``D1 = x dx`` and ``D2 = x dy``.

Direct expansion gives ``[D1, D2] = -D2`` on the left and
``[D1, D2] = +D2`` on the right; both are computed and reported by the
tests together with the (sign-ambiguous) alternative, and only the
symbolically forced identity is asserted.

Laplacians are assembled as ``D1* D1 + D2* D2`` from the skew-symmetrized
discrete generators, guaranteeing a Hermitian nonnegative matrix; the
expanded second-order forms

``Delta_L = -(1 + y^2) dyy - x^2 dxx - 2 x y dxy - x dx - y dy``
``Delta_R = -x^2 (dxx + dyy) - x dx``

serve only as an interior consistency oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.linalg as sla
from scipy.interpolate import CubicSpline

from .grids import LogGrid, trapezoid_weights
from .group import GroupElement
from .moduli import RepresentationSpace, modulus_mixed
from .smoothing import hardy_steklov_generic
from .spectral import DiscreteOperator, fourier_diff_matrix

__all__ = [
    "HalfPlaneGrid",
    "HalfPlaneFunction",
    "lp_norm_2d",
    "inner_2d",
    "act_2d",
    "generator_2d",
    "halfplane_space",
    "modulus_mixed_2d",
    "build_halfplane_laplacian",
    "expanded_laplacian_apply",
    "sobolev_graph_check",
    "log_gaussian_2d",
]

DENSE_CAP_2D = 4096

_OP_CACHE: dict[tuple, DiscreteOperator] = {}


@dataclass(frozen=True)
class HalfPlaneGrid:
    """Product of a log grid in x and a uniform grid in y."""

    xgrid: LogGrid = LogGrid(-6.0, 4.0, 48)
    y_min: float = -8.0
    y_max: float = 8.0
    n_y: int = 48

    def __post_init__(self):
        if not self.y_min < self.y_max:
            raise ValueError("y_min must be < y_max")
        if self.n_y < 16:
            raise ValueError("need at least 16 nodes in y")

    @property
    def h_y(self) -> float:
        return (self.y_max - self.y_min) / (self.n_y - 1)

    @cached_property
    def y(self) -> np.ndarray:
        nodes = np.linspace(self.y_min, self.y_max, self.n_y)
        nodes.flags.writeable = False
        return nodes

    def measure_weights(self, side: str, rule: str = "trapezoid") -> np.ndarray:
        """Quadrature-times-measure weights, shape (n_x, n_y).

        ``rule='uniform'`` skips the trapezoid endpoint halving; the dense
        operators use it so that constants along an axis stay exactly in
        the kernel of that axis derivative.
        """
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if rule == "trapezoid":
            wu = trapezoid_weights(self.xgrid.n, self.xgrid.h)
            wy = trapezoid_weights(self.n_y, self.h_y)
        elif rule == "uniform":
            wu = np.full(self.xgrid.n, self.xgrid.h)
            wy = np.full(self.n_y, self.h_y)
        else:
            raise ValueError("rule must be 'trapezoid' or 'uniform'")
        density = np.exp(-self.xgrid.u) if side == "left" else np.ones(self.xgrid.n)
        return np.outer(wu * density, wy)

    def key(self) -> tuple:
        return (self.xgrid.key(), self.y_min, self.y_max, self.n_y)


@dataclass(frozen=True)
class HalfPlaneFunction:
    grid: HalfPlaneGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (self.grid.xgrid.n, self.grid.n_y):
            raise ValueError("values shape does not match grid")
        if not np.all(np.isfinite(vals)):
            raise ValueError("values must be finite")
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def with_values(self, values) -> "HalfPlaneFunction":
        return HalfPlaneFunction(self.grid, values)

    def __add__(self, other):
        return self.with_values(self.values + other.values)

    def __sub__(self, other):
        return self.with_values(self.values - other.values)

    def __mul__(self, scalar):
        return self.with_values(self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return self.with_values(-self.values)


def log_gaussian_2d(grid: HalfPlaneGrid, u0: float = -1.0, y0: float = 0.0,
                    su: float = 1.0, sy: float = 1.5) -> HalfPlaneFunction:
    """Separable log-Gaussian-times-Gaussian corpus member, unit left norm."""
    vals = np.outer(
        np.exp(-((grid.xgrid.u - u0) ** 2) / (2 * su ** 2)),
        np.exp(-((grid.y - y0) ** 2) / (2 * sy ** 2)),
    )
    f = HalfPlaneFunction(grid, vals)
    return f * (1.0 / lp_norm_2d(f, 2.0, "left"))


def lp_norm_2d(f: HalfPlaneFunction, p: float, side: str) -> float:
    if p < 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    w = f.grid.measure_weights(side)
    return float(np.sum(w * np.abs(f.values) ** p) ** (1.0 / p))


def inner_2d(f: HalfPlaneFunction, g: HalfPlaneFunction, side: str) -> complex:
    w = f.grid.measure_weights(side)
    return complex(np.sum(w * f.values * np.conj(g.values)))


def _interp_columns(values: np.ndarray, axis_nodes: np.ndarray, targets: np.ndarray,
                    axis: int) -> np.ndarray:
    """Cubic resampling along one axis with zero fill outside the window.

    ``targets`` may be one curve (shared by all slices) or one curve per
    slice along the other axis.
    """
    vals = np.moveaxis(values, axis, 0)  # (n_axis, n_other)
    n_other = vals.shape[1]
    spline = CubicSpline(axis_nodes, vals, axis=0, bc_type="natural")
    out = np.zeros_like(vals)
    if targets.ndim == 1:
        inside = (targets >= axis_nodes[0]) & (targets <= axis_nodes[-1])
        out[inside] = spline(targets[inside])
    else:
        for col in range(n_other):
            t = targets[col]
            inside = (t >= axis_nodes[0]) & (t <= axis_nodes[-1])
            out[inside, col] = spline(t[inside])[:, col]
    return np.moveaxis(out, 0, axis)


def _shift_u(values: np.ndarray, grid: HalfPlaneGrid, t: float) -> np.ndarray:
    """Sample ``f(u + t, y)``: exact roll on grid multiples, cubic otherwise."""
    h = grid.xgrid.h
    steps = t / h
    nearest = round(steps)
    if abs(steps - nearest) < 1e-9:
        m = int(nearest)
        out = np.zeros_like(values)
        n = values.shape[0]
        if m >= 0:
            if m < n:
                out[: n - m] = values[m:]
        else:
            if -m < n:
                out[-m:] = values[: n + m]
        return out
    return _interp_columns(values, grid.xgrid.u, grid.xgrid.u + t, axis=0)


def _map_y(values: np.ndarray, grid: HalfPlaneGrid, scale: float, offset) -> np.ndarray:
    """Sample ``f(x, scale * y + offset)``; offset may vary with the row."""
    y = grid.y
    offset = np.asarray(offset, dtype=float)
    if scale == 1.0 and offset.ndim == 0:
        steps = float(offset) / grid.h_y
        nearest = round(steps)
        if abs(steps - nearest) < 1e-9:
            m = int(nearest)
            out = np.zeros_like(values)
            n = values.shape[1]
            if m >= 0:
                if m < n:
                    out[:, : n - m] = values[:, m:]
            else:
                if -m < n:
                    out[:, -m:] = values[:, : n + m]
            return out
    if offset.ndim == 0:
        targets = scale * y + float(offset)
        return _interp_columns(values, y, targets, axis=1)
    targets = scale * y[None, :] + offset[:, None]
    return _interp_columns(values, y, targets, axis=1)


def act_2d(g: GroupElement, f: HalfPlaneFunction, side: str) -> HalfPlaneFunction:
    """The regular representations; isometries of their weighted norms.

    Grid-compatible parameters (pure y-shift on the left, pure log-x shift
    on the right) are exact permutations with zero fill; anything else is
    cubic interpolation with zero extension.
    """
    if side == "left":
        vals = _shift_u(f.values, f.grid, math.log(g.a))
        vals = _map_y(vals, f.grid, g.a, g.b)
        return f.with_values(vals)
    if side == "right":
        vals = _shift_u(f.values, f.grid, math.log(g.a))
        if g.b != 0.0:
            vals = _map_y(vals, f.grid, 1.0, g.b * f.grid.xgrid.x)
        return f.with_values(vals)
    raise ValueError("side must be 'left' or 'right'")


_FD6_D1 = np.array([-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60])
_FD6_D2 = np.array([1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90])


def _fd_axis(values: np.ndarray, h: float, axis: int, stencil: np.ndarray,
             power: int) -> np.ndarray:
    vals = np.moveaxis(values, axis, 0)
    n = vals.shape[0]
    padded = np.concatenate(
        [np.zeros((3,) + vals.shape[1:], dtype=complex), vals,
         np.zeros((3,) + vals.shape[1:], dtype=complex)], axis=0)
    out = np.zeros_like(vals, dtype=complex)
    for k, c in enumerate(stencil):
        if c != 0.0:
            out += c * padded[k : k + n]
    return np.moveaxis(out / h ** power, 0, axis)


def _du(f: HalfPlaneFunction) -> np.ndarray:
    return _fd_axis(f.values, f.grid.xgrid.h, 0, _FD6_D1, 1)


def _dy(f: HalfPlaneFunction) -> np.ndarray:
    return _fd_axis(f.values, f.grid.h_y, 1, _FD6_D1, 1)


def generator_2d(j: int, f: HalfPlaneFunction, side: str) -> HalfPlaneFunction:
    """Generators of the one-parameter subgroups, 6th-order stencils in (u, y)."""
    if side == "left":
        if j == 1:
            return f.with_values(_du(f) + f.grid.y[None, :] * _dy(f))
        if j == 2:
            return f.with_values(_dy(f))
    elif side == "right":
        if j == 1:
            return f.with_values(_du(f))
        if j == 2:
            return f.with_values(f.grid.xgrid.x[:, None] * _dy(f))
    else:
        raise ValueError("side must be 'left' or 'right'")
    raise ValueError("direction must be 1 or 2")


def halfplane_space(grid: HalfPlaneGrid, side: str, p: float = 2.0) -> RepresentationSpace:
    """Representation interface for one of the regular representations.

    The Hardy-Steklov operator has no closed form here and is evaluated by
    Gauss panels against the explicit box-spline time density.
    """

    def act(j, t, f):
        if side == "left":
            g = GroupElement(math.exp(t), 0.0) if j == 1 else GroupElement(1.0, t)
        else:
            g = GroupElement(math.exp(t), 0.0) if j == 1 else GroupElement(1.0, t)
        return act_2d(g, f, side)

    def t_candidates(j, s, cap):
        # exact steps exist for left y-shifts and for log-x shifts; the
        # remaining directions are interpolated, so their suprema are
        # empirical rather than certified
        if side == "left" and j == 2:
            step = grid.h_y
        elif j == 1:
            step = grid.xgrid.h
        else:
            return s * np.arange(1, cap + 1) / cap
        mmax = int(math.floor(s / step + 1e-9))
        if mmax < 1:
            return np.empty(0)
        count = min(cap, mmax)
        return np.unique(np.round(np.linspace(1, mmax, count)).astype(int)) * step

    return RepresentationSpace(
        name=f"L^{p:g}({side})",
        norm=lambda f: lp_norm_2d(f, p, side),
        act=act,
        gen=lambda j, f: generator_2d(j, f, side),
        t_candidates=t_candidates,
        hardy=lambda r, s, f: hardy_steklov_generic(act, r, s, f),
    )


def modulus_mixed_2d(r: int, s: float, f: HalfPlaneFunction, p: float, side: str) -> float:
    return modulus_mixed(halfplane_space(f.grid, side, p), r, s, f)


def build_halfplane_laplacian(grid: HalfPlaneGrid, side: str) -> DiscreteOperator:
    """Dense eigendecomposition of ``D1* D1 + D2* D2`` on the product grid.

    Generators are carried to flat coordinates (square root of the total
    weight) and antisymmetrized there, so the assembled matrix is exactly
    symmetric positive semidefinite.
    """
    if grid.xgrid.n * grid.n_y > DENSE_CAP_2D:
        raise ValueError(
            f"grid has {grid.xgrid.n * grid.n_y} points, dense eigensolver cap is {DENSE_CAP_2D}"
        )
    key = (side, grid.key())
    if key in _OP_CACHE:
        return _OP_CACHE[key]
    nx, ny = grid.xgrid.n, grid.n_y
    w = grid.measure_weights(side, rule="uniform").reshape(-1)
    sw = np.sqrt(w)
    Du = fourier_diff_matrix(nx, grid.xgrid.h)
    Dy = fourier_diff_matrix(ny, grid.h_y)
    Iu, Iy = np.eye(nx), np.eye(ny)
    if side == "left":
        gen1 = np.kron(Du, Iy) + np.kron(Iu, grid.y[:, None] * Dy)
        gen2 = np.kron(Iu, Dy)
    else:
        gen1 = np.kron(Du, Iy)
        gen2 = np.kron(np.diag(grid.xgrid.x), Dy)
    mats = []
    for gen in (gen1, gen2):
        flat = (sw[:, None] * gen) / sw[None, :]
        mats.append(0.5 * (flat - flat.T))
    A = mats[0].T @ mats[0] + mats[1].T @ mats[1]
    A = 0.5 * (A + A.T)
    lam, V = sla.eigh(A)
    op = DiscreteOperator(
        weights=w,
        eigenvalues=lam,
        eigenvectors=V,
        matrix=None,
        meta={"kind": f"halfplane_{side}", "grid": grid},
    )
    _OP_CACHE[key] = op
    return op


def expanded_laplacian_apply(f: HalfPlaneFunction, side: str) -> HalfPlaneFunction:
    """Stencil application of the expanded second-order forms (interior oracle).

    In the (u, y) variables the left Laplacian reads
    ``-d_uu - 2 y d_uy - y d_y - (1 + y^2) d_yy`` and the right one
    ``-d_uu - x^2 d_yy``.
    """
    g = f.grid
    duu = _fd_axis(f.values, g.xgrid.h, 0, _FD6_D2, 2)
    dyy = _fd_axis(f.values, g.h_y, 1, _FD6_D2, 2)
    if side == "right":
        return f.with_values(-duu - (g.xgrid.x ** 2)[:, None] * dyy)
    du = _fd_axis(f.values, g.xgrid.h, 0, _FD6_D1, 1)
    duy = _fd_axis(du, g.h_y, 1, _FD6_D1, 1)
    dy = _fd_axis(f.values, g.h_y, 1, _FD6_D1, 1)
    y = g.y[None, :]
    return f.with_values(-duu - 2.0 * y * duy - y * dy - (1.0 + y ** 2) * dyy)


def sobolev_graph_check(f: HalfPlaneFunction, m: int, side: str,
                        op: DiscreteOperator | None = None) -> dict:
    """Ratio between the order-m Sobolev norm and the graph norm of ``Delta^{m/2}``."""
    from .moduli import sobolev_space_norm

    if op is None:
        op = build_halfplane_laplacian(f.grid, side)
    space = halfplane_space(f.grid, side, 2.0)
    sob = sobolev_space_norm(space, f, m)
    flat = f.values.reshape(-1)
    lam = np.maximum(op.eigenvalues, 0.0)
    w = op.spectral_weights(flat)
    graph = op.norm(flat) + float(np.sqrt(np.sum(lam ** m * w)))
    return {
        "sobolev_norm": sob,
        "graph_norm": graph,
        "ratio": sob / max(graph, 1e-300),
        "inverse_ratio": graph / max(sob, 1e-300),
    }
