"""Exact arithmetic of the affine group of the line.

Elements are pairs ``(a, b)`` with ``a > 0``, composing as
``(a, b)(c, d) = (a*c, a*d + b)``.  The two one-parameter subgroups are
dilations ``(e^t, 0)`` and translations ``(1, t)``; their tangent vectors
span a two-dimensional Lie algebra with bracket ``[X1, X2] = X2``.

Group elements are stored in ``(a, b)`` coordinates.  The 2x2 matrix
realization exists only as a test oracle (see :func:`to_matrix`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "GroupElement",
    "LieVector",
    "IDENTITY",
    "multiply",
    "inverse",
    "exp_map",
    "factor",
    "haar_weight",
    "bracket",
    "to_matrix",
    "lie_to_matrix",
]


@dataclass(frozen=True, slots=True)
class GroupElement:
    """A point ``(a, b)`` of the affine group, ``a > 0``."""

    a: float
    b: float

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"dilation factor must be positive, got a={self.a}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)


@dataclass(frozen=True, slots=True)
class LieVector:
    """Coefficients ``x1*X1 + x2*X2`` in the Lie algebra basis."""

    x1: float
    x2: float


IDENTITY = GroupElement(1.0, 0.0)


def multiply(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """Group law ``(a, b)(c, d) = (a*c, a*d + b)``."""
    return GroupElement(g1.a * g2.a, g1.a * g2.b + g1.b)


def inverse(g: GroupElement) -> GroupElement:
    """Inverse ``(1/a, -b/a)``, so that ``g * inverse(g) = (1, 0)``."""
    return GroupElement(1.0 / g.a, -g.b / g.a)


def exp_map(v: LieVector) -> GroupElement:
    """Exponential coordinates: ``exp(x1*X1 + x2*X2) = (e^x1, x2*(e^x1 - 1)/x1)``.

    The removable singularity at ``x1 = 0`` is handled by the stable form
    ``x2 * expm1(x1) / x1``, which returns the limit value ``(1, x2)``.
    """
    if v.x1 == 0.0:
        return GroupElement(1.0, v.x2)
    return GroupElement(math.exp(v.x1), v.x2 * math.expm1(v.x1) / v.x1)


def factor(g: GroupElement) -> tuple[float, float]:
    """Coordinates ``(t1, t2)`` with ``g = exp(t1*X1) exp(t2*X2)``.

    Explicitly ``t1 = ln(a)`` and ``t2 = b/a``.
    """
    return math.log(g.a), g.b / g.a


def haar_weight(g: GroupElement, side: str = "left") -> float:
    """Density of the Haar measure at ``g`` relative to ``da db``.

    The left-invariant measure is ``a^-2 da db``; the group is not
    unimodular and the right-invariant measure is ``a^-1 da db``.
    """
    if side == "left":
        return g.a ** -2
    if side == "right":
        return g.a ** -1
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def bracket(v: LieVector, w: LieVector) -> LieVector:
    """Lie bracket; with ``[X1, X2] = X2`` it equals ``(0, x1*y2 - x2*y1)``."""
    return LieVector(0.0, v.x1 * w.x2 - v.x2 * w.x1)


def to_matrix(g: GroupElement) -> np.ndarray:
    """Matrix image ``[[a, b], [0, 1]]`` (test oracle only)."""
    return np.array([[g.a, g.b], [0.0, 1.0]])


def lie_to_matrix(v: LieVector) -> np.ndarray:
    """Matrix image ``[[x1, x2], [0, 0]]`` of a Lie algebra element."""
    return np.array([[v.x1, v.x2], [0.0, 0.0]])
