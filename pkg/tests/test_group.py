import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from axbkit.group import (
    GroupElement,
    LieVector,
    bracket,
    exp_map,
    factor,
    haar_weight,
    inverse,
    lie_to_matrix,
    multiply,
    to_matrix,
)

elements = st.builds(
    GroupElement,
    a=st.floats(0.05, 20.0),
    b=st.floats(-20.0, 20.0),
)


def close(g1, g2, tol=1e-12):
    return abs(g1.a - g2.a) <= tol * max(1.0, abs(g2.a)) and \
        abs(g1.b - g2.b) <= tol * max(1.0, abs(g2.b))


def test_multiply_examples():
    assert multiply(GroupElement(2, 3), GroupElement(4, 5)) == GroupElement(8, 13)
    g = GroupElement(1.7, -0.3)
    assert multiply(g, GroupElement(1, 0)) == g
    assert close(multiply(GroupElement(2, 3), GroupElement(0.5, -1.5)), GroupElement(1, 0))


def test_inverse_examples():
    assert inverse(GroupElement(1, 0)) == GroupElement(1, 0)
    assert inverse(GroupElement(2, 3)) == GroupElement(0.5, -1.5)
    assert inverse(GroupElement(4, -8)) == GroupElement(0.25, 2.0)


def test_exp_map_examples():
    assert close(exp_map(LieVector(math.log(2), 0)), GroupElement(2, 0))
    assert exp_map(LieVector(0.0, 5.0)) == GroupElement(1.0, 5.0)
    assert close(exp_map(LieVector(1, 1)), GroupElement(math.e, math.e - 1))


def test_exp_map_near_zero_stable():
    g = exp_map(LieVector(1e-12, 7.0))
    assert abs(g.b - 7.0) < 1e-11


def test_factor_examples():
    assert factor(GroupElement(1, 0)) == (0.0, 0.0)
    t1, t2 = factor(GroupElement(math.e, math.e))
    assert abs(t1 - 1) < 1e-15 and abs(t2 - 1) < 1e-15
    t1, t2 = factor(GroupElement(4, 2))
    assert abs(t1 - math.log(4)) < 1e-15 and abs(t2 - 0.5) < 1e-15


def test_haar_weight():
    assert haar_weight(GroupElement(1, 5.3), "left") == 1.0
    assert haar_weight(GroupElement(2, 0), "left") == 0.25
    assert haar_weight(GroupElement(2, 0), "right") == 0.5
    with pytest.raises(ValueError):
        haar_weight(GroupElement(1, 0), "middle")


def test_positivity_enforced():
    with pytest.raises(ValueError):
        GroupElement(-1.0, 0.0)


@given(elements, elements, elements)
@settings(max_examples=200)
def test_associativity(g1, g2, g3):
    lhs = multiply(multiply(g1, g2), g3)
    rhs = multiply(g1, multiply(g2, g3))
    assert close(lhs, rhs, 1e-12)


@given(elements)
def test_inverse_roundtrip(g):
    assert close(multiply(g, inverse(g)), GroupElement(1, 0), 1e-12)
    assert close(multiply(inverse(g), g), GroupElement(1, 0), 1e-12)


@given(elements)
def test_factor_exp_roundtrip(g):
    t1, t2 = factor(g)
    back = multiply(exp_map(LieVector(t1, 0.0)), exp_map(LieVector(0.0, t2)))
    assert close(back, g, 1e-12)


@given(elements, elements)
@settings(max_examples=100)
def test_matrix_oracle(g1, g2):
    prod = to_matrix(multiply(g1, g2))
    np.testing.assert_allclose(prod, to_matrix(g1) @ to_matrix(g2), rtol=1e-13, atol=1e-13)


def test_lie_bracket_matches_matrix_commutator():
    x1, x2 = LieVector(1, 0), LieVector(0, 1)
    m1, m2 = lie_to_matrix(x1), lie_to_matrix(x2)
    np.testing.assert_array_equal(m1 @ m2 - m2 @ m1, lie_to_matrix(x2))
    v, w = LieVector(0.3, -2.0), LieVector(1.5, 0.7)
    mv, mw = lie_to_matrix(v), lie_to_matrix(w)
    np.testing.assert_allclose(mv @ mw - mw @ mv, lie_to_matrix(bracket(v, w)), atol=1e-15)


def test_exp_map_matches_matrix_exponential():
    from scipy.linalg import expm

    v = LieVector(0.8, -1.3)
    np.testing.assert_allclose(to_matrix(exp_map(v)), expm(lie_to_matrix(v)), rtol=1e-12)
