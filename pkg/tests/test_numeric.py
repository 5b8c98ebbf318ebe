"""Floating-point oracles: finite differences and the L2 estimate."""

import math
from fractions import Fraction

import pytest

from moutardkit.errors import PoleTooClose
from moutardkit.gallery import get_example
from moutardkit.numeric import numeric_l2_norm, numeric_residual, uniform_grid
from moutardkit.polynomials import BivariatePoly, RationalFn

X, Y = BivariatePoly.variables()
ONE = BivariatePoly.constant(1)
REF = get_example(1).reference


def test_uniform_grid():
    grid = uniform_grid(-5, 5, -5, 5, 21)
    assert len(grid) == 441
    assert grid[0] == (-5, -5)
    assert grid[-1] == (5, 5)
    assert (Fraction(0), Fraction(0)) in grid
    with pytest.raises(ValueError):
        uniform_grid(0, 1, 0, 1, 1)


def test_stencil_exact_on_harmonic_quadratic():
    grid = uniform_grid(-3, 3, -3, 3, 7)
    res = numeric_residual(
        RationalFn.zero(), RationalFn.from_poly(X * X - Y * Y), grid, Fraction(1, 10)
    )
    assert res == 0.0


def test_reference_pair_residual_small_and_second_order():
    grid = uniform_grid(-5, 5, -5, 5, 21)
    h = Fraction(1, 100)
    for psi in (REF.psi1, REF.psi2):
        res_h = numeric_residual(REF.u, psi, grid, h)
        res_half = numeric_residual(REF.u, psi, grid, h / 2)
        assert res_h < 1e-3
        assert 3.5 < res_h / res_half < 4.5


def test_pole_on_grid_detected():
    grid = [(Fraction(0), Fraction(0))]
    with pytest.raises(PoleTooClose):
        numeric_residual(RationalFn.zero(), RationalFn(ONE, X), grid, Fraction(1, 10))


def test_pole_straddled_detected():
    # stencil around x = h/2 crosses the pole of 1/x without touching it
    grid = [(Fraction(1, 200), Fraction(0))]
    with pytest.raises(PoleTooClose):
        numeric_residual(RationalFn.zero(), RationalFn(ONE, X), grid, Fraction(1, 100))


class TestL2Norm:
    def test_radial_closed_form(self):
        # integral of (1+r^2)^-2 over the plane is pi
        psi = RationalFn(ONE, ONE + X * X + Y * Y)
        result = numeric_l2_norm(psi, 20)
        assert abs(result.estimate - math.pi) / math.pi < 0.01
        assert result.tail_bound < 0.05
        assert result.radius == 20.0

    def test_tail_shrinks_with_radius(self):
        psi = RationalFn(ONE, ONE + X * X + Y * Y)
        near = numeric_l2_norm(psi, 10, radial_cells=64, angular_cells=64)
        far = numeric_l2_norm(psi, 40, radial_cells=64, angular_cells=64)
        assert far.tail_bound < near.tail_bound

    def test_reference_kernel_function_finite(self):
        result = numeric_l2_norm(REF.psi1, 12, radial_cells=96, angular_cells=96)
        assert 0 < result.estimate < 1
        assert result.tail_bound < 1

    def test_slow_decay_rejected(self):
        with pytest.raises(ValueError):
            numeric_l2_norm(RationalFn(X, ONE + X * X + Y * Y), 10)

    def test_pole_rejected(self):
        with pytest.raises(PoleTooClose):
            numeric_l2_norm(RationalFn(ONE, X * X + Y * Y), 10)
