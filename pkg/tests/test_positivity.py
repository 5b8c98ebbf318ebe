"""Exact positivity certification: circle bounds, certificates, refutations."""

import random
from fractions import Fraction

import pytest

from moutardkit.errors import Inconclusive, NonPositiveLeadingForm, NotHomogeneous, OddDegree
from moutardkit.gallery import get_example
from moutardkit.polynomials import BivariatePoly
from moutardkit.positivity import (
    PositivityCertificate,
    PositivityRefutation,
    global_positivity,
    leading_dominance,
    leading_form_positive,
)

X, Y = BivariatePoly.variables()
R2 = X * X + Y * Y
W_REF = get_example(1).reference.w_poly


class TestLeadingFormPositive:
    def test_radial_quartic_block(self):
        assert leading_form_positive((R2 * R2).scale(17)) == 17

    def test_radial_quadratic(self):
        assert leading_form_positive(R2) == 1

    def test_sign_change_fails(self):
        assert leading_form_positive(X * X - Y * Y) is None

    def test_semidefinite_fails(self):
        assert leading_form_positive(X * X * Y * Y) is None

    def test_negative_definite_fails(self):
        assert leading_form_positive(-R2) is None

    def test_positive_but_not_radial(self):
        # 2x^4 + x^2 y^2 + y^4 is positive definite
        p = BivariatePoly({(4, 0): 2, (2, 2): 1, (0, 4): 1})
        bound = leading_form_positive(p)
        assert bound is not None and bound > 0
        # bound must actually hold at sampled circle directions
        for t in (0, 1, -1, Fraction(1, 3), Fraction(-7, 2)):
            value = p.evaluate(1, t)
            norm = (1 + t * t) ** 2
            assert value >= bound * norm

    def test_not_homogeneous(self):
        with pytest.raises(NotHomogeneous):
            leading_form_positive(X + BivariatePoly.constant(1))

    def test_odd_degree(self):
        with pytest.raises(OddDegree):
            leading_form_positive(X * R2)

    def test_constant_form(self):
        assert leading_form_positive(BivariatePoly.constant(5)) == 5
        assert leading_form_positive(BivariatePoly.constant(-5)) is None


class TestLeadingDominance:
    def test_dominance_inequality_holds_at_sample_points(self):
        # W >= m*r^d - S*r^(d-1) for r >= 1; r^(d-1) is irrational at
        # rational points for even d, so check the squared consequence:
        # if W - m*r^d < 0 then (W - m*r^d)^2 <= S^2 * (r^2)^(d-1).
        m, s, d = leading_dominance(W_REF)
        assert d == 4
        rng = random.Random(7)
        for _ in range(60):
            px = Fraction(rng.randint(-900, 900), rng.randint(1, 30))
            py = Fraction(rng.randint(-900, 900), rng.randint(1, 30))
            r2 = px * px + py * py
            if r2 < 1:
                continue
            deficit = W_REF.evaluate(px, py) - m * r2 ** (d // 2)
            if deficit < 0:
                assert deficit * deficit <= s * s * r2 ** (d - 1)

    def test_indefinite_leading_form_raises(self):
        with pytest.raises(NonPositiveLeadingForm):
            leading_dominance(X * X - Y * Y + BivariatePoly.constant(50))


class TestGlobalPositivity:
    def test_reference_w_certified(self):
        outcome = global_positivity(W_REF)
        assert isinstance(outcome, PositivityCertificate)
        assert outcome.leading_form_min_bound == 17
        assert outcome.max_depth_used <= 40
        assert all(cell.lower_bound > 0 for cell in outcome.cells)

    def test_cells_tile_the_square(self):
        cert = global_positivity(W_REF)
        side = 2 * cert.cutoff_radius
        area = sum(
            (cell.box[1] - cell.box[0]) * (cell.box[3] - cell.box[2])
            for cell in cert.cells
        )
        assert area == side * side

    def test_cell_bounds_sound(self):
        cert = global_positivity(W_REF)
        rng = random.Random(99)
        for cell in cert.cells:
            x_lo, x_hi, y_lo, y_hi = cell.box
            for _ in range(3):
                px = x_lo + (x_hi - x_lo) * Fraction(rng.randint(0, 64), 64)
                py = y_lo + (y_hi - y_lo) * Fraction(rng.randint(0, 64), 64)
                assert W_REF.evaluate(px, py) >= cell.lower_bound

    def test_touching_zero_refuted(self):
        outcome = global_positivity(R2)
        assert isinstance(outcome, PositivityRefutation)
        assert outcome.point == (0, 0)
        assert outcome.value == 0

    def test_below_minimum_refuted(self):
        # the reference W has global minimum exactly 160
        outcome = global_positivity(W_REF - BivariatePoly.constant(161))
        assert isinstance(outcome, PositivityRefutation)
        assert outcome.value <= 0
        assert W_REF.evaluate(*outcome.point) - 161 == outcome.value

    def test_just_above_minimum_certified(self):
        outcome = global_positivity(W_REF - BivariatePoly.constant(159))
        assert isinstance(outcome, PositivityCertificate)

    def test_indefinite_leading_form(self):
        with pytest.raises(NonPositiveLeadingForm):
            global_positivity(X * X - Y * Y + BivariatePoly.constant(50))

    def test_depth_limit_is_explicit(self):
        with pytest.raises(Inconclusive):
            global_positivity(W_REF, max_depth=0)

    def test_deterministic(self):
        a = global_positivity(W_REF)
        b = global_positivity(W_REF)
        assert a == b

    def test_positive_constant(self):
        outcome = global_positivity(BivariatePoly.constant(3))
        assert isinstance(outcome, PositivityCertificate)
        outcome = global_positivity(BivariatePoly.constant(-3))
        assert isinstance(outcome, PositivityRefutation)

    def test_certificate_roundtrip(self):
        cert = global_positivity(W_REF)
        assert PositivityCertificate.from_obj(cert.to_obj()) == cert
