"""Decay exponents and L2-membership."""

from fractions import Fraction

import pytest

from moutardkit.decay import DecayReport, decay_exponent, l2_membership
from moutardkit.gallery import get_example
from moutardkit.polynomials import BivariatePoly, RationalFn

X, Y = BivariatePoly.variables()
ONE = BivariatePoly.constant(1)
REF = get_example(1).reference


class TestDecayExponent:
    def test_reference_potential(self):
        report = decay_exponent(REF.u)
        assert report == DecayReport(6, True, True)

    def test_reference_kernel_functions(self):
        for psi in (REF.psi1, REF.psi2):
            report = decay_exponent(psi)
            assert report.exponent == 2
            assert report.bound_valid

    def test_scale_invariance(self):
        for lam in (Fraction(3), Fraction(-1, 7)):
            assert decay_exponent(REF.u.scale(lam)) == decay_exponent(REF.u)

    def test_invalid_bound_indefinite_denominator(self):
        f = RationalFn(ONE, X * X - Y * Y + BivariatePoly.constant(3))
        report = decay_exponent(f)
        assert report.exponent == 2
        assert not report.bound_valid

    def test_invalid_bound_odd_denominator(self):
        report = decay_exponent(RationalFn(ONE, X))
        assert report.exponent == 1
        assert not report.bound_valid

    def test_zero_numerator(self):
        report = decay_exponent(RationalFn(BivariatePoly.zero(), ONE + X * X))
        assert report.exponent == 2
        assert not report.exact_on_generic_ray

    def test_known_common_factor(self):
        pad = ONE + X * X
        padded = RationalFn(REF.u.num * pad, REF.u.den * pad)
        assert decay_exponent(padded, known_common_factor=pad) == decay_exponent(REF.u)

    def test_report_roundtrip(self):
        report = decay_exponent(REF.u)
        assert DecayReport.from_obj(report.to_obj()) == report


class TestL2Membership:
    def test_reference_kernel_functions(self):
        assert l2_membership(REF.psi1)
        assert l2_membership(REF.psi2)

    def test_radial_example(self):
        assert l2_membership(RationalFn(ONE, ONE + X * X + Y * Y))

    def test_slow_decay_rejected(self):
        assert not l2_membership(RationalFn(X, ONE + X * X + Y * Y))

    def test_pole_rejected(self):
        assert not l2_membership(RationalFn(ONE, X * X + Y * Y))
