"""Asymptotic decay reports and L2-membership for rational functions.

A rational function f = N/D with deg D - deg N = k satisfies
|f| <= K*(1+r)^(-k) in every direction once D's leading form is strictly
positive on the unit circle; the report records that validity separately
from the exponent, plus whether the rate is attained along generic rays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotHomogeneous, OddDegree
from .polynomials import BivariatePoly, RationalFn
from .positivity import (
    PositivityCertificate,
    global_positivity,
    leading_form_positive,
)


@dataclass(frozen=True)
class DecayReport:
    exponent: int
    bound_valid: bool
    exact_on_generic_ray: bool

    def to_obj(self) -> dict:
        return {
            "exponent": self.exponent,
            "bound_valid": self.bound_valid,
            "exact_on_generic_ray": self.exact_on_generic_ray,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "DecayReport":
        return cls(obj["exponent"], obj["bound_valid"], obj["exact_on_generic_ray"])


def decay_exponent(
    f: RationalFn, known_common_factor: Optional[BivariatePoly] = None
) -> DecayReport:
    """Report deg(den) - deg(num) and the validity of the uniform bound.

    `known_common_factor` removes a factor known by construction to divide
    both parts exactly, so representation padding cannot skew the degrees.
    A zero numerator decays faster than any rate; deg(den) is reported
    with the generic-ray flag off.
    """
    if known_common_factor is not None:
        f = f.cancel_factor(known_common_factor)
    den_degree = int(f.den.degree)
    if f.num.is_zero:
        exponent = den_degree
        exact = False
    else:
        exponent = den_degree - int(f.num.degree)
        exact = True
    try:
        bound = leading_form_positive(f.den.leading_form())
    except OddDegree:
        bound = None
    valid = bound is not None
    return DecayReport(exponent=exponent, bound_valid=valid, exact_on_generic_ray=exact)


def l2_membership(psi: RationalFn, max_depth: Optional[int] = None) -> bool:
    """True iff psi is certifiably square-summable over the plane.

    Requires a positivity certificate for the denominator (no real poles)
    and a valid decay bound with exponent >= 2, which makes the radial
    comparison integral of |psi|^2 converge. Inconclusive positivity
    propagates as an exception rather than guessing.
    """
    outcome = global_positivity(psi.den, max_depth=max_depth)
    if not isinstance(outcome, PositivityCertificate):
        return False
    report = decay_exponent(psi)
    return report.bound_valid and report.exponent >= 2
