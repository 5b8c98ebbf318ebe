"""Exploration drivers: minimal positive constants, random sweeps over
harmonic seed pairs, and full verification of the built-in examples.

A sweep measures how fast the constructed potentials and kernel functions
decay as the seed degree grows; it only ever records what was certified,
it never extrapolates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .construct import (
    DoubleMoutardResult,
    SeedPair,
    calibrate_against,
    double_transform,
    proportional,
    transform_family,
)
from .decay import DecayReport, decay_exponent, l2_membership
from .errors import (
    Inconclusive,
    MoutardKitError,
    NonPositiveLeadingForm,
    VerificationFailed,
)
from .gallery import BuiltinExample, get_example
from .harmonic import conjugate, random_combo
from .polynomials import BivariatePoly, RationalFn
from .positivity import (
    PositivityCertificate,
    PositivityOutcome,
    global_positivity,
    leading_dominance,
)
from .serialization import fraction_to_obj, obj_to_fraction, obj_to_poly, poly_to_obj

DOUBLING_CAP = Fraction(2) ** 64
REFINE_FLOOR = Fraction(1, 64)


def min_positive_constant(
    f: BivariatePoly, max_depth: Optional[int] = None
) -> Fraction:
    """A certified constant C with F + C globally positive, within a factor
    of two of the least value this bisection can certify.

    Brackets from [0, 1] by doubling until certification succeeds (cap
    2^64), then bisects; probes that come back Inconclusive count as
    not certifiable at the configured depth.
    """
    if f.degree <= 0:
        raise ValueError("needs a nonconstant polynomial")
    leading_dominance(f)  # raises NonPositiveLeadingForm when no C can work

    def certifies(c: Fraction) -> bool:
        try:
            outcome = global_positivity(f + BivariatePoly.constant(c), max_depth)
        except Inconclusive:
            return False
        return isinstance(outcome, PositivityCertificate)

    lo = Fraction(0)
    hi = Fraction(1)
    while not certifies(hi):
        lo = hi
        hi = hi * 2
        if hi > DOUBLING_CAP:
            raise Inconclusive(
                max_depth, f"no certifiable constant up to {DOUBLING_CAP}"
            )
    while (lo == 0 and hi > REFINE_FLOOR) or (lo > 0 and hi > 2 * lo):
        mid = (lo + hi) / 2
        if certifies(mid):
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class SearchRecord:
    """One certified (or failed) trial of the construction pipeline."""

    trial: int
    seeds_obj: dict
    constant: Fraction
    u_decay: int
    psi_decay: int
    positivity: str  # certified | refuted | inconclusive
    w_degree: int
    valid: bool
    error: str = ""

    def to_obj(self) -> dict:
        return {
            "trial": self.trial,
            "seeds": self.seeds_obj,
            "C": fraction_to_obj(self.constant),
            "u_decay": self.u_decay,
            "psi_decay": self.psi_decay,
            "positivity": self.positivity,
            "W_degree": self.w_degree,
            "valid": self.valid,
            "error": self.error,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "SearchRecord":
        return cls(
            trial=obj["trial"],
            seeds_obj=obj["seeds"],
            constant=obj_to_fraction(obj["C"]),
            u_decay=obj["u_decay"],
            psi_decay=obj["psi_decay"],
            positivity=obj["positivity"],
            w_degree=obj["W_degree"],
            valid=obj["valid"],
            error=obj["error"],
        )


def _seeds_obj(seeds: SeedPair) -> dict:
    return {
        "omega1": poly_to_obj(seeds.omega1),
        "omega2": poly_to_obj(seeds.omega2),
    }


def orient_for_positivity(seeds: SeedPair) -> Tuple[SeedPair, BivariatePoly]:
    """Order the seed pair so the quadrature's leading form can be positive.

    Swapping the seeds flips the sign of the closed 1-form, hence of F;
    exactly one orientation can have a positive-definite leading form.
    Raises NonPositiveLeadingForm when neither does (mixed-degree pairs).
    """
    family = transform_family(seeds)
    try:
        leading_dominance(family.antiderivative)
        return seeds, family.antiderivative
    except NonPositiveLeadingForm:
        swapped = seeds.swapped()
        family = transform_family(swapped)
        leading_dominance(family.antiderivative)
        return swapped, family.antiderivative


def _record_failure(
    trial: int, seeds: SeedPair, error: MoutardKitError
) -> SearchRecord:
    return SearchRecord(
        trial=trial,
        seeds_obj=_seeds_obj(seeds),
        constant=Fraction(0),
        u_decay=-1,
        psi_decay=-1,
        positivity="inconclusive",
        w_degree=-1,
        valid=False,
        error=type(error).__name__,
    )


def _draw_pair(rng: random.Random, degree: int, coefficient_bound: int) -> SeedPair:
    """A random seed pair of exact top degree, alternating two families.

    Conjugate-pair trials take omega2 = Im(f) + t*omega1 for the same
    holomorphic f realizing omega1 = Re(f); those are the pairs whose
    quadrature collapses to C + |f|^2/2 and reaches the top decay rate.
    Independent-pair trials probe the generic behaviour for contrast.
    """

    def draw_exact_degree():
        while True:
            combo = random_combo(degree, 0, coefficient_bound, rng=rng)
            if combo.realized.degree == degree:
                return combo

    base = draw_exact_degree()
    omega1 = base.realized
    if rng.randint(0, 1):
        mix = Fraction(rng.randint(-2, 2))
        omega2 = conjugate(base).realized + omega1.scale(mix)
        if not proportional(omega1, omega2):
            return SeedPair.harmonic(omega1, omega2)
    omega2 = draw_exact_degree().realized
    while proportional(omega1, omega2):
        omega2 = draw_exact_degree().realized
    return SeedPair.harmonic(omega1, omega2)


def run_trial(
    trial: int,
    seeds: SeedPair,
    max_depth: Optional[int] = None,
) -> SearchRecord:
    """Orient, pick C by bisection, transform, and analyze one seed pair."""
    try:
        oriented, f = orient_for_positivity(seeds)
        constant = min_positive_constant(f, max_depth)
    except (NonPositiveLeadingForm, Inconclusive) as exc:
        return _record_failure(trial, seeds, exc)
    result = double_transform(oriented, constant)
    u_report = decay_exponent(result.u)
    psi_reports = [decay_exponent(result.psi1), decay_exponent(result.psi2)]
    valid = u_report.bound_valid and all(r.bound_valid for r in psi_reports)
    return SearchRecord(
        trial=trial,
        seeds_obj=_seeds_obj(oriented),
        constant=constant,
        u_decay=u_report.exponent,
        psi_decay=min(r.exponent for r in psi_reports),
        positivity="certified",
        w_degree=int(result.w_poly.degree),
        valid=valid,
    )


def sweep(
    degree: int,
    rng_seed: int,
    trials: int,
    max_depth: Optional[int] = None,
    coefficient_bound: int = 5,
) -> List[SearchRecord]:
    """Random seed-pair trials at a fixed degree, deterministically seeded.

    Individual failures are recorded, never raised. Records are sorted by
    (u_decay descending, W_degree ascending, trial).
    """
    if degree < 2:
        raise ValueError("sweep needs degree >= 2")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(rng_seed)
    records = []
    for trial in range(trials):
        seeds = _draw_pair(rng, degree, coefficient_bound)
        records.append(run_trial(trial, seeds, max_depth))
    records.sort(key=lambda r: (-r.u_decay, r.w_degree, r.trial))
    return records


@dataclass(frozen=True)
class ExampleReport:
    """Everything the pipeline produced while verifying a built-in example."""

    record: SearchRecord
    result: DoubleMoutardResult
    certificate: PositivityCertificate
    u_report: DecayReport
    psi1_report: DecayReport
    psi2_report: DecayReport
    l2_psi1: bool
    l2_psi2: bool


def _check(condition: bool, invariant: str) -> None:
    if not condition:
        raise VerificationFailed(f"failed invariant: {invariant}")


def _proportional_rf(a: RationalFn, b: RationalFn) -> bool:
    return proportional(a.num * b.den, b.num * a.den)


def verify_example_full(ident: int, max_depth: Optional[int] = None) -> ExampleReport:
    """Run the whole pipeline on a built-in example and assert its claims."""
    example = get_example(ident)
    oriented, f = orient_for_positivity(example.seeds)
    if example.reference is not None:
        lam, c_total = calibrate_against(f, example.reference.w_poly)
        constant = c_total / lam
    else:
        constant = min_positive_constant(f, max_depth)
    result = double_transform(oriented, constant)

    if example.reference is not None:
        ref = example.reference
        _check(result.u.equals(ref.u), "u matches the reference closed form")
        pairings = [
            _proportional_rf(result.psi1, ref.psi1) and _proportional_rf(result.psi2, ref.psi2),
            _proportional_rf(result.psi1, ref.psi2) and _proportional_rf(result.psi2, ref.psi1),
        ]
        _check(any(pairings), "kernel functions proportional to the reference pair")

    outcome = global_positivity(result.w_poly, max_depth)
    _check(
        isinstance(outcome, PositivityCertificate),
        "global positivity certificate for W",
    )
    u_report = decay_exponent(result.u)
    psi1_report = decay_exponent(result.psi1)
    psi2_report = decay_exponent(result.psi2)
    _check(
        u_report.bound_valid and u_report.exponent == example.expected_u_decay,
        f"u decays at rate {example.expected_u_decay}",
    )
    for name, report in (("psi1", psi1_report), ("psi2", psi2_report)):
        _check(
            report.bound_valid and report.exponent == example.expected_psi_decay,
            f"{name} decays at rate {example.expected_psi_decay}",
        )
    l2_1 = l2_membership(result.psi1, max_depth)
    l2_2 = l2_membership(result.psi2, max_depth)
    _check(l2_1 and l2_2, "kernel functions are square-summable")

    record = SearchRecord(
        trial=ident,
        seeds_obj=_seeds_obj(oriented),
        constant=result.constant,
        u_decay=u_report.exponent,
        psi_decay=min(psi1_report.exponent, psi2_report.exponent),
        positivity="certified",
        w_degree=int(result.w_poly.degree),
        valid=True,
    )
    return ExampleReport(
        record=record,
        result=result,
        certificate=outcome,
        u_report=u_report,
        psi1_report=psi1_report,
        psi2_report=psi2_report,
        l2_psi1=l2_1,
        l2_psi2=l2_2,
    )


def verify_example(ident: int, max_depth: Optional[int] = None) -> SearchRecord:
    return verify_example_full(ident, max_depth).record
