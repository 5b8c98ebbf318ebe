"""Two commuting Moutard transformations with a common target potential.

From a seed pair (omega1, omega2) in the kernel of -Lap + u0 the scheme
produces W = F + C (quadrature of the omega1/omega2 Wronskian form), the
potential u = u0 - 2*Lap(log W), and the explicit kernel elements
psi1 = omega1/W and psi2 = -omega2/W. The second transformation is never
integrated: its result is written down algebraically and then re-verified
symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import NoAffineMatch, ProportionalSeeds, SeedNotInKernel
from .moutard import (
    TransformFamily,
    integrate_closed,
    kernel_residual,
    moutard_potential,
    solution_one_form,
    verify_solution,
)
from .polynomials import BivariatePoly, RationalFn, RationalLike, as_fraction


def proportional(p: BivariatePoly, q: BivariatePoly) -> bool:
    """True iff q is a rational multiple of p (or either is zero)."""
    if p.is_zero or q.is_zero:
        return True
    (e_p, c_p) = next(p.items())
    (e_q, c_q) = next(q.items())
    if e_p != e_q:
        return False
    return q == p.scale(c_q / c_p)


@dataclass(frozen=True)
class SeedPair:
    """Background potential u0 plus two independent kernel elements."""

    u0: RationalFn
    omega1: BivariatePoly
    omega2: BivariatePoly

    def __post_init__(self):
        for name, seed in (("omega1", self.omega1), ("omega2", self.omega2)):
            if seed.is_zero or not kernel_residual(self.u0, seed).is_zero:
                raise SeedNotInKernel(f"(-Lap + u0) {name} != 0")
        if proportional(self.omega1, self.omega2):
            raise ProportionalSeeds("omega1 and omega2 are linearly dependent")

    @classmethod
    def harmonic(
        cls, omega1: BivariatePoly, omega2: BivariatePoly
    ) -> "SeedPair":
        """Seed pair over the free background u0 = 0."""
        return cls(RationalFn.zero(), omega1, omega2)

    def swapped(self) -> "SeedPair":
        """Same pair with the seed roles exchanged (flips the quadrature sign)."""
        return SeedPair(self.u0, self.omega2, self.omega1)


@dataclass(frozen=True)
class DoubleMoutardResult:
    """Output bundle of the double construction."""

    w_poly: BivariatePoly
    constant: Fraction
    u: RationalFn
    psi1: RationalFn
    psi2: RationalFn
    theta1: RationalFn
    theta2: RationalFn


def log_laplacian(g: BivariatePoly) -> RationalFn:
    """Lap(log g) = (g*Lap(g) - g_x^2 - g_y^2) / g^2, exactly."""
    gx, gy = g.diff_x(), g.diff_y()
    return RationalFn(g * g.laplacian() - gx * gx - gy * gy, g * g)


def rf_log_laplacian(g: RationalFn) -> RationalFn:
    """Lap(log(N/D)) expanded as Lap(log N) - Lap(log D)."""
    return log_laplacian(g.num) - log_laplacian(g.den)


def transform_family(seeds: SeedPair) -> TransformFamily:
    """Quadrature step: the family theta1 = (F + C)/omega1."""
    form = solution_one_form(seeds.omega1, seeds.omega2)
    return TransformFamily(seeds.omega1, integrate_closed(form), form)


def potential_from_w(u0: RationalFn, w: BivariatePoly) -> RationalFn:
    """u = u0 - 2*Lap(log W), the common potential of both branches."""
    return u0 - log_laplacian(w).scale(2)


def double_transform(seeds: SeedPair, constant: RationalLike) -> DoubleMoutardResult:
    """Run the whole scheme for a fixed choice of the free constant.

    The closed forms psi1 = omega1/W and psi2 = -omega2/W are written down
    directly and then re-verified against u via verify_solution; a failure
    there means a defect in the pipeline, not in the inputs.
    """
    c = as_fraction(constant)
    family = transform_family(seeds)
    w = family.antiderivative + BivariatePoly.constant(c)
    if w.is_zero:
        raise ProportionalSeeds("quadrature collapsed to a constant")
    u = potential_from_w(seeds.u0, w)
    psi1 = RationalFn(seeds.omega1, w)
    psi2 = RationalFn(-seeds.omega2, w)
    theta1 = RationalFn(w, seeds.omega1)
    theta2 = RationalFn(-w, seeds.omega2)
    for name, psi in (("psi1", psi1), ("psi2", psi2)):
        if not verify_solution(u, psi):
            raise RuntimeError(f"internal error: (-Lap + u) {name} != 0")
    return DoubleMoutardResult(w, c, u, psi1, psi2, theta1, theta2)


def verify_lemma(seeds: SeedPair, constant: RationalLike) -> bool:
    """Check that both transformation branches land on the same potential.

    Branch i applies the Moutard potential map with seed omega_i and then
    again with theta_i, the latter expanded through W: Lap(log theta_i)
    = Lap(log W) - Lap(log omega_i). Returns True iff both branches agree
    with u0 - 2*Lap(log W) and 1/theta1, 1/theta2 both solve L psi = 0.
    """
    c = as_fraction(constant)
    family = transform_family(seeds)
    w = family.antiderivative + BivariatePoly.constant(c)
    u_common = potential_from_w(seeds.u0, w)

    branches = []
    for omega in (seeds.omega1, seeds.omega2):
        u_mid = moutard_potential(seeds.u0, omega)
        theta_log = log_laplacian(w) - log_laplacian(omega)
        u_branch = u_mid - theta_log.scale(2)
        # every term of the unreduced branch carries omega^2 by construction
        u_branch = u_branch.cancel_factor(omega * omega)
        branches.append(u_branch)

    if not (branches[0].equals(branches[1]) and branches[0].equals(u_common)):
        return False
    psi1 = RationalFn(seeds.omega1, w)
    psi2 = RationalFn(-seeds.omega2, w)
    return verify_solution(u_common, psi1) and verify_solution(u_common, psi2)


def calibrate_against(
    f: BivariatePoly, target_w: BivariatePoly
) -> Tuple[Fraction, Fraction]:
    """The unique (lambda, C) with lambda*F + C = target, if it exists.

    Solved coefficient-wise over the nonconstant monomials; raises
    NoAffineMatch when the linear system is inconsistent.
    """
    if f.degree <= 0:
        raise ValueError("calibration needs a nonconstant polynomial")
    lam = None
    for (i, j), coeff in f.items():
        if (i, j) == (0, 0):
            continue
        t = target_w.coefficient(i, j)
        ratio = t / coeff
        if lam is None:
            lam = ratio
        elif lam != ratio:
            raise NoAffineMatch("inconsistent scale across monomials")
    # target monomials missing from F must be absent
    for (i, j), coeff in target_w.items():
        if (i, j) != (0, 0) and f.coefficient(i, j) == 0 and coeff != 0:
            raise NoAffineMatch(f"target has monomial x^{i} y^{j} outside F's support")
    assert lam is not None
    if lam == 0:
        raise NoAffineMatch("target is constant but F is not")
    c = target_w.coefficient(0, 0) - lam * f.coefficient(0, 0)
    return lam, c
