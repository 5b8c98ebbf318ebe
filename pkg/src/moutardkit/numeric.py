"""Floating-point oracles: finite-difference residuals and L2 estimates.

These are the only two places the package touches floating point. The
finite-difference stencil itself is evaluated in exact rational
arithmetic (so the reported residual is pure truncation error, decreasing
at O(h^2) wherever the symbolic residual vanishes); only the final
magnitudes are floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .decay import decay_exponent
from .errors import Inconclusive, PoleTooClose
from .polynomials import BivariatePoly, RationalFn, RationalLike, as_fraction
from .positivity import PositivityCertificate, global_positivity, leading_dominance

Point = Tuple[Fraction, Fraction]


def uniform_grid(
    x_lo: RationalLike,
    x_hi: RationalLike,
    y_lo: RationalLike,
    y_hi: RationalLike,
    points_per_side: int,
) -> List[Point]:
    """Uniform rational lattice, points_per_side^2 points, corners included."""
    if points_per_side < 2:
        raise ValueError("need at least 2 points per side")
    ax, bx = as_fraction(x_lo), as_fraction(x_hi)
    ay, by = as_fraction(y_lo), as_fraction(y_hi)
    n = points_per_side - 1
    return [
        (ax + (bx - ax) * i / n, ay + (by - ay) * j / n)
        for i in range(points_per_side)
        for j in range(points_per_side)
    ]


def _stencil(point: Point, h: Fraction) -> Tuple[Point, ...]:
    x0, y0 = point
    return (
        (x0, y0),
        (x0 + h, y0),
        (x0 - h, y0),
        (x0, y0 + h),
        (x0, y0 - h),
    )


def numeric_residual(
    u: RationalFn,
    psi: RationalFn,
    grid: Sequence[Point],
    h: RationalLike,
) -> float:
    """max over the grid of |-Lap_h(psi) + u*psi| with the 5-point stencil.

    Raises PoleTooClose when a stencil point hits a denominator zero or a
    denominator changes sign across the stencil (a zero inside it).
    """
    step = as_fraction(h)
    if step <= 0:
        raise ValueError("step h must be positive")
    worst = Fraction(0)
    for point in grid:
        pts = _stencil(point, step)
        den_signs = {den: [] for den in ("u", "psi")}
        for px, py in pts:
            for name, fn in (("u", u), ("psi", psi)):
                value = fn.den.evaluate(px, py)
                if value == 0:
                    raise PoleTooClose(f"{name} denominator vanishes at ({px}, {py})")
                den_signs[name].append(value > 0)
        for name, signs in den_signs.items():
            if len(set(signs)) > 1:
                raise PoleTooClose(f"{name} denominator changes sign inside a stencil")
        center, east, west, north, south = (psi.evaluate(px, py) for px, py in pts)
        lap_h = (east + west + north + south - 4 * center) / (step * step)
        residual = abs(-lap_h + u.evaluate(*point) * center)
        if residual > worst:
            worst = residual
    return float(worst)


@dataclass(frozen=True)
class L2Estimate:
    """Midpoint-rule disk integral of |psi|^2 plus an analytic tail bound."""

    estimate: float
    tail_bound: float
    radius: float

    def to_obj(self) -> dict:
        return {
            "estimate": self.estimate,
            "tail_bound": self.tail_bound,
            "radius": self.radius,
        }


def _float_terms(p: BivariatePoly) -> List[Tuple[int, int, float]]:
    return [(i, j, float(c)) for (i, j), c in p.items()]


def numeric_l2_norm(
    psi: RationalFn,
    outer_radius: RationalLike,
    radial_cells: int = 256,
    angular_cells: int = 256,
    max_depth: Optional[int] = None,
) -> L2Estimate:
    """Estimate the squared L2 norm of psi over the plane.

    The disk of the working radius is integrated by the polar midpoint
    rule; outside it, |psi| <= K r^(-k) from the decay analysis gives the
    tail bound 2*pi*K^2*R^(2-2k)/(2k-2). The working radius is the larger
    of `outer_radius` and the radius where the denominator's leading form
    dominates, so the tail constant is actually valid.
    """
    outcome = global_positivity(psi.den, max_depth=max_depth)
    if not isinstance(outcome, PositivityCertificate):
        raise PoleTooClose(
            f"denominator is not positive (counterexample at {outcome.point})"
        )
    report = decay_exponent(psi)
    k = report.exponent
    if not report.bound_valid or k < 2:
        raise ValueError("tail bound needs a valid decay exponent >= 2")
    m, lower_sum, den_degree = leading_dominance(psi.den)
    dominance_radius = max(Fraction(1), 2 * lower_sum / m)
    radius = max(as_fraction(outer_radius), dominance_radius)
    tail_constant = 2 * psi.num.coefficient_abs_sum() / m  # |psi| <= K r^-k, r >= radius
    tail = (
        2 * math.pi * float(tail_constant) ** 2 * float(radius) ** (2 - 2 * k) / (2 * k - 2)
    )

    num_terms = _float_terms(psi.num)
    den_terms = _float_terms(psi.den)
    r_max = float(radius)
    dr = r_max / radial_cells
    dtheta = 2 * math.pi / angular_cells
    total = 0.0
    for ir in range(radial_cells):
        r = (ir + 0.5) * dr
        for it in range(angular_cells):
            theta = (it + 0.5) * dtheta
            px, py = r * math.cos(theta), r * math.sin(theta)
            num = 0.0
            for i, j, c in num_terms:
                num += c * px**i * py**j
            den = 0.0
            for i, j, c in den_terms:
                den += c * px**i * py**j
            value = num / den
            total += value * value * r
    return L2Estimate(estimate=total * dr * dtheta, tail_bound=tail, radius=r_max)
