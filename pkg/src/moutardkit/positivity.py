"""Exact global-positivity certification for bivariate polynomials.

Everything here is decided with rational arithmetic: the leading form is
bounded on the unit circle through Sturm sequences, the leading term's
dominance radius comes from a coefficient-sum tail bound, and the inside
of the disk is covered by branch-and-bound with centered-form interval
bounds. `Inconclusive` is an explicit outcome, never treated as positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import Inconclusive, NonPositiveLeadingForm, NotHomogeneous, OddDegree
from .polynomials import BivariatePoly
from .sturm import count_real_roots
from .univariate import Poly1D

DEFAULT_MAX_DEPTH = 40

Box = Tuple[Fraction, Fraction, Fraction, Fraction]  # (x_lo, x_hi, y_lo, y_hi)


@dataclass(frozen=True)
class CertifiedCell:
    box: Box
    lower_bound: Fraction


@dataclass(frozen=True)
class PositivityCertificate:
    """Machine-checkable evidence that a polynomial is positive on the plane."""

    leading_form_min_bound: Fraction
    cutoff_radius: Fraction
    cells: Tuple[CertifiedCell, ...]
    max_depth_used: int

    def to_obj(self) -> dict:
        from .serialization import fraction_to_obj

        return {
            "leading_form_min_bound": fraction_to_obj(self.leading_form_min_bound),
            "cutoff_radius": fraction_to_obj(self.cutoff_radius),
            "cells": [
                {
                    "box": [fraction_to_obj(v) for v in cell.box],
                    "lower_bound": fraction_to_obj(cell.lower_bound),
                }
                for cell in self.cells
            ],
            "max_depth_used": self.max_depth_used,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "PositivityCertificate":
        from .serialization import obj_to_fraction

        return cls(
            leading_form_min_bound=obj_to_fraction(obj["leading_form_min_bound"]),
            cutoff_radius=obj_to_fraction(obj["cutoff_radius"]),
            cells=tuple(
                CertifiedCell(
                    tuple(obj_to_fraction(v) for v in cell["box"]),
                    obj_to_fraction(cell["lower_bound"]),
                )
                for cell in obj["cells"]
            ),
            max_depth_used=obj["max_depth_used"],
        )


@dataclass(frozen=True)
class PositivityRefutation:
    """An exact rational point where the polynomial is <= 0."""

    point: Tuple[Fraction, Fraction]
    value: Fraction

    def to_obj(self) -> dict:
        from .serialization import fraction_to_obj

        return {
            "point": [fraction_to_obj(self.point[0]), fraction_to_obj(self.point[1])],
            "value": fraction_to_obj(self.value),
        }


PositivityOutcome = Union[PositivityCertificate, PositivityRefutation]


def _circle_section(p: BivariatePoly) -> Poly1D:
    """q(t) = p(1, t); on the homogeneous form this captures x != 0 directions."""
    terms: dict[int, Fraction] = {}
    for (_, j), c in p.items():
        terms[j] = terms.get(j, Fraction(0)) + c
    return Poly1D(terms)


def leading_form_positive(p: BivariatePoly) -> Optional[Fraction]:
    """An exact positive lower bound of a homogeneous form on the unit circle.

    Returns None when the form attains a value <= 0 there. The test uses
    the section q(t) = p(1, t): positivity on the circle is equivalent to
    p(0,1) > 0 plus q root-free and positive. The bound c is certified by
    showing q - c*(1+t^2)^(d/2) is root-free, halving c until that holds.
    """
    if p.is_zero:
        raise NotHomogeneous("zero polynomial has no circle bound")
    if not p.is_homogeneous():
        raise NotHomogeneous("leading_form_positive needs a homogeneous form")
    d = int(p.degree)
    if d % 2:
        raise OddDegree("odd-degree forms change sign on the circle")
    if d == 0:
        c = p.coefficient(0, 0)
        return c if c > 0 else None
    a0 = p.coefficient(0, d)  # value at (0, +-1)
    if a0 <= 0:
        return None
    q = _circle_section(p)
    if q.evaluate(0) <= 0 or count_real_roots(q) > 0:
        return None
    s = Poly1D({0: 1, 2: 1})
    power = Poly1D.constant(1)
    for _ in range(d // 2):
        power = power * s
    c = min(a0, q.evaluate(0))
    while True:
        g = q - power.scale(c)
        if g.is_zero:
            # p is exactly c*(x^2+y^2)^(d/2); c is the exact minimum
            return c
        if a0 >= c and g.evaluate(0) > 0 and count_real_roots(g) == 0:
            return c
        c = c / 2


def leading_dominance(p: BivariatePoly) -> Tuple[Fraction, Fraction, int]:
    """(circle bound m of the leading form, |coeff| sum S of the lower part,
    total degree D); then p >= m*r^D - S*r^(D-1) for r >= 1.

    A nonnegative constant term only helps and is left out of S.
    Raises NonPositiveLeadingForm when no such m exists.
    """
    lead = p.leading_form()
    try:
        bound = leading_form_positive(lead)
    except OddDegree as exc:
        raise NonPositiveLeadingForm(str(exc)) from exc
    if bound is None:
        raise NonPositiveLeadingForm("leading form attains <= 0 on the circle")
    rest = p - lead
    lower_sum = Fraction(0)
    for (i, j), c in rest.items():
        if (i, j) == (0, 0) and c > 0:
            continue
        lower_sum += abs(c)
    return bound, lower_sum, int(p.degree)


class _BoxBounder:
    """Centered-form bounds for one polynomial over dyadic boxes.

    The polynomial is cleared to integer coefficients once; for a box with
    dyadic center (P/2^s, Q/2^s) and half-widths (HX/2^s, HY/2^s), the
    Taylor coefficients scaled by 2^(s*(d-i-j)) are integers obtained by
    integer Horner shifts, so both the center value and the lower bound

        center - sum |b_ij| * hx^i * hy^j     over (i, j) != (0, 0)

    come out of pure integer arithmetic (divided by the scale at the end).
    """

    def __init__(self, w: BivariatePoly):
        ints, scale = w._cleared()
        self.scale = scale  # w = scale * integer polynomial
        self.degree = int(w.degree)
        self.nx = max(i for i, _ in ints) + 1
        self.ny = max(j for _, j in ints) + 1
        self.grid = [[0] * self.ny for _ in range(self.nx)]
        for (i, j), c in ints.items():
            self.grid[i][j] = c

    @staticmethod
    def _dyadic(value: Fraction) -> Tuple[int, int]:
        num, den = value.numerator, value.denominator
        exp = den.bit_length() - 1
        if 1 << exp != den:
            raise ValueError(f"box coordinate {value} is not dyadic")
        return num, exp

    def bounds(self, box: Box) -> Tuple[Fraction, Fraction]:
        """(exact center value, exact lower bound) of the polynomial on box."""
        x_lo, x_hi, y_lo, y_hi = box
        cx, cy = (x_lo + x_hi) / 2, (y_lo + y_hi) / 2
        hx, hy = (x_hi - x_lo) / 2, (y_hi - y_lo) / 2
        s = 0
        for v in (cx, cy, hx, hy):
            s = max(s, self._dyadic(v)[1])
        px, qy = int(cx * (1 << s)), int(cy * (1 << s))
        hx_i, hy_i = int(hx * (1 << s)), int(hy * (1 << s))
        nx, ny, d = self.nx, self.ny, self.degree
        # pre-scale entry (i, j) by 2^(s*(d-i-j)) so integer shifts by (px, qy)
        # land on the scaled Taylor coefficients; cells beyond the total
        # degree are structurally zero
        grid = [
            [
                self.grid[i][j] << (s * (d - i - j)) if i + j <= d else 0
                for j in range(ny)
            ]
            for i in range(nx)
        ]
        if px:
            for k in range(nx - 1):
                for i in range(nx - 2, k - 1, -1):
                    row, nxt = grid[i], grid[i + 1]
                    for j in range(ny):
                        row[j] += px * nxt[j]
        if qy:
            for k in range(ny - 1):
                for j in range(ny - 2, k - 1, -1):
                    for i in range(nx):
                        grid[i][j] += qy * grid[i][j + 1]
        center = grid[0][0]
        spread = 0
        hx_pow = [1]
        for _ in range(nx - 1):
            hx_pow.append(hx_pow[-1] * hx_i)
        hy_pow = [1]
        for _ in range(ny - 1):
            hy_pow.append(hy_pow[-1] * hy_i)
        for i in range(nx):
            row = grid[i]
            for j in range(ny):
                if i == 0 and j == 0:
                    continue
                b = row[j]
                if b:
                    spread += abs(b) * hx_pow[i] * hy_pow[j]
        denom = Fraction(1, 1 << (s * d)) * self.scale
        return center * denom, (center - spread) * denom


def resolve_max_depth(max_depth: Optional[int] = None) -> int:
    if max_depth is not None:
        return max_depth
    return DEFAULT_MAX_DEPTH


def global_positivity(
    w: BivariatePoly, max_depth: Optional[int] = None
) -> PositivityOutcome:
    """Certify w > 0 on the whole plane, or produce a refuting point.

    The leading form handles everything outside the cutoff radius; the
    square [-R, R]^2 is covered by bisection with exact centered-form
    bounds. Cells are returned in canonical order so the certificate is
    independent of the processing schedule.
    """
    if w.is_zero:
        return PositivityRefutation((Fraction(0), Fraction(0)), Fraction(0))
    depth_limit = resolve_max_depth(max_depth)
    if w.degree == 0:
        c = w.coefficient(0, 0)
        if c <= 0:
            return PositivityRefutation((Fraction(0), Fraction(0)), c)
        return PositivityCertificate(c, Fraction(0), (), 0)
    bound, lower_sum, _ = leading_dominance(w)
    radius = Fraction(math.ceil(max(Fraction(1), lower_sum / bound))) + 1
    root_box: Box = (-radius, radius, -radius, radius)
    bounder = _BoxBounder(w)
    cells: list[CertifiedCell] = []
    max_depth_used = 0
    stack: list[Tuple[Box, int]] = [(root_box, 0)]
    while stack:
        box, depth = stack.pop()
        max_depth_used = max(max_depth_used, depth)
        x_lo, x_hi, y_lo, y_hi = box
        cx = (x_lo + x_hi) / 2
        cy = (y_lo + y_hi) / 2
        value, lower = bounder.bounds(box)
        if value <= 0:
            return PositivityRefutation((cx, cy), value)
        if lower > 0:
            cells.append(CertifiedCell(box, lower))
            continue
        if depth >= depth_limit:
            raise Inconclusive(depth_limit)
        if x_hi - x_lo >= y_hi - y_lo:
            left: Box = (x_lo, cx, y_lo, y_hi)
            right: Box = (cx, x_hi, y_lo, y_hi)
        else:
            left = (x_lo, x_hi, y_lo, cy)
            right = (x_lo, x_hi, cy, y_hi)
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))
    cells.sort(key=lambda cell: cell.box)
    return PositivityCertificate(bound, radius, tuple(cells), max_depth_used)
