"""One-dimensional reduction: Darboux transformations of -d^2/dx^2 + (u + k^2).

With a seed f solving the shifted equation, the transformed potential is
u - 2 (log f)'' and solutions map through g -> g' - (f'/f) g. Iterating
from u = 0 with the polynomial seeds x, x^2, ... produces the classical
chain of singular rational potentials n(n+1)/x^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from .errors import SeedNotInKernel, ZeroSeed
from .polynomials import RationalLike, as_fraction
from .univariate import Poly1D, RationalFn1D


def log_second_derivative(p: Poly1D) -> RationalFn1D:
    """(log p)'' = (p''*p - p'^2) / p^2, exactly."""
    d1 = p.derivative()
    return RationalFn1D(p.derivative().derivative() * p - d1 * d1, p * p)


def rf_log_second_derivative(f: RationalFn1D) -> RationalFn1D:
    return log_second_derivative(f.num) - log_second_derivative(f.den)


def cancel_x_power(f: RationalFn1D) -> RationalFn1D:
    """Strip the largest power of x dividing both numerator and denominator."""
    if f.num.is_zero:
        return RationalFn1D(Poly1D.zero(), Poly1D.constant(1))
    shift = min(
        min(i for i, _ in f.num.items()),
        min(i for i, _ in f.den.items()),
    )
    if shift == 0:
        return f
    return RationalFn1D(
        Poly1D({i - shift: c for i, c in f.num.items()}),
        Poly1D({i - shift: c for i, c in f.den.items()}),
    )


@dataclass(frozen=True)
class DarbouxStep:
    """A potential u, a seed f of (-d^2/dx^2 + u + k^2) f = 0, and the shift k."""

    u: RationalFn1D
    f: RationalFn1D
    k: Fraction = field(default_factory=lambda: Fraction(0))

    def __post_init__(self):
        if self.f.num.is_zero:
            raise ZeroSeed("seed function is zero")
        shifted_u = self.u + RationalFn1D.from_poly(Poly1D.constant(self.k * self.k))
        if not self.f.second_derivative().equals(shifted_u * self.f):
            raise SeedNotInKernel("(-d^2/dx^2 + u + k^2) f != 0")


def darboux_step(step: DarbouxStep) -> RationalFn1D:
    """Transformed potential u - 2*(log f)''."""
    return step.u - rf_log_second_derivative(step.f).scale(2)


def transform_solution(step: DarbouxStep, g: RationalFn1D) -> RationalFn1D:
    """Solution map g -> g' - (f'/f) g into the transformed equation."""
    f = step.f
    f_log = RationalFn1D(
        f.num.derivative() * f.den - f.num * f.den.derivative(), f.num * f.den
    )
    return g.derivative() - f_log * g


def rational_chain(n: int) -> List[RationalFn1D]:
    """First n potentials of the chain from u = 0 with seeds x, x^2, ...

    Every element is singular at x = 0; the m-th equals m(m+1)/x^2.
    """
    if n < 1:
        raise ValueError("chain length must be >= 1")
    potentials: List[RationalFn1D] = []
    u = RationalFn1D.from_poly(Poly1D.zero())
    for m in range(1, n + 1):
        seed = RationalFn1D.from_poly(Poly1D.monomial(m))
        step = DarbouxStep(u, seed)
        u = cancel_x_power(darboux_step(step))
        potentials.append(u)
    return potentials
