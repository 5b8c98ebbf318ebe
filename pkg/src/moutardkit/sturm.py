"""Sturm chains and exact real-root counting for univariate polynomials."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .polynomials import RationalLike, as_fraction
from .univariate import Poly1D


def sturm_chain(p: Poly1D) -> list[Poly1D]:
    """The Sturm sequence p, p', -rem(...), ... with primitive scaling.

    Each element is scaled by a positive rational to keep integer
    coefficients small; positive scaling never changes sign counts.
    """
    if p.is_zero:
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p.primitive()]
    d = p.derivative()
    if d.is_zero:
        return chain
    chain.append(d.primitive())
    while chain[-1].degree > 0:
        _, rem = chain[-2].divmod(chain[-1])
        if rem.is_zero:
            break
        chain.append((-rem).primitive())
    return chain


def _sign_changes(signs: Iterable[int]) -> int:
    changes = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def variations_at(chain: list[Poly1D], x0: RationalLike) -> int:
    v = as_fraction(x0)
    return _sign_changes(_sign(p.evaluate(v)) for p in chain)


def variations_at_neg_inf(chain: list[Poly1D]) -> int:
    signs = []
    for p in chain:
        lc = p.leading_coefficient()
        deg = 0 if p.is_zero else p.degree
        signs.append(_sign(lc) * (-1 if deg % 2 else 1))
    return _sign_changes(signs)


def variations_at_pos_inf(chain: list[Poly1D]) -> int:
    return _sign_changes(_sign(p.leading_coefficient()) for p in chain)


def count_real_roots(
    p: Poly1D,
    lower: Optional[RationalLike] = None,
    upper: Optional[RationalLike] = None,
) -> int:
    """Number of distinct real roots of p in (lower, upper].

    Unbounded ends count roots on the whole half-line / line. The bounded
    endpoints must not themselves be roots of p.
    """
    if p.is_zero:
        raise ValueError("root counting needs a nonzero polynomial")
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)
    va = variations_at_neg_inf(chain) if lower is None else variations_at(chain, lower)
    vb = variations_at_pos_inf(chain) if upper is None else variations_at(chain, upper)
    return va - vb


def is_positive_everywhere(p: Poly1D) -> bool:
    """True iff p(t) > 0 for every real t."""
    if p.is_zero:
        return False
    if count_real_roots(p) > 0:
        return False
    # no real roots: the sign is constant, probe any point
    return p.evaluate(0) > 0
