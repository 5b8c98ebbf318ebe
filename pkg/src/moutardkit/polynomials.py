"""Exact arithmetic for bivariate polynomials and rational functions over Q.

Coefficients are `fractions.Fraction` values (arbitrary precision, always
normalized with positive denominator). Polynomials are sparse maps from
exponent pairs ``(i, j)`` (powers of x and y) to nonzero coefficients.
The canonical term order used everywhere (serialization, golden tests,
exact division) is graded lexicographic: ascending total degree, ties
broken by ascending x-exponent.

Rational functions are unreduced quotients; equality is decided by
cross-multiplication, never by computing a multivariate gcd.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import ExactDivisionError

Exponents = Tuple[int, int]
RationalLike = Union[int, str, Fraction]

#: Degree of the zero polynomial; compares below every true degree.
NEG_INFINITY = float("-inf")


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/2"`` to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) or isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def term_sort_key(exponents: Exponents) -> Tuple[int, int]:
    """Canonical graded-lex sort key for an exponent pair."""
    i, j = exponents
    return (i + j, i)


class BivariatePoly:
    """An immutable bivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, RationalLike] | None = None):
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for (i, j), coeff in terms.items():
                if not (isinstance(i, int) and isinstance(j, int) and i >= 0 and j >= 0):
                    raise ValueError(f"bad exponent pair {(i, j)!r}")
                c = as_fraction(coeff)
                if c != 0:
                    clean[(i, j)] = clean.get((i, j), Fraction(0)) + c
            clean = {e: c for e, c in clean.items() if c != 0}
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[Exponents, Fraction]) -> "BivariatePoly":
        # internal: terms already canonical (no zeros, Fraction values)
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls._raw({})

    @classmethod
    def constant(cls, value: RationalLike) -> "BivariatePoly":
        c = as_fraction(value)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: RationalLike = 1) -> "BivariatePoly":
        c = as_fraction(coeff)
        if i < 0 or j < 0:
            raise ValueError("negative exponent")
        return cls._raw({(i, j): c} if c else {})

    @classmethod
    def variables(cls) -> Tuple["BivariatePoly", "BivariatePoly"]:
        """The generators (x, y)."""
        return cls.monomial(1, 0), cls.monomial(0, 1)

    # -- inspection ---------------------------------------------------------

    def items(self) -> Iterator[Tuple[Exponents, Fraction]]:
        """Terms in canonical graded-lex order."""
        for e in sorted(self._terms, key=term_sort_key):
            yield e, self._terms[e]

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self):
        """Total degree; NEG_INFINITY for the zero polynomial."""
        if not self._terms:
            return NEG_INFINITY
        return max(i + j for i, j in self._terms)

    def term_count(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.items():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("x", i), ("y", j))
                if e
            )
            if mono:
                prefix = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(prefix + mono)
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        res = dict(self._terms)
        for e, c in other._terms.items():
            s = res.get(e, Fraction(0)) + c
            if s:
                res[e] = s
            elif e in res:
                del res[e]
        return BivariatePoly._raw(res)

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self + (-other)

    def _cleared(self) -> Tuple[dict[Exponents, int], Fraction]:
        """Integer coefficients plus a global scale; speeds up products."""
        denom_lcm = 1
        for c in self._terms.values():
            denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
        ints = {e: int(c * denom_lcm) for e, c in self._terms.items()}
        return ints, Fraction(1, denom_lcm)

    def __mul__(self, other) -> "BivariatePoly":
        if isinstance(other, BivariatePoly):
            if not self._terms or not other._terms:
                return BivariatePoly.zero()
            a_ints, a_scale = self._cleared()
            b_ints, b_scale = other._cleared()
            acc: dict[Exponents, int] = {}
            get = acc.get
            for (i1, j1), c1 in a_ints.items():
                for (i2, j2), c2 in b_ints.items():
                    e = (i1 + i2, j1 + j2)
                    acc[e] = get(e, 0) + c1 * c2
            scale = a_scale * b_scale
            return BivariatePoly._raw({e: v * scale for e, v in acc.items() if v})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "BivariatePoly":
        c = as_fraction(factor)
        if c == 0:
            return BivariatePoly.zero()
        return BivariatePoly._raw({e: v * c for e, v in self._terms.items()})

    def __pow__(self, exponent: int) -> "BivariatePoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BivariatePoly.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus -----------------------------------------------------------

    def diff_x(self) -> "BivariatePoly":
        return BivariatePoly._raw(
            {(i - 1, j): c * i for (i, j), c in self._terms.items() if i}
        )

    def diff_y(self) -> "BivariatePoly":
        return BivariatePoly._raw(
            {(i, j - 1): c * j for (i, j), c in self._terms.items() if j}
        )

    def laplacian(self) -> "BivariatePoly":
        return self.diff_x().diff_x() + self.diff_y().diff_y()

    def integrate_x(self) -> "BivariatePoly":
        """Termwise antiderivative in x (no constant of integration)."""
        return BivariatePoly._raw(
            {(i + 1, j): c / (i + 1) for (i, j), c in self._terms.items()}
        )

    def integrate_y(self) -> "BivariatePoly":
        """Termwise antiderivative in y (no constant of integration)."""
        return BivariatePoly._raw(
            {(i, j + 1): c / (j + 1) for (i, j), c in self._terms.items()}
        )

    # -- evaluation and structure -------------------------------------------

    def evaluate(self, x0: RationalLike, y0: RationalLike) -> Fraction:
        """Exact value at a rational point."""
        xv, yv = as_fraction(x0), as_fraction(y0)
        xpow: dict[int, Fraction] = {0: Fraction(1)}
        ypow: dict[int, Fraction] = {0: Fraction(1)}
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            if i not in xpow:
                xpow[i] = xv**i
            if j not in ypow:
                ypow[j] = yv**j
            total += c * xpow[i] * ypow[j]
        return total

    def leading_form(self) -> "BivariatePoly":
        """Homogeneous part of top degree; rejects the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading form")
        d = self.degree
        return BivariatePoly._raw(
            {e: c for e, c in self._terms.items() if e[0] + e[1] == d}
        )

    def is_homogeneous(self) -> bool:
        degrees = {i + j for i, j in self._terms}
        return len(degrees) <= 1

    def shifted(self, dx: RationalLike, dy: RationalLike) -> "BivariatePoly":
        """Taylor shift: returns p(x + dx, y + dy)."""
        ax, ay = as_fraction(dx), as_fraction(dy)
        if not self._terms:
            return self
        nx = max(i for i, _ in self._terms) + 1
        ny = max(j for _, j in self._terms) + 1
        grid = [[Fraction(0)] * ny for _ in range(nx)]
        for (i, j), c in self._terms.items():
            grid[i][j] = c
        if ax:
            # repeated Horner step, one column of y-powers at a time
            for k in range(nx - 1):
                for i in range(nx - 2, k - 1, -1):
                    for j in range(ny):
                        grid[i][j] += ax * grid[i + 1][j]
        if ay:
            for k in range(ny - 1):
                for j in range(ny - 2, k - 1, -1):
                    for i in range(nx):
                        grid[i][j] += ay * grid[i][j + 1]
        return BivariatePoly(
            {(i, j): grid[i][j] for i in range(nx) for j in range(ny)}
        )

    def coefficient_abs_sum(self) -> Fraction:
        return sum((abs(c) for c in self._terms.values()), Fraction(0))

    def div_exact(self, divisor: "BivariatePoly") -> "BivariatePoly":
        """Exact polynomial quotient self / divisor.

        Intended for factors known by construction (powers of a seed, W);
        raises ExactDivisionError when the division leaves a remainder.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return self
        div_lead = max(divisor._terms, key=term_sort_key)
        div_lc = divisor._terms[div_lead]
        remainder = dict(self._terms)
        quotient: dict[Exponents, Fraction] = {}
        while remainder:
            lead = max(remainder, key=term_sort_key)
            qi, qj = lead[0] - div_lead[0], lead[1] - div_lead[1]
            if qi < 0 or qj < 0:
                raise ExactDivisionError("leading term not divisible")
            qc = remainder[lead] / div_lc
            quotient[(qi, qj)] = qc
            for (di, dj), dc in divisor._terms.items():
                e = (qi + di, qj + dj)
                s = remainder.get(e, Fraction(0)) - qc * dc
                if s:
                    remainder[e] = s
                elif e in remainder:
                    del remainder[e]
        return BivariatePoly._raw(quotient)


class RationalFn:
    """A quotient of two bivariate polynomials, kept unreduced.

    Equality of values is decided by `equals` (cross-multiplication);
    `==` compares representations term for term.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: BivariatePoly, den: BivariatePoly | None = None):
        if den is None:
            den = BivariatePoly.constant(1)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: BivariatePoly) -> "RationalFn":
        return cls(p)

    @classmethod
    def zero(cls) -> "RationalFn":
        return cls(BivariatePoly.zero())

    @classmethod
    def constant(cls, value: RationalLike) -> "RationalFn":
        return cls(BivariatePoly.constant(value))

    @property
    def is_polynomial(self) -> bool:
        return self.den == BivariatePoly.constant(1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __repr__(self) -> str:
        return f"({self.num!r}) / ({self.den!r})"

    def equals(self, other: "RationalFn") -> bool:
        """Value equality: a/b == c/d iff a*d - c*b is the zero polynomial."""
        return (self.num * other.den - other.num * self.den).is_zero

    @property
    def is_value_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RationalFn") -> "RationalFn":
        if not isinstance(other, RationalFn):
            return NotImplemented
        return RationalFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return RationalFn(self.num * other.num, self.den * other.den)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "RationalFn":
        return RationalFn(self.num.scale(factor), self.den)

    def laplacian(self) -> "RationalFn":
        """Exact quotient-rule Laplacian with denominator den**3."""
        n, d = self.num, self.den
        nx, ny = n.diff_x(), n.diff_y()
        dx, dy = d.diff_x(), d.diff_y()
        numerator = (
            d * d * n.laplacian()
            - d * (n * d.laplacian())
            - (d * (nx * dx + ny * dy)).scale(2)
            + (n * (dx * dx + dy * dy)).scale(2)
        )
        return RationalFn(numerator, d * d * d)

    def evaluate(self, x0: RationalLike, y0: RationalLike) -> Fraction:
        """Exact value; raises ZeroDivisionError on a pole."""
        return self.num.evaluate(x0, y0) / self.den.evaluate(x0, y0)

    def cancel_factor(self, factor: BivariatePoly) -> "RationalFn":
        """Divide numerator and denominator by a factor known to divide both."""
        return RationalFn(self.num.div_exact(factor), self.den.div_exact(factor))
