"""Univariate companions to the bivariate types, used by the Sturm
machinery and the one-dimensional Darboux chain."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Mapping, Tuple, Union

from .polynomials import NEG_INFINITY, RationalLike, as_fraction


class Poly1D:
    """Sparse univariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for i, coeff in terms.items():
                if not (isinstance(i, int) and i >= 0):
                    raise ValueError(f"bad exponent {i!r}")
                c = as_fraction(coeff)
                if c != 0:
                    clean[i] = clean.get(i, Fraction(0)) + c
            clean = {i: c for i, c in clean.items() if c != 0}
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "Poly1D":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "Poly1D":
        return cls._raw({})

    @classmethod
    def constant(cls, value: RationalLike) -> "Poly1D":
        c = as_fraction(value)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, i: int, coeff: RationalLike = 1) -> "Poly1D":
        c = as_fraction(coeff)
        return cls._raw({i: c} if c else {})

    @classmethod
    def from_coefficients(cls, ascending: list) -> "Poly1D":
        """From a dense list [c0, c1, ...] of coefficients of x^0, x^1, ..."""
        return cls({i: c for i, c in enumerate(ascending)})

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        for i in sorted(self._terms):
            yield i, self._terms[i]

    def coefficient(self, i: int) -> Fraction:
        return self._terms.get(i, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self):
        if not self._terms:
            return NEG_INFINITY
        return max(self._terms)

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self._terms[max(self._terms)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly1D):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, c in self.items():
            if i == 0:
                parts.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __add__(self, other: "Poly1D") -> "Poly1D":
        if not isinstance(other, Poly1D):
            return NotImplemented
        res = dict(self._terms)
        for i, c in other._terms.items():
            s = res.get(i, Fraction(0)) + c
            if s:
                res[i] = s
            elif i in res:
                del res[i]
        return Poly1D._raw(res)

    def __neg__(self) -> "Poly1D":
        return Poly1D._raw({i: -c for i, c in self._terms.items()})

    def __sub__(self, other: "Poly1D") -> "Poly1D":
        if not isinstance(other, Poly1D):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Poly1D":
        if isinstance(other, Poly1D):
            acc: dict[int, Fraction] = {}
            for i1, c1 in self._terms.items():
                for i2, c2 in other._terms.items():
                    i = i1 + i2
                    s = acc.get(i, Fraction(0)) + c1 * c2
                    acc[i] = s
            return Poly1D._raw({i: c for i, c in acc.items() if c})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "Poly1D":
        c = as_fraction(factor)
        if c == 0:
            return Poly1D.zero()
        return Poly1D._raw({i: v * c for i, v in self._terms.items()})

    def derivative(self) -> "Poly1D":
        return Poly1D._raw({i - 1: c * i for i, c in self._terms.items() if i})

    def evaluate(self, x0: RationalLike) -> Fraction:
        xv = as_fraction(x0)
        total = Fraction(0)
        for i, c in self._terms.items():
            total += c * xv**i
        return total

    def divmod(self, divisor: "Poly1D") -> Tuple["Poly1D", "Poly1D"]:
        """Euclidean division over Q: self = q*divisor + r, deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q: dict[int, Fraction] = {}
        rem = dict(self._terms)
        dd = divisor.degree
        dc = divisor.leading_coefficient()
        while rem and max(rem) >= dd:
            i = max(rem)
            factor = rem[i] / dc
            shift = i - dd
            q[shift] = factor
            for di, c in divisor._terms.items():
                e = di + shift
                s = rem.get(e, Fraction(0)) - factor * c
                if s:
                    rem[e] = s
                elif e in rem:
                    del rem[e]
        return Poly1D._raw(q), Poly1D._raw(rem)

    def primitive(self) -> "Poly1D":
        """Scaled by a positive rational so coefficients are coprime integers."""
        if not self._terms:
            return self
        den_lcm = 1
        for c in self._terms.values():
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        ints = {i: int(c * den_lcm) for i, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, abs(v))
        return Poly1D._raw({i: Fraction(v, g) for i, v in ints.items()})


class RationalFn1D:
    """Unreduced quotient of two univariate polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly1D, den: Poly1D | None = None):
        if den is None:
            den = Poly1D.constant(1)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly1D) -> "RationalFn1D":
        return cls(p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFn1D):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __repr__(self) -> str:
        return f"({self.num!r}) / ({self.den!r})"

    def equals(self, other: "RationalFn1D") -> bool:
        return (self.num * other.den - other.num * self.den).is_zero

    def __add__(self, other: "RationalFn1D") -> "RationalFn1D":
        if not isinstance(other, RationalFn1D):
            return NotImplemented
        return RationalFn1D(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFn1D":
        return RationalFn1D(-self.num, self.den)

    def __sub__(self, other: "RationalFn1D") -> "RationalFn1D":
        if not isinstance(other, RationalFn1D):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "RationalFn1D":
        if isinstance(other, RationalFn1D):
            return RationalFn1D(self.num * other.num, self.den * other.den)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "RationalFn1D":
        return RationalFn1D(self.num.scale(factor), self.den)

    def derivative(self) -> "RationalFn1D":
        n, d = self.num, self.den
        return RationalFn1D(n.derivative() * d - n * d.derivative(), d * d)

    def second_derivative(self) -> "RationalFn1D":
        """Quotient rule twice, with denominator den**3."""
        n, d = self.num, self.den
        n1, d1 = n.derivative(), d.derivative()
        numerator = (
            d * d * n.derivative().derivative()
            - d * (n * d.derivative().derivative())
            - (d * (n1 * d1)).scale(2)
            + (n * (d1 * d1)).scale(2)
        )
        return RationalFn1D(numerator, d * d * d)

    def evaluate(self, x0: RationalLike) -> Fraction:
        return self.num.evaluate(x0) / self.den.evaluate(x0)
