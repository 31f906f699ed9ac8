"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class RationalPolynomial:
    """Immutable polynomial sum(c[j] * x**j) over the rationals.

    Coefficients are stored densely as Fraction values with trailing
    zeros stripped, so the highest stored coefficient is nonzero and
    equality is structural. The zero polynomial stores no coefficients
    and reports degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def zero(cls) -> RationalPolynomial:
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> RationalPolynomial:
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> RationalPolynomial:
        if power < 0:
            raise ValueError("power must be non-negative")
        return cls((0,) * power + (coeff,))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, j: int) -> Fraction:
        """Coefficient of x**j; zero beyond the stored degree."""
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def evaluate(self, x: Scalar) -> Fraction:
        """Horner evaluation; exact."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def shift(self, delta: Scalar) -> RationalPolynomial:
        """The polynomial q with q(x) = self(x + delta), by binomial expansion."""
        out = [Fraction(0)] * len(self._coeffs)
        for j, c in enumerate(self._coeffs):
            if c == 0:
                continue
            dpow = Fraction(1)
            for i in range(j, -1, -1):
                out[i] += c * comb(j, i) * dpow
                dpow *= delta
        return RationalPolynomial(out)

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            if self.is_zero() or other.is_zero():
                return RationalPolynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return RationalPolynomial(out)
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c * other for c in self._coeffs)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c * other for c in self._coeffs)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self._coeffs]})"
