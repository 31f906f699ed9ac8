"""Polynomial representation of B(n, m) as a function of m.

For fixed n >= 1, B(n, m) agrees for every natural m with a polynomial
of degree n-1 with rational coefficients, constant term 1 and leading
coefficient n!/2**(n-1). Two independent constructions are provided:

* interpolate_bell_polynomial fits exact samples by Newton divided
  differences and verifies a held-out sample;
* construct_bell_polynomial assembles the polynomial from the
  first-difference identity

      B(n, m) - B(n, m-1) = sum(B(k, m-1) * S(n, k) for k in 1..n-1)

  by telescoping the differences into power sums.

The two must agree coefficient for coefficient; any mismatch raises
ConsistencyError rather than being silently ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .bell_numbers import bell_via_recursion
from .combinatorics import factorial, faulhaber_polynomial, stirling2
from .rational_poly import RationalPolynomial

Scalar = Union[int, Fraction]


class ConsistencyError(ArithmeticError):
    """An exact cross-check that must hold mathematically failed."""


@dataclass(frozen=True)
class BellPolynomial:
    """For fixed n, the polynomial p with p(m) = B(n, m) for natural m.

    Degree n-1 with constant term 1 for n >= 1; the degenerate n = 0 is
    the constant polynomial 1 (an extension, since B(0, m) = 1).
    """

    n: int
    poly: RationalPolynomial


@dataclass(frozen=True)
class DifferencePolynomial:
    """For fixed n >= 2, the polynomial d with d(m) = B(n, m) - B(n, m-1).

    Degree n-2 with positive leading coefficient.
    """

    n: int
    poly: RationalPolynomial


def poly_eval(p: RationalPolynomial, m: Scalar) -> Fraction:
    """Horner evaluation of p at m; exact."""
    return p.evaluate(m)


def poly_shift(p: RationalPolynomial, delta: Scalar) -> RationalPolynomial:
    """The polynomial q with q(m) = p(m + delta), by binomial expansion."""
    return p.shift(delta)


def interpolate_bell_polynomial(n: int) -> BellPolynomial:
    """Fit the unique degree-(n-1) polynomial through B(n, 0), ..., B(n, n-1).

    Newton divided differences over the nodes m = 0..n-1, all in exact
    rational arithmetic. The fresh sample at m = n must land on the
    fitted polynomial; a mismatch would mean the polynomial form does
    not hold (or the arithmetic is broken) and raises ConsistencyError.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return BellPolynomial(0, RationalPolynomial.constant(1))
    # dd starts as the samples and is overwritten in place with the
    # divided differences; nodes are consecutive, so x_{i+j} - x_i = j.
    dd = [Fraction(bell_via_recursion(n, mm)) for mm in range(n)]
    newton = [dd[0]]
    for j in range(1, n):
        for i in range(n - j):
            dd[i] = Fraction(dd[i + 1] - dd[i], j)
        newton.append(dd[0])
    poly = RationalPolynomial.zero()
    basis = RationalPolynomial.constant(1)
    for j, c in enumerate(newton):
        poly = poly + c * basis
        basis = basis * RationalPolynomial((-j, 1))  # times (m - j)
    held_out = poly.evaluate(n)
    expected = bell_via_recursion(n, n)
    if held_out != expected:
        raise ConsistencyError(
            f"interpolation for n={n} gives {held_out} at m={n}, "
            f"recursion gives {expected}"
        )
    return BellPolynomial(n, poly)


def difference_polynomial(
    n: int, lower: Sequence[BellPolynomial]
) -> DifferencePolynomial:
    """The polynomial d with d(m) = B(n, m) - B(n, m-1), for n >= 2.

    By the Stirling recursion the difference equals
    sum(B(k, m-1) * S(n, k) for k in 1..n-1); each B(k, m-1) is the
    k-th Bell polynomial shifted by -1 and re-expanded in m. `lower`
    must hold the Bell polynomials for 1..n-1 in order.
    """
    if n < 2:
        raise ValueError("difference polynomials are defined for n >= 2")
    if len(lower) < n - 1 or any(lower[k - 1].n != k for k in range(1, n)):
        raise ValueError("lower must hold the Bell polynomials for 1..n-1 in order")
    total = RationalPolynomial.zero()
    for k in range(1, n):
        total = total + stirling2(n, k) * lower[k - 1].poly.shift(-1)
    if total.degree != n - 2 or total.leading_coefficient() <= 0:
        raise ConsistencyError(
            f"difference polynomial for n={n} has degree {total.degree} "
            f"and leading coefficient {total.leading_coefficient()}"
        )
    return DifferencePolynomial(n, total)


def construct_bell_polynomial(n: int) -> BellPolynomial:
    """Build the Bell polynomial from differences and power sums.

    Bottom-up over j = 1..n: summing d(k) = B(j, k) - B(j, k-1) over
    k = 1..m telescopes to B(j, m) - 1, so with d's coefficients d_r,

        B(j, m) = 1 + sum(d_r * P_r(m) for r in 0..j-2),

    where P_r is the power-sum polynomial. Every level is checked
    against the interpolation route; any coefficient mismatch raises
    ConsistencyError.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return BellPolynomial(0, RationalPolynomial.constant(1))
    levels: list[BellPolynomial] = []
    for j in range(1, n + 1):
        if j == 1:
            poly = RationalPolynomial.constant(1)  # B(1, m) = 1
        else:
            diff = difference_polynomial(j, levels)
            poly = RationalPolynomial.constant(1)
            for r, d_r in enumerate(diff.poly.coefficients):
                if d_r != 0:
                    poly = poly + d_r * faulhaber_polynomial(r)
        reference = interpolate_bell_polynomial(j)
        if poly != reference.poly:
            raise ConsistencyError(
                f"telescoping construction for n={j} disagrees with "
                f"interpolation: {poly!r} vs {reference.poly!r}"
            )
        levels.append(BellPolynomial(j, poly))
    return levels[-1]


def leading_coefficient(n: int) -> Fraction:
    """Top coefficient of the Bell polynomial, built by its own recurrence.

    Iterates c(j) = (j/2) * c(j-1) from c(1) = 1 (B(1, m) is constantly
    one). That the result equals the closed form n!/2**(n-1) is asserted
    by tests rather than assumed here.
    """
    if n < 1:
        raise ValueError("leading coefficients start at n = 1")
    c = Fraction(1)
    for j in range(2, n + 1):
        c *= Fraction(j, 2)
    return c


def verify_theorem(n: int) -> Fraction:
    """Confirm the leading-coefficient law for one n and return the value.

    The top coefficient of the Bell polynomial must come out the same
    three ways: read off the interpolated polynomial, iterated via the
    halving recurrence, and written in closed form as n!/2**(n-1).
    Raises ConsistencyError if they do not all agree.
    """
    if n < 1:
        raise ValueError("the leading-coefficient law starts at n = 1")
    fitted = interpolate_bell_polynomial(n).poly.leading_coefficient()
    iterated = leading_coefficient(n)
    closed = Fraction(factorial(n), 2 ** (n - 1))
    if not (fitted == iterated == closed):
        raise ConsistencyError(
            f"leading coefficient for n={n}: interpolation gives {fitted}, "
            f"halving recurrence gives {iterated}, n!/2^(n-1) gives {closed}"
        )
    return closed


@dataclass(frozen=True)
class AsymptoticReport:
    """B(n, m) against its leading term (n!/2**(n-1)) * m**(n-1)."""

    exact: int
    leading: Fraction
    ratio: Fraction


def asymptotic_report(n: int, m: int) -> AsymptoticReport:
    """Compare the exact value with the leading term; ratio -> 1 as m grows."""
    if n < 1 or m < 1:
        raise ValueError("asymptotic reports need n >= 1 and m >= 1")
    value = construct_bell_polynomial(n).poly.evaluate(m)
    if value.denominator != 1:
        raise ConsistencyError(f"B({n}, {m}) evaluated to non-integer {value}")
    exact = value.numerator
    leading = leading_coefficient(n) * m ** (n - 1)
    return AsymptoticReport(exact=exact, leading=leading, ratio=Fraction(exact) / leading)
