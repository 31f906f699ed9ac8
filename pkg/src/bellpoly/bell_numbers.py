"""Iterated-exponential Bell numbers by two independent routes.

B(n, m) is n! times the x**n coefficient of the m-th iterate of the
exponential map on formal power series, starting from exp(x) and
applying E -> exp(E - 1). The same numbers satisfy the Stirling
recursion

    B(n, m) = sum(B(k, m-1) * S(n, k) for k in 1..n),    B(n, 0) = 1,

which serves as the reference implementation. Both routes are exact;
tests and the selfcheck suite require them to agree entry for entry.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import factorial, stirling2


@dataclass(frozen=True)
class TruncatedEGF:
    """Degree-N truncation of an exponential generating function.

    coeffs[j] is the plain x**j coefficient a_j. For every iterate of
    the exponential map, a_0 = 1 and j! * a_j is the integer B(j, m).
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least its constant term")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def exponential(cls, order: int) -> TruncatedEGF:
        """The degree-`order` truncation of exp(x): a_j = 1/j!."""
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        return cls(tuple(Fraction(1, factorial(j)) for j in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def integer_coefficient(self, n: int) -> int:
        """n! * a_n as an exact integer; raises if it is not integral."""
        value = factorial(n) * self.coeffs[n]
        if value.denominator != 1:
            raise ArithmeticError(f"{n}! * a_{n} = {value} is not an integer")
        return value.numerator


def egf_iterate(series: TruncatedEGF) -> TruncatedEGF:
    """One step E -> exp(E - 1) of the exponential map, truncated.

    With f = E - 1 (zero constant term), g = exp(f) satisfies g' = f'g,
    giving g_0 = 1 and g_j = (1/j) * sum(i * f_i * g_{j-i}, i = 1..j).
    Truncation commutes with the composition, so a degree-N input yields
    the exact degree-N prefix of the next iterate.
    """
    if series.coeffs[0] != 1:
        raise ValueError("not an exponential-map iterate: constant term != 1")
    f = series.coeffs  # f_i = a_i for i >= 1; subtracting 1 only clears a_0
    g = [Fraction(1)]
    for j in range(1, series.order + 1):
        acc = sum(i * f[i] * g[j - i] for i in range(1, j + 1))
        g.append(Fraction(acc, j))
    return TruncatedEGF(tuple(g))


def bell_via_egf(n: int, m: int) -> int:
    """B(n, m) by m applications of the exponential map to exp(x).

    Cost grows linearly in m; the recursion route is the better choice
    for large m.
    """
    if n < 0 or m < 0:
        raise ValueError("Bell numbers need non-negative indices")
    series = TruncatedEGF.exponential(n)
    for _ in range(m):
        series = egf_iterate(series)
    return series.integer_coefficient(n)


class BellTable:
    """Memoized grid of B(n, m), filled row by row in m.

    The m = 0 row and n = 0 column are identically 1 and never stored.
    Fills are lock-guarded so an instance may be shared across threads.
    """

    def __init__(self):
        self._entries: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def value(self, n: int, m: int) -> int:
        if n < 0 or m < 0:
            raise ValueError("Bell numbers need non-negative indices")
        if n == 0 or m == 0:
            return 1
        key = (n, m)
        if key not in self._entries:
            with self._lock:
                self._fill(n, m)
        return self._entries[key]

    def _fill(self, n: int, m: int) -> None:
        entries = self._entries
        for mm in range(1, m + 1):
            for nn in range(1, n + 1):
                if (nn, mm) in entries:
                    continue
                if mm == 1:
                    total = sum(stirling2(nn, k) for k in range(1, nn + 1))
                else:
                    total = sum(
                        entries[(k, mm - 1)] * stirling2(nn, k)
                        for k in range(1, nn + 1)
                    )
                entries[(nn, mm)] = total


_BELL = BellTable()


def bell_via_recursion(n: int, m: int) -> int:
    """B(n, m) via the Stirling recursion, memoized."""
    return _BELL.value(n, m)


def bell_first_order(n: int) -> int:
    """The plain Bell number B_n = sum(S(n, k) for k in 1..n), n >= 1."""
    if n < 1:
        raise ValueError("first-order Bell numbers start at n = 1")
    return sum(stirling2(n, k) for k in range(1, n + 1))


def _reset_tables() -> None:
    """Drop memoized state. Test hook."""
    global _BELL
    _BELL = BellTable()
