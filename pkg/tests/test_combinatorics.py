"""Combinatorial primitives against independent oracles and known values."""

import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellpoly import (
    bernoulli,
    binomial,
    clear_caches,
    factorial,
    faulhaber_polynomial,
    power_sum_oracle,
    stirling2,
)
from bellpoly.oracles import partition_block_counts
from bellpoly.rational_poly import RationalPolynomial


class TestStirling:
    def test_known_values(self):
        assert stirling2(0, 0) == 1
        assert stirling2(3, 3) == 1
        assert stirling2(4, 2) == 7
        assert stirling2(5, 4) == 10
        assert stirling2(8, 3) == 966

    def test_out_of_range(self):
        assert stirling2(3, 5) == 0
        assert stirling2(4, 0) == 0
        with pytest.raises(ValueError):
            stirling2(-1, 0)
        with pytest.raises(ValueError):
            stirling2(3, -2)

    def test_row_sums_are_first_order_bell(self):
        # row sums of the triangle count all partitions of an n-set
        sums = [sum(stirling2(n, k) for k in range(n + 1)) for n in range(1, 9)]
        assert sums == [1, 2, 5, 15, 52, 203, 877, 4140]

    def test_matches_enumeration(self):
        for n in range(0, 13):
            counts = partition_block_counts(n)
            for k, count in enumerate(counts):
                assert stirling2(n, k) == count

    @given(n=st.integers(min_value=1, max_value=40), k=st.integers(min_value=1, max_value=45))
    def test_recurrence(self, n, k):
        assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


class TestBinomialFactorial:
    def test_known_values(self):
        assert binomial(6, 2) == 15
        assert binomial(5, 0) == 1
        assert binomial(4, 7) == 0
        assert factorial(0) == 1
        assert factorial(5) == 120
        assert factorial(8) == 40320

    def test_pascal_triangle(self):
        row = [1]
        for n in range(1, 15):
            row = [1] + [row[j] + row[j + 1] for j in range(len(row) - 1)] + [1]
            assert [binomial(n, k) for k in range(n + 1)] == row

    def test_factorial_product(self):
        acc = 1
        for n in range(1, 15):
            acc *= n
            assert factorial(n) == acc


class TestBernoulli:
    def test_known_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(3) == 0
        assert bernoulli(4) == Fraction(-1, 30)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_defining_recurrence(self):
        for k in range(1, 21):
            assert sum(binomial(k + 1, j) * bernoulli(j) for j in range(k + 1)) == 0

    def test_odd_indices_vanish(self):
        assert all(bernoulli(k) == 0 for k in range(3, 21, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            bernoulli(-1)


class TestPowerSums:
    def test_oracle_known_values(self):
        assert power_sum_oracle(0, 10) == 10
        assert power_sum_oracle(1, 4) == 10
        assert power_sum_oracle(2, 3) == 14
        assert power_sum_oracle(4, 10) == 25333
        assert power_sum_oracle(5, 0) == 0

    def test_oracle_rejects_negative(self):
        with pytest.raises(ValueError):
            power_sum_oracle(-1, 3)
        with pytest.raises(ValueError):
            power_sum_oracle(2, -1)

    def test_polynomial_known_coefficients(self):
        assert faulhaber_polynomial(0) == RationalPolynomial([0, 1])
        assert faulhaber_polynomial(1) == RationalPolynomial(
            [0, Fraction(1, 2), Fraction(1, 2)]
        )
        assert faulhaber_polynomial(3) == RationalPolynomial(
            [0, 0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)]
        )

    def test_polynomial_shape(self):
        for r in range(0, 13):
            p = faulhaber_polynomial(r)
            assert p.degree == r + 1
            assert p.constant_term() == 0
            assert p.leading_coefficient() == Fraction(1, r + 1)

    def test_polynomial_matches_oracle_grid(self):
        for r in range(0, 13):
            p = faulhaber_polynomial(r)
            for m in range(0, 201, 23):
                assert p.evaluate(m) == power_sum_oracle(r, m)

    @given(r=st.integers(min_value=0, max_value=12), m=st.integers(min_value=0, max_value=200))
    @settings(max_examples=60)
    def test_polynomial_matches_oracle_random(self, r, m):
        assert faulhaber_polynomial(r).evaluate(m) == power_sum_oracle(r, m)


def test_tables_survive_concurrent_fills():
    clear_caches()
    errors = []

    def worker():
        try:
            for n in range(1, 30):
                stirling2(n, max(1, n // 2))
            for k in range(0, 20):
                bernoulli(k)
        except Exception as exc:  # pragma: no cover - only on failure
            errors.append(exc)

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    # cross-checked against the inclusion-exclusion formula for S(n, k)
    assert stirling2(29, 14) == 2534474684137526739000
    clear_caches()
