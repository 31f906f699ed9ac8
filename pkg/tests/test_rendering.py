"""Rendering: exact decimal strings, fraction strings, document payloads."""

import decimal
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellpoly.rational_poly import RationalPolynomial
from bellpoly.rendering import (
    FORMATS,
    OutputDocument,
    compute_value,
    decimal_expansion,
    fraction_str,
    polynomial_str,
    render_asympt,
    render_poly,
    render_table,
    render_value,
)

B3 = RationalPolynomial([1, Fraction(5, 2), Fraction(3, 2)])


class TestDecimalExpansion:
    def test_known_values(self):
        assert decimal_expansion(Fraction(15251, 15000), 6) == "1.016733"
        assert decimal_expansion(Fraction(1), 3) == "1.000"
        assert decimal_expansion(Fraction(2, 3), 4) == "0.6667"
        assert decimal_expansion(Fraction(0), 2) == "0.00"

    def test_ties_round_half_even(self):
        assert decimal_expansion(Fraction(1, 8), 2) == "0.12"
        assert decimal_expansion(Fraction(3, 8), 2) == "0.38"
        assert decimal_expansion(Fraction(5, 2), 0) == "2"
        assert decimal_expansion(Fraction(1, 2), 0) == "0"
        assert decimal_expansion(Fraction(3, 2), 0) == "2"

    def test_negative_values(self):
        assert decimal_expansion(Fraction(-3, 8), 2) == "-0.38"
        assert decimal_expansion(Fraction(-1), 0) == "-1"

    def test_rejects_negative_digits(self):
        with pytest.raises(ValueError):
            decimal_expansion(Fraction(1, 3), -1)

    @given(
        num=st.integers(min_value=-10 ** 9, max_value=10 ** 9),
        den=st.integers(min_value=1, max_value=10 ** 6),
        digits=st.integers(min_value=0, max_value=8),
    )
    @settings(max_examples=150)
    def test_matches_decimal_module(self, num, den, digits):
        with decimal.localcontext() as ctx:
            ctx.prec = 60
            quantum = decimal.Decimal(1).scaleb(-digits)
            expected = (decimal.Decimal(num) / decimal.Decimal(den)).quantize(
                quantum, rounding=decimal.ROUND_HALF_EVEN
            )
        assert decimal_expansion(Fraction(num, den), digits) == str(expected)


class TestFractionStr:
    def test_forms(self):
        assert fraction_str(Fraction(3, 2)) == "3/2"
        assert fraction_str(Fraction(7)) == "7"
        assert fraction_str(Fraction(-5, 3)) == "-5/3"
        assert fraction_str(Fraction(0)) == "0"


class TestPolynomialStr:
    def test_forms(self):
        assert polynomial_str(B3) == "(3/2)m^2 + (5/2)m + 1"
        assert polynomial_str(RationalPolynomial([1, 1])) == "m + 1"
        assert polynomial_str(RationalPolynomial([1, 3])) == "3m + 1"
        assert polynomial_str(RationalPolynomial.zero()) == "0"
        assert polynomial_str(RationalPolynomial.constant(1)) == "1"
        assert polynomial_str(RationalPolynomial([0, -1])) == "-m"
        assert (
            polynomial_str(RationalPolynomial([0, Fraction(-1, 2), Fraction(3, 2)]))
            == "(3/2)m^2 - (1/2)m"
        )
        assert polynomial_str(RationalPolynomial([5]), var="x") == "5"
        assert polynomial_str(RationalPolynomial([0, 0, 2]), var="x") == "2x^2"


class TestComputeValue:
    def test_explicit_methods_agree(self):
        for method in ("egf", "recursion", "poly"):
            value, resolved = compute_value(6, 4, method)
            assert value == 44590
            assert resolved == method

    def test_auto_threshold(self):
        assert compute_value(3, 1000, "auto")[1] == "recursion"
        assert compute_value(3, 1001, "auto")[1] == "poly"
        assert compute_value(3, 1000, "auto")[0] == compute_value(3, 1000, "poly")[0]

    def test_rejects_unknown_method(self):
        with pytest.raises(ValueError):
            compute_value(3, 2, "float64")


class TestDocuments:
    def test_table_tsv(self):
        doc = render_table(3, 2, "tsv")
        assert doc == OutputDocument(
            "tsv", "m\tn=1\tn=2\tn=3\n1\t1\t2\t5\n2\t1\t3\t12\n"
        )

    def test_table_json(self):
        doc = json.loads(render_table(3, 2, "json").payload)
        assert doc == {
            "n_max": 3,
            "m_max": 2,
            "rows": [
                {"m": 1, "values": ["1", "2", "5"]},
                {"m": 2, "values": ["1", "3", "12"]},
            ],
        }

    def test_table_markdown(self):
        lines = render_table(2, 1, "markdown").payload.splitlines()
        assert lines == [
            "| m | n=1 | n=2 |",
            "| --- | --- | --- |",
            "| 1 | 1 | 2 |",
        ]

    def test_table_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            render_table(0, 5, "tsv")
        with pytest.raises(ValueError):
            render_table(5, 2, "yaml")

    def test_value_payloads(self):
        assert render_value(5, 3, "recursion", "tsv").payload == "1304\n"
        doc = json.loads(render_value(5, 3, "auto", "json").payload)
        assert doc == {"n": 5, "m": 3, "method": "recursion", "value": "1304"}

    def test_poly_json_schema(self):
        doc = json.loads(render_poly(3, "json").payload)
        assert doc == {
            "n": 3,
            "coefficients": ["1", "5/2", "3/2"],
            "leading_theorem": "3/2",
            "match": True,
        }

    def test_poly_degenerate_zero(self):
        doc = json.loads(render_poly(0, "json").payload)
        assert doc == {
            "n": 0,
            "coefficients": ["1"],
            "leading_theorem": "1",
            "match": True,
        }

    def test_poly_tsv(self):
        assert render_poly(2, "tsv").payload == (
            "n\t2\nc_0\t1\nc_1\t1\nleading_theorem\t1\nmatch\ttrue\n"
        )

    def test_poly_markdown_shows_polynomial(self):
        payload = render_poly(3, "markdown").payload
        assert payload.startswith("B_3(m) = (3/2)m^2 + (5/2)m + 1\n")

    def test_asympt_fields(self):
        payload = render_asympt(3, 1000, 6, "tsv").payload
        assert payload == (
            "n\t3\nm\t1000\nexact\t1502501\nleading\t1500000\n"
            "ratio\t1502501/1500000\nratio_decimal\t1.001667\n"
        )
        doc = json.loads(render_asympt(3, 1000, 6, "json").payload)
        assert doc == {
            "n": 3,
            "m": 1000,
            "digits": 6,
            "exact": "1502501",
            "leading": "1500000",
            "ratio": "1502501/1500000",
            "ratio_decimal": "1.001667",
        }

    def test_every_payload_is_newline_terminated(self):
        docs = [
            render_table(4, 3, fmt) for fmt in FORMATS
        ] + [
            render_value(4, 2, "auto", fmt) for fmt in FORMATS
        ] + [
            render_poly(4, fmt) for fmt in FORMATS
        ] + [
            render_asympt(4, 9, 3, fmt) for fmt in FORMATS
        ]
        for doc in docs:
            assert doc.payload.endswith("\n")
            assert not doc.payload.endswith("\n\n")
            assert "\r" not in doc.payload
