"""Exact text rendering for the CLI: tables, values, polynomials, ratios.

No value ever passes through binary floating point; every digit comes
from integer arithmetic. Rendering is byte-stable: the same inputs
produce the same bytes, lines end with a single newline, and JSON
carries big integers and rationals as strings so no consumer truncates
them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .bell_numbers import bell_via_egf, bell_via_recursion
from .polynomial import (
    ConsistencyError,
    asymptotic_report,
    construct_bell_polynomial,
    leading_coefficient,
)
from .rational_poly import RationalPolynomial

FORMATS = ("tsv", "json", "markdown")
METHODS = ("egf", "recursion", "poly", "auto")

# method=auto switches to the polynomial route past this m
AUTO_POLY_THRESHOLD = 1000


@dataclass(frozen=True)
class OutputDocument:
    """A rendered payload plus the format it was rendered in."""

    format: str
    payload: str


def fraction_str(value: Fraction) -> str:
    """"p/q", or just "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_expansion(value: Fraction, digits: int) -> str:
    """Decimal string with exactly `digits` places, by exact long division.

    The final digit is rounded half to even; everything before it is
    exact.
    """
    if digits < 0:
        raise ValueError("digits must be non-negative")
    num, den = value.numerator, value.denominator
    sign = "-" if num < 0 else ""
    scaled, rem = divmod(abs(num) * 10 ** digits, den)
    if 2 * rem > den or (2 * rem == den and scaled % 2 == 1):
        scaled += 1
    text = str(scaled).rjust(digits + 1, "0")
    if digits == 0:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def polynomial_str(p: RationalPolynomial, var: str = "m") -> str:
    """Readable form like "(3/2)m^2 + (5/2)m + 1", highest power first."""
    if p.is_zero():
        return "0"
    pieces = []
    for j in range(p.degree, -1, -1):
        c = p.coefficient(j)
        if c == 0:
            continue
        mag = abs(c)
        if j == 0:
            body = fraction_str(mag)
        else:
            var_part = var if j == 1 else f"{var}^{j}"
            if mag == 1:
                body = var_part
            elif mag.denominator == 1:
                body = f"{mag.numerator}{var_part}"
            else:
                body = f"({fraction_str(mag)}){var_part}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def _markdown_table(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |"]
    lines.append("| " + " | ".join("---" for _ in header) + " |")
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def compute_value(n: int, m: int, method: str = "auto") -> tuple[int, str]:
    """B(n, m) by the requested route; returns (value, resolved method)."""
    if method == "auto":
        method = "poly" if m > AUTO_POLY_THRESHOLD else "recursion"
    if method == "egf":
        return bell_via_egf(n, m), method
    if method == "recursion":
        return bell_via_recursion(n, m), method
    if method == "poly":
        value = construct_bell_polynomial(n).poly.evaluate(m)
        if value.denominator != 1:
            raise ConsistencyError(f"B({n}, {m}) evaluated to non-integer {value}")
        return value.numerator, method
    raise ValueError(f"unknown method: {method}")


def render_table(n_max: int, m_max: int, fmt: str) -> OutputDocument:
    """The grid of B(n, m) for 1 <= n <= n_max, 1 <= m <= m_max."""
    if n_max < 1 or m_max < 1:
        raise ValueError("table bounds must be at least 1")
    grid = [
        (m, [bell_via_recursion(n, m) for n in range(1, n_max + 1)])
        for m in range(1, m_max + 1)
    ]
    header = ["m"] + [f"n={n}" for n in range(1, n_max + 1)]
    if fmt == "tsv":
        lines = ["\t".join(header)]
        for m, values in grid:
            lines.append("\t".join([str(m)] + [str(v) for v in values]))
        payload = "\n".join(lines) + "\n"
    elif fmt == "json":
        doc = {
            "n_max": n_max,
            "m_max": m_max,
            "rows": [
                {"m": m, "values": [str(v) for v in values]} for m, values in grid
            ],
        }
        payload = json.dumps(doc) + "\n"
    elif fmt == "markdown":
        rows = [[str(m)] + [str(v) for v in values] for m, values in grid]
        payload = _markdown_table(header, rows)
    else:
        raise ValueError(f"unknown format: {fmt}")
    return OutputDocument(fmt, payload)


def render_value(n: int, m: int, method: str, fmt: str) -> OutputDocument:
    """A single B(n, m) as a decimal string."""
    value, resolved = compute_value(n, m, method)
    if fmt == "tsv":
        payload = f"{value}\n"
    elif fmt == "json":
        doc = {"n": n, "m": m, "method": resolved, "value": str(value)}
        payload = json.dumps(doc) + "\n"
    elif fmt == "markdown":
        payload = _markdown_table(
            ["n", "m", "method", "value"], [[str(n), str(m), resolved, str(value)]]
        )
    else:
        raise ValueError(f"unknown format: {fmt}")
    return OutputDocument(fmt, payload)


def render_poly(n: int, fmt: str) -> OutputDocument:
    """Coefficients c_0..c_{n-1} of the Bell polynomial, exact.

    Also reports the expected leading value n!/2**(n-1) and whether the
    constructed top coefficient matches it. For the degenerate n = 0
    extension both values are the constant polynomial's coefficient 1.
    """
    bp = construct_bell_polynomial(n)
    count = n if n >= 1 else 1
    coeffs = [bp.poly.coefficient(j) for j in range(count)]
    expected_leading = leading_coefficient(n) if n >= 1 else Fraction(1)
    match = bp.poly.leading_coefficient() == expected_leading
    coeff_strs = [fraction_str(c) for c in coeffs]
    leading_str = fraction_str(expected_leading)
    if fmt == "json":
        doc = {
            "n": n,
            "coefficients": coeff_strs,
            "leading_theorem": leading_str,
            "match": match,
        }
        payload = json.dumps(doc) + "\n"
    elif fmt == "tsv":
        lines = [f"n\t{n}"]
        for j, c in enumerate(coeff_strs):
            lines.append(f"c_{j}\t{c}")
        lines.append(f"leading_theorem\t{leading_str}")
        lines.append(f"match\t{'true' if match else 'false'}")
        payload = "\n".join(lines) + "\n"
    elif fmt == "markdown":
        rows = [[f"c_{j}", c] for j, c in enumerate(coeff_strs)]
        rows.append(["leading (n!/2^(n-1))", leading_str])
        rows.append(["match", "true" if match else "false"])
        table = _markdown_table(["coefficient", "value"], rows)
        payload = f"B_{n}(m) = {polynomial_str(bp.poly)}\n\n" + table
    else:
        raise ValueError(f"unknown format: {fmt}")
    return OutputDocument(fmt, payload)


def render_asympt(n: int, m: int, digits: int, fmt: str) -> OutputDocument:
    """Exact value, leading term and their ratio (exact plus decimal)."""
    report = asymptotic_report(n, m)
    fields = [
        ("n", str(n)),
        ("m", str(m)),
        ("exact", str(report.exact)),
        ("leading", fraction_str(report.leading)),
        ("ratio", fraction_str(report.ratio)),
        ("ratio_decimal", decimal_expansion(report.ratio, digits)),
    ]
    if fmt == "tsv":
        payload = "\n".join(f"{k}\t{v}" for k, v in fields) + "\n"
    elif fmt == "json":
        doc = {"n": n, "m": m, "digits": digits}
        doc.update((k, v) for k, v in fields if k not in ("n", "m"))
        payload = json.dumps(doc) + "\n"
    elif fmt == "markdown":
        payload = _markdown_table(["field", "value"], [[k, v] for k, v in fields])
    else:
        raise ValueError(f"unknown format: {fmt}")
    return OutputDocument(fmt, payload)
