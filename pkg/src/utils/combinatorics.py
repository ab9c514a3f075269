"""Exact binomials and rational formatting shared by the calculators."""

from fractions import Fraction
from math import comb
from typing import Union

from ..errors import InvalidParametersError

Number = Union[int, Fraction]


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n (including negative n)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def exact_int(value: Number, what: str) -> int:
    """Return ``value`` as an int or raise InvalidParametersError if it is fractional."""
    value = Fraction(value)
    if value.denominator != 1:
        raise InvalidParametersError(f"{what}={value} is not an integer")
    return value.numerator


def format_fraction(value: Number) -> str:
    """Render an exact rational as ``p/q`` (integers as ``n/1``)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Inverse of :func:`format_fraction`; also accepts plain integers."""
    return Fraction(text.strip())


def display_decimal(value: Number, digits: int = 3) -> str:
    """Three-significant-digit decimal used only for display."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.{digits}g}"
