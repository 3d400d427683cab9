"""
Scalar grammar and kind-aware helpers

A scalar is either a real (``Fraction``) or a ``GaussianRational``. Text form:

    real    = INT | INT/POSINT | decimal
    complex = (REAL,REAL)        re, im

Example:
    parse_scalar("(1/2, -3)")   # GaussianRational(1/2, -3)
    parse_scalar(" 7 ")         # Fraction(7, 1)
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Union

from src.arith.gaussian import GaussianRational, gauss_div
from src.arith.rational import format_rational, parse_real

Scalar = Union[Fraction, GaussianRational]


class ScalarKind(Enum):
    """Kind of a scalar set"""
    REAL = "real"
    COMPLEX = "complex"


def parse_scalar(text: str) -> Scalar:
    """
    Parse a real or complex literal

    Raises:
        ValueError: On malformed input
    """
    compact = "".join(text.split())
    if compact.startswith("(") and compact.endswith(")"):
        parts = compact[1:-1].split(",")
        if len(parts) != 2:
            raise ValueError(f"complex literal needs exactly two components: {text!r}")
        return GaussianRational(parse_real(parts[0]), parse_real(parts[1]))
    return parse_real(compact)


def format_scalar(value: Scalar) -> str:
    if isinstance(value, GaussianRational):
        return str(value)
    return format_rational(value)


def kind_of(value: Scalar) -> ScalarKind:
    return ScalarKind.COMPLEX if isinstance(value, GaussianRational) else ScalarKind.REAL


def coerce_scalar(value: Any) -> Scalar:
    """Accept ints, Fractions, Gaussian rationals or literal strings"""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact scalars; pass a string or Fraction")
    return Fraction(value)


def scalar_sort_key(value: Scalar):
    if isinstance(value, GaussianRational):
        return value.sort_key()
    return value


def is_zero(value: Scalar) -> bool:
    if isinstance(value, GaussianRational):
        return value.is_zero()
    return value == 0


def divide(numerator: Scalar, denominator: Scalar) -> Scalar:
    """Exact quotient for either kind (ZeroDivisionError on a zero denominator)"""
    if isinstance(denominator, GaussianRational) or isinstance(numerator, GaussianRational):
        return gauss_div(GaussianRational.of(numerator), GaussianRational.of(denominator))
    if denominator == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(numerator) / Fraction(denominator)
