"""
Exact Rationals

BigRational is Python's ``fractions.Fraction``: arbitrary-precision numerator
and denominator, always stored reduced with a positive denominator, hashing
consistent with mathematical equality. This module adds the normalisation
entry point and the text grammar used by set files and the expression language.

Example:
    from src.arith.rational import parse_real, rat_normalize

    rat_normalize(6, -4)     # Fraction(-3, 2)
    parse_real("0.25")       # Fraction(1, 4)
"""

import re
from fractions import Fraction

BigRational = Fraction

_INT_OR_RATIO = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_DECIMAL = re.compile(r"^[+-]?(?:\d+\.\d*|\.\d+)$")


def rat_normalize(num: int, den: int) -> Fraction:
    """
    Build the canonical reduced rational num/den

    Raises:
        ZeroDivisionError: If den is zero
    """
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def parse_real(text: str) -> Fraction:
    """
    Parse ``INT``, ``INT/POSINT`` or a decimal literal exactly

    Whitespace anywhere in the literal is ignored. Decimals never pass through
    a float: "0.1" becomes 1/10.

    Args:
        text: Literal text

    Returns:
        Canonical rational

    Raises:
        ValueError: If the text is not a real literal
        ZeroDivisionError: For a zero denominator
    """
    compact = "".join(text.split())
    match = _INT_OR_RATIO.match(compact)
    if match:
        num = int(match.group(1))
        den = int(match.group(2)) if match.group(2) is not None else 1
        return rat_normalize(num, den)
    if _DECIMAL.match(compact):
        return Fraction(compact)
    raise ValueError(f"not a real literal: {text!r}")


def format_rational(value: Fraction) -> str:
    """Canonical fraction string: "p/q", or "p" when the denominator is 1"""
    return str(Fraction(value))
