"""
Exact Arithmetic Module

Canonical rationals, Gaussian rationals and the wedge predicate.
"""

from .rational import BigRational, rat_normalize, parse_real, format_rational
from .gaussian import GaussianRational, gauss_div, I
from .wedge import WedgeSpec, wedge_member, DEFAULT_WEDGE_SLOPE
from .scalars import (
    Scalar,
    ScalarKind,
    parse_scalar,
    format_scalar,
    coerce_scalar,
    scalar_sort_key,
    divide,
)

__all__ = [
    'BigRational',
    'rat_normalize',
    'parse_real',
    'format_rational',
    'GaussianRational',
    'gauss_div',
    'I',
    'WedgeSpec',
    'wedge_member',
    'DEFAULT_WEDGE_SLOPE',
    'Scalar',
    'ScalarKind',
    'parse_scalar',
    'format_scalar',
    'coerce_scalar',
    'scalar_sort_key',
    'divide',
]
