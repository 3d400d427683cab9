"""
Angular wedge about the positive real axis

An open sector |arg z| < θ is carried by its tangent, a positive rational
slope bound, so membership is a pair of exact comparisons.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.arith.gaussian import GaussianRational

DEFAULT_WEDGE_SLOPE = Fraction(1, 8)


@dataclass(frozen=True)
class WedgeSpec:
    """
    Symmetric open wedge {z : re z > 0, |im z| < slope_bound · re z}

    Attributes:
        slope_bound: tan of the half-opening angle; strictly positive
    """
    slope_bound: Fraction = DEFAULT_WEDGE_SLOPE

    def __post_init__(self):
        bound = Fraction(self.slope_bound)
        if bound <= 0:
            raise ValueError(f"wedge slope bound must be positive, got {bound}")
        object.__setattr__(self, "slope_bound", bound)


def wedge_member(z: Union[GaussianRational, Fraction, int], wedge: WedgeSpec) -> bool:
    """True iff z lies in the open wedge"""
    z = GaussianRational.of(z)
    if z.re <= 0:
        return False
    return abs(z.im) < wedge.slope_bound * z.re
