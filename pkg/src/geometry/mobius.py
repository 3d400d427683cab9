"""
Möbius wedge regions

For distinct ratio points l_i, l_j the region M(l_i, l_j) is the image of the
wedge W under u -> l_i + (l_j - l_i) · u / (1 + u). It contains the open
segment (l_i, l_j) and is symmetric about it. Membership inverts the map
exactly: m = (w - l_i) / (l_j - l_i), u = m / (1 - m).
"""

from dataclasses import dataclass

from src.arith.gaussian import GaussianRational
from src.arith.wedge import WedgeSpec, wedge_member


@dataclass(frozen=True)
class MobiusRegion:
    """
    Attributes:
        l_i: Anchor endpoint (image of u = 0)
        l_j: Far endpoint (image of u = ∞)
        wedge: Wedge whose image forms the region
    """
    l_i: GaussianRational
    l_j: GaussianRational
    wedge: WedgeSpec

    def __post_init__(self):
        object.__setattr__(self, "l_i", GaussianRational.of(self.l_i))
        object.__setattr__(self, "l_j", GaussianRational.of(self.l_j))
        if self.l_i == self.l_j:
            raise ValueError("region endpoints must differ")

    def point_at(self, u: GaussianRational) -> GaussianRational:
        """l_i + (l_j - l_i) · u / (1 + u)"""
        u = GaussianRational.of(u)
        return self.l_i + (self.l_j - self.l_i) * (u / (u + 1))


def region_member(point: GaussianRational, region: MobiusRegion) -> bool:
    """True iff point lies in the open region (endpoints excluded)"""
    m = (GaussianRational.of(point) - region.l_i) / (region.l_j - region.l_i)
    one = GaussianRational(1)
    if m == one:
        return False
    return wedge_member(m / (one - m), region.wedge)
