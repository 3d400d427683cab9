"""
Sector pigeonholing

The punctured plane is split into half-open sectors bounded by rays with
integer direction vectors, so membership is decided by exact cross-product
signs. The heaviest sector is kept and divided by one of its own elements,
which moves it next to the positive real axis without leaving the Gaussian
rationals.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from src.arith.gaussian import GaussianRational
from src.arith.scalars import ScalarKind, Scalar
from src.arith.wedge import WedgeSpec
from src.sets.scalar_set import ScalarSet


logger = logging.getLogger(__name__)

DEFAULT_SECTOR_COUNT = 8
_OCTANT_RAYS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))

Ray = Tuple[int, int]


def boundary_rays(sector_count: int) -> Tuple[Ray, ...]:
    """
    Counter-clockwise boundary directions, the first along the positive real axis

    Eight sectors use the octant rays of slope 0, 1, ∞, -1; other counts use
    rounded integer directions of the equally spaced angles.

    Raises:
        ValueError: If sector_count < 5 (sectors must be narrower than a right angle)
    """
    if sector_count < 5:
        raise ValueError(f"sector count must be at least 5, got {sector_count}")
    if sector_count == 8:
        return _OCTANT_RAYS
    scale = 10 ** 6
    rays = []
    for j in range(sector_count):
        theta = 2 * math.pi * j / sector_count
        dx, dy = round(math.cos(theta) * scale), round(math.sin(theta) * scale)
        g = math.gcd(dx, dy)
        rays.append((dx // g, dy // g))
    return tuple(rays)


def _cross(ray: Ray, z: GaussianRational) -> Fraction:
    return ray[0] * z.im - ray[1] * z.re


def sector_index(z: GaussianRational, rays: Tuple[Ray, ...]) -> int:
    """Index j with z in [ray_j, ray_{j+1}) (z nonzero)"""
    n = len(rays)
    for j in range(n):
        if _cross(rays[j], z) >= 0 and _cross(rays[(j + 1) % n], z) < 0:
            return j
    raise ValueError(f"{z} lies in no sector")


def sector_wedge(rays: Tuple[Ray, ...]) -> WedgeSpec:
    """
    Wedge holding every quotient of two elements of one sector

    Two arguments in the same half-open sector differ by less than its width,
    so the tangent of the widest sector bounds every such quotient.
    """
    n = len(rays)
    widest = Fraction(0)
    for j in range(n):
        u, v = rays[j], rays[(j + 1) % n]
        cross = u[0] * v[1] - u[1] * v[0]
        dot = u[0] * v[0] + u[1] * v[1]
        widest = max(widest, Fraction(cross, dot))
    return WedgeSpec(widest)


@dataclass(frozen=True)
class SectorPartition:
    """
    Attributes:
        sector_count: Number of sectors
        rays: Boundary directions
        per_sector_counts: Elements per sector
        per_sector_weights: Weight per sector
        chosen_index: Heaviest sector (lowest index on ties)
        normalizer: Smallest-modulus element of the chosen sector (ties by (re, im))
        wedge: Wedge containing every normalized element
    """
    sector_count: int
    rays: Tuple[Ray, ...]
    per_sector_counts: Tuple[int, ...]
    per_sector_weights: Tuple[Fraction, ...]
    chosen_index: int
    normalizer: GaussianRational
    wedge: WedgeSpec


@dataclass(frozen=True)
class SectorSelection:
    """
    Attributes:
        partition: Sector data
        members: Elements of the chosen sector, original coordinates
        normalized: members divided by the normalizer
        zero_removed: Whether 0 was deleted from the input
    """
    partition: SectorPartition
    members: ScalarSet
    normalized: ScalarSet
    zero_removed: bool


def sector_select(
    x: ScalarSet,
    weights: Optional[Mapping[Scalar, int]] = None,
    sector_count: int = DEFAULT_SECTOR_COUNT,
) -> SectorSelection:
    """
    Keep the heaviest sector of x and normalize it toward the real axis

    Args:
        x: Set (reals are lifted); 0 is deleted
        weights: Per-element weights, default 1 (missing elements weigh 0)
        sector_count: Number of sectors (>= 5)

    Raises:
        ValueError: If x has no nonzero element
    """
    lifted = x.as_complex()
    nonzero = lifted.without_zero()
    zero_removed = len(nonzero) < len(lifted)
    if zero_removed:
        logger.info("Deleted 0 before sector selection")
    if not nonzero:
        raise ValueError("sector selection needs a nonzero element")

    rays = boundary_rays(sector_count)
    buckets: Dict[int, list] = {j: [] for j in range(sector_count)}
    for z in nonzero:
        buckets[sector_index(z, rays)].append(z)

    def weight_of(z: GaussianRational) -> Fraction:
        if weights is None:
            return Fraction(1)
        return Fraction(weights.get(z, 0))

    sector_weights = tuple(sum((weight_of(z) for z in buckets[j]), Fraction(0)) for j in range(sector_count))
    occupied = [j for j in range(sector_count) if buckets[j]]
    chosen = max(occupied, key=lambda j: (sector_weights[j], -j))
    members = buckets[chosen]
    normalizer = min(members, key=lambda z: (z.norm2(), z.re, z.im))
    normalized = ScalarSet.from_members((z / normalizer for z in members), ScalarKind.COMPLEX)

    partition = SectorPartition(
        sector_count=sector_count,
        rays=rays,
        per_sector_counts=tuple(len(buckets[j]) for j in range(sector_count)),
        per_sector_weights=sector_weights,
        chosen_index=chosen,
        normalizer=normalizer,
        wedge=sector_wedge(rays),
    )
    logger.debug(
        f"Sector {chosen} kept {len(members)}/{len(nonzero)} elements, normalizer {normalizer}"
    )
    return SectorSelection(
        partition,
        ScalarSet.from_members(members, ScalarKind.COMPLEX),
        normalized,
        zero_removed,
    )
