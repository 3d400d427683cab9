"""
Directions determined by a planar point set

Slopes of q - p over pairs of distinct points; the vertical direction is
counted once when some pair shares its first coordinate.
"""

from fractions import Fraction
from typing import Iterable, Optional, Set

from src.geometry.slope_cover import GridPoint

VERTICAL = None


def direction_set(points: Iterable[GridPoint]) -> Set[Optional[Fraction]]:
    """
    Distinct directions; ``None`` stands for vertical

    Raises:
        ValueError: With fewer than two distinct points
    """
    distinct = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(distinct) < 2:
        raise ValueError("direction count needs at least two distinct points")
    directions: Set[Optional[Fraction]] = set()
    for i, p in enumerate(distinct):
        for q in distinct[i + 1:]:
            dx = q.x - p.x
            directions.add(VERTICAL if dx == 0 else (q.y - p.y) / dx)
    return directions


def direction_count(points: Iterable[GridPoint]) -> int:
    return len(direction_set(points))
