"""
Slope Cover

The planar construction behind the ratio-set bounds over the positive reals.
P = A × A is covered by lines through the origin, ordered by slope; vector
sums of points taken from neighbouring lines produce ratios that fall
strictly between the two slopes and are strictly monotone along a chain, so
each neighbouring pair of lines contributes n_i + n_{i+1} - 1 new ratios.
Each slope is itself realised by a doubled point p + p.

Example:
    from src.sets import ScalarSet
    from src.geometry.slope_cover import thm1_witnesses

    report = thm1_witnesses(ScalarSet([1, 2, 3]))
    report.distinct_count   # 17 == 2·3² - 1
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from src.geometry.witness import Witness, WitnessReport
from src.sets.scalar_set import ScalarSet
from src.utils.errors import InvariantViolation


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridPoint:
    """
    Exact planar point

    Attributes:
        x: First coordinate
        y: Second coordinate
    """
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: "GridPoint") -> "GridPoint":
        return GridPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "GridPoint") -> "GridPoint":
        return GridPoint(self.x - other.x, self.y - other.y)

    def slope(self) -> Fraction:
        """R(p) = y / x, the gradient of the line from the origin to p"""
        return self.y / self.x

    def norm2(self) -> Fraction:
        return self.x * self.x + self.y * self.y

    def in_open_quadrant(self) -> bool:
        return self.x > 0 and self.y > 0


@dataclass(frozen=True)
class SlopeLine:
    """
    One origin line of the cover

    Attributes:
        slope: m_i
        points: Points of P on the line, by increasing magnitude
    """
    slope: Fraction
    points: Tuple[GridPoint, ...]


@dataclass(frozen=True)
class SlopeCover:
    """
    Attributes:
        lines: Lines sorted by strictly increasing slope
        source_point_count: |P| (distinct points)
    """
    lines: Tuple[SlopeLine, ...]
    source_point_count: int

    @property
    def k(self) -> int:
        return len(self.lines)

    def counts(self) -> List[int]:
        """n_1, ..., n_k"""
        return [len(line.points) for line in self.lines]


def build_grid(a: ScalarSet) -> List[GridPoint]:
    """
    P = A × A as a list of points (row-major in canonical order)

    Raises:
        ValueError: If A is empty, complex, or has a nonpositive element
    """
    if not a:
        raise ValueError("Theorem 1 requires a nonempty set")
    if not a.is_positive_real():
        raise ValueError("Theorem 1 requires positive reals")
    return [GridPoint(x, y) for x in a for y in a]


def slope_cover(points: Iterable[GridPoint]) -> SlopeCover:
    """
    Cover points by origin lines, sorted by slope then by magnitude

    Duplicate points are merged first.

    Raises:
        ValueError: If a point is outside the open positive quadrant, or no points
    """
    distinct = set(points)
    if not distinct:
        raise ValueError("slope cover needs at least one point")
    by_slope: Dict[Fraction, List[GridPoint]] = {}
    for p in distinct:
        if not p.in_open_quadrant():
            raise ValueError(f"point ({p.x}, {p.y}) is not in the open positive quadrant")
        by_slope.setdefault(p.slope(), []).append(p)
    lines = tuple(
        SlopeLine(slope, tuple(sorted(by_slope[slope], key=GridPoint.norm2)))
        for slope in sorted(by_slope)
    )
    return SlopeCover(lines, len(distinct))


def _chain(cover: SlopeCover, i: int) -> List[Witness]:
    """
    Ratios of sums along lines i and i + 1 (0-based), in decreasing order

    p_i^(1) + q^(n), ..., p_i^(1) + q^(1), p_i^(2) + q^(1), ..., p_i^(n_i) + q^(1)
    """
    lower, upper = cover.lines[i], cover.lines[i + 1]
    p, q = lower.points, upper.points
    steps: List[Tuple[GridPoint, str, int]] = []
    for j in range(len(q) - 1, -1, -1):
        steps.append((p[0] + q[j], "q", j + 1))
    for j in range(1, len(p)):
        steps.append((p[j] + q[0], "p", j + 1))

    chain: List[Witness] = []
    previous = None
    for total, side, index in steps:
        ratio = total.slope()
        if not lower.slope < ratio < upper.slope:
            raise InvariantViolation(
                "chain ratio outside the open slope interval",
                {"line": i + 1, "ratio": str(ratio), "interval": [str(lower.slope), str(upper.slope)]},
            )
        if previous is not None and not ratio < previous:
            raise InvariantViolation(
                "chain ratios are not strictly decreasing",
                {"line": i + 1, "previous": str(previous), "ratio": str(ratio)},
            )
        previous = ratio
        chain.append(Witness(ratio, f"chain:{i + 1}:{side}:{index}", (total.x, total.y)))
    return chain


def cover_witnesses(cover: SlopeCover) -> List[Witness]:
    """Chains between all neighbouring lines, then one doubled point per line"""
    witnesses: List[Witness] = []
    for i in range(cover.k - 1):
        witnesses.extend(_chain(cover, i))
    for i, line in enumerate(cover.lines):
        doubled = line.points[0] + line.points[0]
        witnesses.append(Witness(line.slope, f"diagonal:{i + 1}", (doubled.x, doubled.y)))
    return witnesses


def thm1_witnesses(a: ScalarSet) -> WitnessReport:
    """
    Constructive 2|A|² - 1 distinct elements of (A+A)/(A+A)

    Every witness is checked to be a quotient of two elements of A + A.

    Raises:
        ValueError: If A is not a nonempty set of positive reals
        InvariantViolation: If the construction misbehaves
    """
    cover = slope_cover(build_grid(a))
    witnesses = cover_witnesses(cover)
    sumset = a + a
    for witness in witnesses:
        first, second = witness.source
        if first not in sumset or second not in sumset:
            raise InvariantViolation(
                "witness is not a quotient of sumset elements",
                {"provenance": witness.provenance, "ratio": str(witness.ratio)},
            )
    counts = cover.counts()
    logger.debug(f"Slope cover: k={cover.k}, n={counts}")
    return WitnessReport.build(
        witnesses,
        2 * len(a) ** 2 - 1,
        constants={"k": cover.k, "n_first": counts[0], "n_last": counts[-1]},
    )


def thm2_witnesses(points: Sequence[GridPoint]) -> WitnessReport:
    """
    Constructive |P| + 1 distinct slopes of P + P for a positive-quadrant set

    Raises:
        ValueError: Points off the open quadrant, or all on one origin line
    """
    cover = slope_cover(points)
    if cover.k < 2:
        raise ValueError("degenerate: single slope")
    witnesses = cover_witnesses(cover)
    counts = cover.counts()
    size = cover.source_point_count
    return WitnessReport.build(
        witnesses,
        size + 1,
        constants={
            "k": cover.k,
            "construction_count": 2 * size + 1 - counts[0] - counts[-1],
        },
    )


def slope_set(points: Iterable[GridPoint]) -> frozenset:
    """R(P) for points with nonzero first coordinate"""
    return frozenset(p.slope() for p in points)


def sum_points(points: Iterable[GridPoint]) -> frozenset:
    """P + P (all pairwise vector sums, including p + p)"""
    distinct = list(set(points))
    return frozenset(p + q for p in distinct for q in distinct)
