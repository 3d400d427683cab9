"""
Complex ratio-set constructions

Two exact pipelines over Gaussian rationals that share the same skeleton:
pigeonhole into one angular sector, take the ratio points, join them with a
Euclidean minimum spanning tree and build sums along every tree edge.

* thm6_witnesses: distinct elements of (A+A)/(A+A), max(r(l), r(m)) per edge.
* lemma7_construct: the sets S_ij inside (AC+AC) × (BC+BC), one per edge,
  each of size |C'|² and pairwise disjoint.

Example:
    from src.sets import ScalarSet
    from src.geometry.complex_ratio import thm6_witnesses

    report = thm6_witnesses(ScalarSet(["(1,1)", "(2,2)"]))
    report.distinct_count, report.target_bound
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.arith.gaussian import GaussianRational
from src.arith.scalars import format_scalar
from src.arith.wedge import DEFAULT_WEDGE_SLOPE, WedgeSpec
from src.geometry.mobius import MobiusRegion, region_member
from src.geometry.mst import MstEdges, euclidean_mst
from src.geometry.sectors import DEFAULT_SECTOR_COUNT, SectorSelection, sector_select
from src.geometry.witness import Witness, WitnessReport
from src.sets.scalar_set import (
    DEFAULT_SIZE_CAP,
    ScalarSet,
    SetOp,
    pairwise,
    ratio_profile,
    representations,
)
from src.utils.errors import InvariantViolation, SizeCapExceeded
from src.utils.reporting import VerificationReport, set_input, stopwatch


logger = logging.getLogger(__name__)

Pair = Tuple[GaussianRational, GaussianRational]


@dataclass
class RatioSkeleton:
    """
    Sector selection plus the spanning tree over its ratio points

    Attributes:
        selection: Chosen sector of A (normalized members in selection.normalized)
        groups: ratio -> representations (a, b) with b / a = ratio, a, b in A'
        mst: Spanning tree over the ratio points, None for a single point
    """
    selection: SectorSelection
    groups: Dict[GaussianRational, List[Pair]]
    mst: Optional[MstEdges]

    @property
    def points(self) -> List[GaussianRational]:
        return list(self.groups)


def _default_wedge(wedge: Optional[WedgeSpec]) -> WedgeSpec:
    return wedge if wedge is not None else WedgeSpec(DEFAULT_WEDGE_SLOPE)


def ratio_skeleton(
    a: ScalarSet,
    sector_count: int = DEFAULT_SECTOR_COUNT,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> RatioSkeleton:
    """
    Sector-select A, group A'/A' by ratio and span the ratio points

    Raises:
        ValueError: If A has no nonzero element
        SizeCapExceeded: If |A'|² exceeds size_cap
    """
    selection = sector_select(a, sector_count=sector_count)
    normalized = selection.normalized
    projected = len(normalized) ** 2
    if projected > size_cap:
        raise SizeCapExceeded(projected, size_cap, "ratio representations")
    groups, _ = representations(normalized, normalized)
    points = list(groups)
    mst = euclidean_mst(points) if len(points) > 1 else None
    return RatioSkeleton(selection, groups, mst)


def thm6_witnesses(
    a: ScalarSet,
    wedge: Optional[WedgeSpec] = None,
    sector_count: int = DEFAULT_SECTOR_COUNT,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> WitnessReport:
    """
    Distinct elements of (A+A)/(A+A) from sums along spanning-tree edges

    For an edge (l, m) one representation of the point with fewer
    representations is fixed and every representation of the other point is
    added to it, so each edge yields max(r(l), r(m)) ratios. Ties vary the
    lexicographically smaller point.

    Args:
        a: Finite set (reals are lifted, 0 is deleted)
        wedge: Wedge used for the advisory region-membership count
        sector_count: Number of pigeonhole sectors
        size_cap: Enumeration limit

    Returns:
        WitnessReport; cross-edge collisions are listed in ``violations``

    Raises:
        ValueError: If A has no nonzero element
        InvariantViolation: On a within-edge collision or a witness outside (A+A)/(A+A)
    """
    wedge = _default_wedge(wedge)
    lifted = a.as_complex()
    skeleton = ratio_skeleton(lifted, sector_count, size_cap)
    selection = skeleton.selection
    normalizer = selection.partition.normalizer
    sumset = pairwise(lifted, lifted, SetOp.ADD, size_cap).result
    mass = len(selection.normalized) ** 2
    target = (mass + 1) // 2

    def checked(ratio: GaussianRational, tag: str, p: Pair, q: Pair) -> Witness:
        first = (p[0] + q[0]) * normalizer
        second = (p[1] + q[1]) * normalizer
        if first not in sumset or second not in sumset:
            raise InvariantViolation(
                "witness is not a quotient of sumset elements",
                {"provenance": tag, "ratio": format_scalar(ratio)},
            )
        return Witness(ratio, tag, (first, second))

    constants = {
        "sector": selection.partition.chosen_index,
        "normalizer": normalizer,
        "sector_size": len(selection.normalized),
        "spanned_mass": mass,
    }

    if skeleton.mst is None:
        only = skeleton.points[0]
        p = skeleton.groups[only][0]
        witness = checked((p[1] + p[1]) / (p[0] + p[0]), "vertex:0", p, p)
        constants.update({"edges": 0, "per_edge_total": 1, "c1": Fraction(1, len(lifted) ** 2)})
        return WitnessReport.build([witness], 1, constants, ["degenerate: single ratio point"])

    mst = skeleton.mst
    witnesses: List[Witness] = []
    owner: Dict[GaussianRational, Tuple[int, int]] = {}
    violations = []
    per_edge_total = 0
    region_misses = 0

    for i, j in mst.edges:
        l, m = mst.vertices[i], mst.vertices[j]
        rl, rm = len(skeleton.groups[l]), len(skeleton.groups[m])
        if rl > rm or (rl == rm and l.sort_key() < m.sort_key()):
            vary, fixed = l, m
        else:
            vary, fixed = m, l
        p = skeleton.groups[fixed][0]
        region = MobiusRegion(fixed, vary, wedge)
        edge_ratios: Dict[GaussianRational, int] = {}
        per_edge_total += len(skeleton.groups[vary])

        for index, q in enumerate(skeleton.groups[vary], start=1):
            ratio = (p[1] + q[1]) / (p[0] + q[0])
            if ratio in edge_ratios:
                raise InvariantViolation(
                    "within-edge witness collision",
                    {"edge": [i, j], "ratio": format_scalar(ratio), "indices": [edge_ratios[ratio], index]},
                )
            edge_ratios[ratio] = index
            if not region_member(ratio, region):
                region_misses += 1
            tag = f"edge:{i}-{j}:{index}"
            if ratio in owner:
                violations.append({
                    "kind": "disjointness violation",
                    "witness": format_scalar(ratio),
                    "edges": [list(owner[ratio]), [i, j]],
                })
                continue
            owner[ratio] = (i, j)
            witnesses.append(checked(ratio, tag, p, q))

    constants.update({
        "edges": len(mst.edges),
        "per_edge_total": per_edge_total,
        "region_misses": region_misses,
        "c1": Fraction(len(witnesses), len(lifted) ** 2),
        "spanned_fraction": Fraction(len(witnesses), mass),
    })
    report = WitnessReport.build(witnesses, target, constants)
    report.violations = violations
    report.passed = report.passed and not violations and len(witnesses) == per_edge_total
    if violations:
        logger.warning(f"{len(violations)} cross-edge witness collision(s) with wedge {wedge.slope_bound}")
    if region_misses:
        report.notes.append(f"{region_misses} witness(es) outside their edge region for the configured wedge")
    logger.debug(
        f"Complex witnesses: {len(witnesses)} over {len(mst.edges)} edges, target {target}"
    )
    return report


def lemma7_construct(
    a: ScalarSet,
    b: ScalarSet,
    c: ScalarSet,
    wedge: Optional[WedgeSpec] = None,
    sector_count: int = DEFAULT_SECTOR_COUNT,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> VerificationReport:
    """
    Disjoint sum sets S_ij witnessing |AC+AC|·|BC+BC| >= (|P'|-1)·|C'|²

    P holds one pair (a, b) per element of B/A; A' is the sector of A with the
    largest total weight w(a) = #{b : (a, b) in P}; P' keeps the pairs with
    a in A'; C' is the heaviest sector of C. Every spanning-tree edge (l_i, l_j)
    over the ratios of P' gives S_ij = {(a_i c1 + a_j c2, b_i c1 + b_j c2)}.

    Raises:
        ValueError: If A, B or C has no nonzero element
        InvariantViolation: On a repeated sum inside S_ij, two intersecting S_ij,
            or a sum outside (AC+AC) × (BC+BC)
    """
    wedge = _default_wedge(wedge)
    with stopwatch() as timing:
        a_c = a.as_complex().without_zero()
        b_c = b.as_complex().without_zero()
        c_c = c.as_complex()
        if not a_c or not b_c:
            raise ValueError("A and B need a nonzero element")

        profile = ratio_profile(a_c, b_c)
        pairs = [(ratio, rep[0], rep[1]) for ratio, rep in profile.representatives.items()]
        weights = Counter(first for _, first, _ in pairs)
        a_selection = sector_select(a_c, weights, sector_count)
        kept = a_selection.members
        p_prime = [entry for entry in pairs if entry[1] in kept]
        if len(p_prime) * sector_count < len(pairs):
            raise InvariantViolation(
                "sector weight below the pigeonhole guarantee",
                {"kept": len(p_prime), "total": len(pairs), "sectors": sector_count},
            )
        c_prime = list(sector_select(c_c, sector_count=sector_count).members)

        ac = pairwise(a_c, c_c, SetOp.MUL, size_cap).result
        bc = pairwise(b_c, c_c, SetOp.MUL, size_cap).result
        acac = pairwise(ac, ac, SetOp.ADD, size_cap).result
        bcbc = pairwise(bc, bc, SetOp.ADD, size_cap).result

        edges: Tuple[Tuple[int, int], ...] = ()
        if len(p_prime) > 1:
            edges = euclidean_mst([ratio for ratio, _, _ in p_prime]).edges

        owner: Dict[Pair, Tuple[int, int]] = {}
        region_misses = 0
        for i, j in edges:
            l_i, a_i, b_i = p_prime[i]
            l_j, a_j, b_j = p_prime[j]
            region = MobiusRegion(l_i, l_j, wedge)
            s_ij: Dict[Pair, Tuple[GaussianRational, GaussianRational]] = {}
            for c1 in c_prime:
                for c2 in c_prime:
                    point = (a_i * c1 + a_j * c2, b_i * c1 + b_j * c2)
                    if point in s_ij:
                        raise InvariantViolation(
                            "repeated sum inside S_ij",
                            {
                                "edge": [i, j],
                                "quadruple": [format_scalar(v) for v in (*s_ij[point], c1, c2)],
                            },
                        )
                    if point in owner:
                        raise InvariantViolation(
                            "S_ij sets of distinct edges intersect",
                            {
                                "edges": [list(owner[point]), [i, j]],
                                "point": [format_scalar(v) for v in point],
                            },
                        )
                    if point[0] not in acac or point[1] not in bcbc:
                        raise InvariantViolation(
                            "sum outside (AC+AC) x (BC+BC)",
                            {"edge": [i, j], "point": [format_scalar(v) for v in point]},
                        )
                    s_ij[point] = (c1, c2)
                    if point[0].is_zero() or not region_member(point[1] / point[0], region):
                        region_misses += 1
            for point in s_ij:
                owner[point] = (i, j)

        lhs = len(acac) * len(bcbc)
        rhs = len(edges) * len(c_prime) ** 2
        reference = len(pairs) * len(c) ** 2

    constants = {
        "ratio_set_size": len(pairs),
        "p_prime_size": len(p_prime),
        "c_prime_size": len(c_prime),
        "edges": len(edges),
        "s_total": len(owner),
        "acac_size": len(acac),
        "bcbc_size": len(bcbc),
        "reference": reference,
        "ratio_to_reference": Fraction(lhs, reference),
        "region_misses": region_misses,
    }
    notes = []
    if region_misses:
        notes.append(f"{region_misses} ratio(s) outside their edge region for the configured wedge")
    return VerificationReport(
        task="lemma7",
        input={
            **set_input(A=a, B=b, C=c),
            "wedge_slope": wedge.slope_bound,
            "sectors": sector_count,
        },
        bound=str(rhs),
        measured=str(lhs),
        passed=lhs >= rhs,
        constants=constants,
        elapsed_ms=timing["ms"],
        notes=notes,
    )
