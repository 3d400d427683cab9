"""
Geometry Module

Slope covers and witness chains over the positive quadrant, directions,
sector pigeonholing, Euclidean spanning trees, Möbius wedge regions and the
complex ratio-set constructions built from them.
"""

from .witness import Witness, WitnessReport, format_witness_dump, write_witness_dump
from .slope_cover import (
    GridPoint,
    SlopeLine,
    SlopeCover,
    build_grid,
    slope_cover,
    cover_witnesses,
    thm1_witnesses,
    thm2_witnesses,
    slope_set,
    sum_points,
)
from .directions import direction_set, direction_count
from .sectors import (
    DEFAULT_SECTOR_COUNT,
    SectorPartition,
    SectorSelection,
    boundary_rays,
    sector_index,
    sector_select,
)
from .mst import MstEdges, euclidean_mst, format_mst_dump, write_mst_dump
from .mobius import MobiusRegion, region_member
from .region_probe import ProbeReport, region_disjointness_probe
from .complex_ratio import RatioSkeleton, ratio_skeleton, thm6_witnesses, lemma7_construct

__all__ = [
    'Witness',
    'WitnessReport',
    'format_witness_dump',
    'write_witness_dump',
    'GridPoint',
    'SlopeLine',
    'SlopeCover',
    'build_grid',
    'slope_cover',
    'cover_witnesses',
    'thm1_witnesses',
    'thm2_witnesses',
    'slope_set',
    'sum_points',
    'direction_set',
    'direction_count',
    'DEFAULT_SECTOR_COUNT',
    'SectorPartition',
    'SectorSelection',
    'boundary_rays',
    'sector_index',
    'sector_select',
    'MstEdges',
    'euclidean_mst',
    'format_mst_dump',
    'write_mst_dump',
    'MobiusRegion',
    'region_member',
    'ProbeReport',
    'region_disjointness_probe',
    'RatioSkeleton',
    'ratio_skeleton',
    'thm6_witnesses',
    'lemma7_construct',
]
