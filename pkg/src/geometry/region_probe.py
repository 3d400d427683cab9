"""
Region disjointness probe (advisory, floating point)

Samples the two boundary arcs of every MST edge region and tests the samples
against every other edge region. Any hit is reported with coordinates. The
result never feeds the exact pass/fail of a pipeline.
"""

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np

from src.arith.wedge import WedgeSpec
from src.geometry.mst import MstEdges


logger = logging.getLogger(__name__)

_TOLERANCE = 1e-12


def boundary_samples(l_i: complex, l_j: complex, slope: float, resolution: int) -> np.ndarray:
    """
    Points on both boundary arcs of M(l_i, l_j)

    The wedge rays u = r·e^{±iθ}, θ = atan(slope), are sampled at
    r = tan(φ) for φ evenly spaced in (0, π/2), then pushed through the map.
    """
    phi = np.linspace(0.0, math.pi / 2, resolution + 2)[1:-1]
    radius = np.tan(phi)
    half_angle = math.atan(slope)
    arcs = []
    for sign in (1.0, -1.0):
        u = radius * np.exp(1j * sign * half_angle)
        arcs.append(l_i + (l_j - l_i) * (u / (1.0 + u)))
    return np.concatenate(arcs)


def region_contains(l_i: complex, l_j: complex, slope: float, points: np.ndarray) -> np.ndarray:
    """Vectorised float membership test, strict with a small tolerance"""
    m = (points - l_i) / (l_j - l_i)
    denominator = 1.0 - m
    valid = np.abs(denominator) > _TOLERANCE
    safe = np.where(valid, denominator, 1.0)
    u = m / safe
    scale = np.maximum(np.abs(u), 1.0)
    inside = (u.real > _TOLERANCE * scale) & (np.abs(u.imag) < slope * u.real - _TOLERANCE * scale)
    return valid & inside


@dataclass
class ProbeReport:
    """
    Attributes:
        edges: Edge index pairs probed
        wedge_slope: Slope bound used (float)
        resolution: Samples per boundary arc
        overlaps: One entry per ordered edge pair with hits
    """
    edges: List[List[int]]
    wedge_slope: float
    resolution: int
    overlaps: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def disjoint(self) -> bool:
        return not self.overlaps

    def to_dict(self) -> Dict[str, Any]:
        return {
            "edges": self.edges,
            "wedgeSlope": self.wedge_slope,
            "resolution": self.resolution,
            "overlaps": self.overlaps,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def region_disjointness_probe(mst: MstEdges, wedge: WedgeSpec, resolution: int = 256) -> ProbeReport:
    """
    Look for boundary samples of one edge region inside another edge region

    Args:
        mst: Spanning tree whose edges index the regions
        wedge: Wedge defining the regions
        resolution: Samples per arc (>= 2)
    """
    if resolution < 2:
        raise ValueError(f"probe resolution must be at least 2, got {resolution}")
    slope = float(wedge.slope_bound)
    endpoints = [
        (mst.vertices[i].to_complex(), mst.vertices[j].to_complex()) for i, j in mst.edges
    ]
    report = ProbeReport([list(e) for e in mst.edges], slope, resolution)

    for a, (ai, aj) in enumerate(endpoints):
        samples = boundary_samples(ai, aj, slope, resolution)
        for b, (bi, bj) in enumerate(endpoints):
            if a == b:
                continue
            hits = samples[region_contains(bi, bj, slope, samples)]
            if hits.size:
                first = hits[0]
                report.overlaps.append({
                    "edge": list(mst.edges[a]),
                    "other_edge": list(mst.edges[b]),
                    "samples": int(hits.size),
                    "point": [round(float(first.real), 12), round(float(first.imag), 12)],
                })
    if report.overlaps:
        logger.warning(f"Region probe found {len(report.overlaps)} overlapping edge pair(s)")
    return report
