"""
Euclidean Minimum Spanning Tree

Kruskal's algorithm over all vertex pairs. Edges are ordered by exact squared
distance (monotone in the distance itself), then by vertex indices, so the
tree is deterministic and computed without square roots.

Example:
    from src.arith.gaussian import GaussianRational as G
    from src.geometry.mst import euclidean_mst

    mst = euclidean_mst([G(0, -1), G(0, 1), G(1, 0)])
    mst.edges            # ((0, 2), (1, 2))
    mst.squared_weights  # (2, 2)
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np

from src.arith.gaussian import GaussianRational
from src.arith.rational import format_rational


@dataclass(frozen=True)
class MstEdges:
    """
    Attributes:
        vertices: Ratio points, in the order given
        edges: Vertex index pairs (i < j), in the order Kruskal accepted them
        squared_weights: Exact squared length of each edge
    """
    vertices: Tuple[GaussianRational, ...]
    edges: Tuple[Tuple[int, int], ...]
    squared_weights: Tuple[Fraction, ...]

    def total_weight(self) -> float:
        """Sum of Euclidean edge lengths (float)"""
        if not self.squared_weights:
            return 0.0
        return float(np.sqrt(np.array([float(w) for w in self.squared_weights])).sum())

    def is_spanning_tree(self) -> bool:
        """|E| = |V| - 1, no self loops, acyclic and connected"""
        n = len(self.vertices)
        if len(self.edges) != n - 1:
            return False
        parent = list(range(n))
        for i, j in self.edges:
            if i == j:
                return False
            ri, rj = _find(parent, i), _find(parent, j)
            if ri == rj:
                return False
            parent[ri] = rj
        return len({_find(parent, v) for v in range(n)}) <= 1

    def endpoints(self, edge_index: int) -> Tuple[GaussianRational, GaussianRational]:
        i, j = self.edges[edge_index]
        return self.vertices[i], self.vertices[j]


def _find(parent: List[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def squared_distance(p: GaussianRational, q: GaussianRational) -> Fraction:
    return (p - q).norm2()


def euclidean_mst(points: Sequence[Union[GaussianRational, Fraction, int]]) -> MstEdges:
    """
    Minimum spanning tree of the complete Euclidean graph on points

    Raises:
        ValueError: Fewer than two points, or a repeated point
    """
    vertices = tuple(GaussianRational.of(p) for p in points)
    if len(vertices) < 2:
        raise ValueError("minimum spanning tree needs at least two points")
    if len(set(vertices)) != len(vertices):
        raise ValueError("ratio points must be distinct")

    queue = [
        (squared_distance(vertices[i], vertices[j]), i, j)
        for i in range(len(vertices))
        for j in range(i + 1, len(vertices))
    ]
    heapq.heapify(queue)

    parent = list(range(len(vertices)))
    edges: List[Tuple[int, int]] = []
    weights: List[Fraction] = []
    while len(edges) < len(vertices) - 1:
        weight, i, j = heapq.heappop(queue)
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j))
            weights.append(weight)
    return MstEdges(vertices, tuple(edges), tuple(weights))


def format_mst_dump(mst: MstEdges) -> str:
    """``i<TAB>j<TAB>squared_weight`` per edge"""
    return "".join(
        f"{i}\t{j}\t{format_rational(w)}\n" for (i, j), w in zip(mst.edges, mst.squared_weights)
    )


def write_mst_dump(mst: MstEdges, path: Union[str, Path]) -> Path:
    filepath = Path(path)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    filepath.write_text(format_mst_dump(mst), encoding="utf-8")
    return filepath
