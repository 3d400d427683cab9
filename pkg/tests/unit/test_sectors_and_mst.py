"""
Unit tests for sector pigeonholing and the Euclidean spanning tree

The spanning tree is checked against an exhaustive search over every labeled
tree (Prüfer sequences) on small point sets.
"""

import itertools
import math
import random

import pytest
from fractions import Fraction

from src.arith.gaussian import GaussianRational as G, I
from src.arith.wedge import wedge_member
from src.geometry.sectors import boundary_rays, sector_index, sector_select, sector_wedge
from src.geometry.mst import euclidean_mst, format_mst_dump, squared_distance
from src.harness.trials import TrialDomain, TrialSpec, trial_sets
from src.sets.scalar_set import ScalarSet


def prufer_trees(n):
    """Every labeled tree on n >= 2 vertices as an edge list"""
    if n == 2:
        yield [(0, 1)]
        return
    for sequence in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in sequence:
            degree[v] += 1
        edges = []
        for v in sequence:
            leaf = min(u for u in range(n) if degree[u] == 1)
            edges.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = [x for x in range(n) if degree[x] == 1]
        edges.append((u, w))
        yield edges


def exhaustive_minimum(points):
    """Smallest total squared weight over all spanning trees"""
    return min(
        sum(squared_distance(points[i], points[j]) for i, j in tree)
        for tree in prufer_trees(len(points))
    )


def exhaustive_length(points):
    """Shortest total Euclidean length over all spanning trees (float)"""
    return min(
        sum(math.sqrt(float(squared_distance(points[i], points[j]))) for i, j in tree)
        for tree in prufer_trees(len(points))
    )


class TestBoundaryRays:
    """Test sector boundaries"""

    def test_octants(self):
        """Test the eight octant rays"""
        rays = boundary_rays(8)
        assert rays[0] == (1, 0)
        assert rays[2] == (0, 1)
        assert len(rays) == 8

    def test_other_counts(self):
        """Test rounded rays for six sectors"""
        rays = boundary_rays(6)
        assert len(rays) == 6
        assert rays[0] == (1, 0)

    def test_too_few_sectors(self):
        """Test sectors must be narrower than a right angle"""
        with pytest.raises(ValueError):
            boundary_rays(4)

    def test_octant_wedge(self):
        """Test octant quotients fit the slope-1 wedge"""
        assert sector_wedge(boundary_rays(8)).slope_bound == 1

    @pytest.mark.parametrize("z,expected", [
        (G(1, 0), 0),
        (G(1, 1), 1),
        (I, 2),
        (G(-1, 0), 4),
        (G(0, -1), 6),
        (G(1, -1), 7),
        (G(5, -1), 7),
    ])
    def test_sector_index(self, z, expected):
        """Test half-open sector membership"""
        assert sector_index(z, boundary_rays(8)) == expected


class TestSectorSelect:
    """Test heaviest-sector selection"""

    def test_positive_reals_kept_whole(self):
        """Test {1,2,3} stays in sector 0, normalized by 1"""
        selection = sector_select(ScalarSet([1, 2, 3]))
        assert selection.partition.chosen_index == 0
        assert selection.partition.normalizer == G(1, 0)
        assert selection.normalized == ScalarSet([1, 2, 3]).as_complex()

    def test_tie_prefers_lowest_index(self):
        """Test {1, i, -1, -i} keeps only 1"""
        selection = sector_select(ScalarSet([1, I, G(-1, 0), G(0, -1)]))
        assert selection.partition.chosen_index == 0
        assert len(selection.members) == 1

    def test_near_real_pair(self):
        """Test {1, 1 + i/10, i} keeps the two near-real elements"""
        selection = sector_select(ScalarSet([G(1, 0), G(1, Fraction(1, 10)), I]))
        assert len(selection.members) == 2
        assert selection.partition.normalizer == G(1, 0)

    def test_weights_decide(self):
        """Test a heavy element outweighs a larger sector"""
        weights = {G(1, 0): 1, G(2, 0): 1, I: 5}
        selection = sector_select(ScalarSet([1, 2, I]), weights)
        assert selection.partition.chosen_index == 2
        assert selection.normalized == ScalarSet([G(1, 0)])

    def test_zero_deleted(self):
        """Test 0 is removed and flagged"""
        selection = sector_select(ScalarSet([0, 1]))
        assert selection.zero_removed
        assert len(selection.members) == 1

    def test_only_zero(self):
        """Test a set with no nonzero element"""
        with pytest.raises(ValueError):
            sector_select(ScalarSet([0]))

    def test_random_sets_pigeonhole_and_wedge(self):
        """Test the kept sector is a pigeonhole share and normalizes into the wedge"""
        spec = TrialSpec(seed=11, set_size=9, trials=20, domain=TrialDomain.GAUSSIAN_RATIONALS, max_value=7)
        for s in trial_sets(spec):
            selection = sector_select(s)
            assert len(selection.members) * 8 >= len(s)
            for z in selection.normalized:
                assert wedge_member(z, selection.partition.wedge)


class TestEuclideanMst:
    """Test Kruskal's spanning tree"""

    def test_three_points(self):
        """Test {1, i, -i} joins both to 1"""
        mst = euclidean_mst([G(1, 0), I, G(0, -1)])
        assert mst.edges == ((0, 1), (0, 2))
        assert mst.squared_weights == (2, 2)
        assert mst.is_spanning_tree()

    def test_two_points(self):
        """Test the single edge"""
        mst = euclidean_mst([Fraction(1), Fraction(3)])
        assert mst.edges == ((0, 1),)
        assert mst.squared_weights == (4,)

    def test_too_few_points(self):
        """Test a single point"""
        with pytest.raises(ValueError):
            euclidean_mst([I])

    def test_repeated_points(self):
        """Test duplicates are rejected"""
        with pytest.raises(ValueError, match="ratio points must be distinct"):
            euclidean_mst([I, I, G(1, 0)])

    def test_total_weight(self):
        """Test the float length sum"""
        mst = euclidean_mst([G(1, 0), I, G(0, -1)])
        assert mst.total_weight() == pytest.approx(2 * math.sqrt(2))

    def test_dump_format(self):
        """Test one i, j, squared weight line per edge"""
        mst = euclidean_mst([G(1, 0), I, G(0, -1)])
        assert format_mst_dump(mst) == "0\t1\t2\n0\t2\t2\n"

    def test_fixed_points_match_exhaustive_search(self):
        """Test five fixed points against all 125 labeled trees"""
        points = [G(0, 0), G(3, 1), G(1, 4), G(5, 5), G(2, 2)]
        mst = euclidean_mst(points)
        assert mst.is_spanning_tree()
        assert sum(mst.squared_weights) == exhaustive_minimum(points)

    def test_random_points_match_exhaustive_search(self):
        """Test seeded random Gaussian rationals against all labeled trees"""
        rng = random.Random(2024)
        for _ in range(10):
            points = set()
            while len(points) < 5:
                points.add(G(Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                             Fraction(rng.randint(-9, 9), rng.randint(1, 4))))
            points = sorted(points, key=G.sort_key)
            mst = euclidean_mst(points)
            assert mst.is_spanning_tree()
            assert sum(mst.squared_weights) == exhaustive_minimum(points)

    def test_generated_sets_match_exhaustive_length(self):
        """Test 20 Gaussian sets of up to six points: exact tree and float length"""
        sizes = [2 + i % 5 for i in range(20)]
        spec_sets = [
            trial_sets(TrialSpec(seed=900 + i, set_size=size, trials=1,
                                 domain=TrialDomain.GAUSSIAN_RATIONALS, max_value=9))[0]
            for i, size in enumerate(sizes)
        ]
        for s in spec_sets:
            points = list(s)
            mst = euclidean_mst(points)
            assert mst.is_spanning_tree()
            assert sum(mst.squared_weights) == exhaustive_minimum(points)
            assert abs(mst.total_weight() - exhaustive_length(points)) < 1e-9


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
