"""
Unit tests for the slope cover construction

Tests the grid, the origin-line cover, the witness chains for the positive
ratio-set bound and for general quadrant point sets, and direction counting.
"""

import pytest
from fractions import Fraction

from src.geometry.slope_cover import (
    GridPoint,
    build_grid,
    slope_cover,
    thm1_witnesses,
    thm2_witnesses,
    slope_set,
    sum_points,
)
from src.geometry.directions import direction_count, direction_set, VERTICAL
from src.geometry.witness import Witness, WitnessReport, format_witness_dump, parse_witness_dump
from src.sets.scalar_set import ScalarSet
from src.utils.errors import InvariantViolation


def P(*coords):
    """Points from (x, y) tuples"""
    return [GridPoint(x, y) for x, y in coords]


@pytest.fixture
def cover_123():
    """Slope cover of {1,2,3} × {1,2,3}"""
    return slope_cover(build_grid(ScalarSet([1, 2, 3])))


class TestGrid:
    """Test P = A × A"""

    def test_singleton(self):
        """Test A = {1}"""
        assert build_grid(ScalarSet([1])) == [GridPoint(1, 1)]

    def test_size(self):
        """Test |P| = |A|²"""
        assert len(build_grid(ScalarSet([1, 2]))) == 4

    @pytest.mark.parametrize("values", [[0, 1], [-1, 2], []])
    def test_rejects_non_positive(self, values):
        """Test nonpositive or empty input"""
        with pytest.raises(ValueError):
            build_grid(ScalarSet(values))


class TestSlopeCover:
    """Test origin-line covers"""

    def test_pair_set(self):
        """Test A = {1,2}: slopes 1/2, 1, 2 with counts 1, 2, 1"""
        cover = slope_cover(build_grid(ScalarSet([1, 2])))
        assert cover.k == 3
        assert [line.slope for line in cover.lines] == [Fraction(1, 2), Fraction(1), Fraction(2)]
        assert cover.counts() == [1, 2, 1]

    def test_three_element_set(self, cover_123):
        """Test A = {1,2,3} lies on 7 lines"""
        assert cover_123.k == 7
        assert cover_123.counts() == [1, 1, 1, 3, 1, 1, 1]

    def test_extreme_lines(self, cover_123):
        """Test the outer lines hold (3,1) and (1,3)"""
        assert cover_123.lines[0].points == (GridPoint(3, 1),)
        assert cover_123.lines[-1].points == (GridPoint(1, 3),)

    def test_points_sorted_by_magnitude(self, cover_123):
        """Test the diagonal is ordered outward"""
        diagonal = cover_123.lines[3]
        assert diagonal.points == (GridPoint(1, 1), GridPoint(2, 2), GridPoint(3, 3))

    def test_single_point(self):
        """Test one line"""
        cover = slope_cover(P((1, 1)))
        assert cover.k == 1
        assert cover.lines[0].slope == 1

    def test_rejects_axis_points(self):
        """Test the open quadrant precondition"""
        with pytest.raises(ValueError):
            slope_cover(P((0, 1), (1, 1)))

    def test_duplicates_merged(self):
        """Test repeated points count once"""
        assert slope_cover(P((1, 2), (1, 2))).source_point_count == 1


class TestRatioSetWitnesses:
    """Test the 2|A|² - 1 witness construction"""

    def test_three_element_set(self):
        """Test A = {1,2,3} gives 17"""
        report = thm1_witnesses(ScalarSet([1, 2, 3]))
        assert report.distinct_count == 17
        assert report.target_bound == 17
        assert report.passed

    def test_singleton(self):
        """Test A = {1} gives 1"""
        report = thm1_witnesses(ScalarSet([1]))
        assert report.distinct_count == 1
        assert report.target_bound == 1
        assert report.passed

    def test_pair_matches_brute_force(self):
        """Test A = {1,2}: witnesses equal {2,3,4}/{2,3,4}"""
        report = thm1_witnesses(ScalarSet([1, 2]))
        sums = ScalarSet([2, 3, 4])
        assert report.distinct_count == 7
        assert report.ratio_set() == (sums / sums).as_frozenset()

    @pytest.mark.parametrize("values", [
        [1, 2, 4, 8],
        ["1/2", "2/3", 5, 7],
        [3, 10, 11, 12, 30],
    ])
    def test_exact_count_and_membership(self, values):
        """Test the construction hits 2|A|² - 1 and stays inside (A+A)/(A+A)"""
        a = ScalarSet(values)
        report = thm1_witnesses(a)
        sums = a + a
        assert report.distinct_count == 2 * len(a) ** 2 - 1
        assert report.ratio_set() <= (sums / sums).as_frozenset()

    def test_provenance_tags(self):
        """Test chain and diagonal tags"""
        report = thm1_witnesses(ScalarSet([1, 2]))
        tags = {w.provenance for w in report.witnesses}
        assert "diagonal:1" in tags
        assert any(tag.startswith("chain:2:") for tag in tags)

    def test_witness_sources_realise_ratio(self):
        """Test each source pair has the certified ratio"""
        for w in thm1_witnesses(ScalarSet([1, 3, 4])).witnesses:
            first, second = w.source
            assert second / first == w.ratio

    def test_rejects_non_positive(self):
        """Test the precondition message"""
        with pytest.raises(ValueError, match="positive reals"):
            thm1_witnesses(ScalarSet([0, 1]))


class TestPointSetWitnesses:
    """Test the |P| + 1 construction"""

    def test_two_points(self):
        """Test {(1,1),(1,2)} gives slopes 1, 3/2, 2"""
        points = P((1, 1), (1, 2))
        report = thm2_witnesses(points)
        assert report.target_bound == 3
        assert report.ratio_set() == {Fraction(1), Fraction(3, 2), Fraction(2)}
        assert slope_set(sum_points(points)) == report.ratio_set()

    def test_collinear_plus_one(self):
        """Test |P| - 1 collinear points plus one gives exactly |P| + 1 slopes"""
        points = P((1, 1), (2, 2), (3, 3), (1, 5))
        report = thm2_witnesses(points)
        assert report.distinct_count == 5
        assert len(slope_set(sum_points(points))) == 5

    def test_four_points(self):
        """Test {(1,1),(2,2),(3,3),(1,2)}"""
        points = P((1, 1), (2, 2), (3, 3), (1, 2))
        report = thm2_witnesses(points)
        assert report.distinct_count >= 5
        assert report.passed
        assert len(slope_set(sum_points(points))) == 5

    def test_single_slope_is_degenerate(self):
        """Test all points on one origin line"""
        with pytest.raises(ValueError, match="degenerate: single slope"):
            thm2_witnesses(P((1, 1), (2, 2)))

    def test_construction_count(self):
        """Test 2|P| + 1 - n_1 - n_k"""
        report = thm2_witnesses(P((1, 1), (2, 2), (3, 3), (1, 2)))
        assert report.constants["construction_count"] == 2 * 4 + 1 - 3 - 1


class TestDirections:
    """Test direction counting"""

    def test_grid_with_zero(self):
        """Test {0,1,2}² determines 8 directions including vertical"""
        grid = [GridPoint(x, y) for x in range(3) for y in range(3)]
        directions = direction_set(grid)
        assert len(directions) == 8
        assert VERTICAL in directions

    def test_two_points(self):
        """Test a single pair"""
        assert direction_count(P((0, 0), (1, 3))) == 1

    def test_collinear(self):
        """Test three collinear points"""
        assert direction_count(P((0, 0), (1, 1), (2, 2))) == 1

    def test_needs_two_points(self):
        """Test fewer than two distinct points"""
        with pytest.raises(ValueError):
            direction_count(P((1, 1), (1, 1)))


class TestWitnessReport:
    """Test report assembly and the dump format"""

    def test_duplicate_ratio_rejected(self):
        """Test pairwise distinctness is enforced"""
        with pytest.raises(InvariantViolation) as excinfo:
            WitnessReport.build([Witness(Fraction(1), "a"), Witness(Fraction(1), "b")], 1)
        assert excinfo.value.details["second"] == "b"

    def test_dump_sorted_by_ratio(self):
        """Test one tab-separated line per witness, in ratio order"""
        text = format_witness_dump(thm1_witnesses(ScalarSet([1, 2, 3])))
        rows = parse_witness_dump(text)
        assert len(rows) == 17
        assert rows[0] == ("1/3", "diagonal:1")
        assert rows[-1] == ("3", "diagonal:7")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
