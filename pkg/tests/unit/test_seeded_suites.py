"""
Seeded suites for every bound at the sizes the workbench is expected to handle

Each verifier runs over a deterministic batch of generated sets; the bounds
are theorems, so every instance must pass. Complex batches additionally check
the witness bookkeeping against brute force.
"""

import random

import pytest
from fractions import Fraction

from src.geometry.slope_cover import GridPoint
from src.geometry.complex_ratio import lemma7_construct, thm6_witnesses
from src.harness.coprime import coprime_density
from src.harness.energy import energy_count, energy_direct, energy_ratio_form
from src.harness.trials import Lcg64, TrialDomain, TrialSpec, random_set
from src.harness.verifiers import (
    ungar_check,
    verify_lemma3,
    verify_thm1,
    verify_thm2,
    verify_thm4,
    verify_thm6,
)
from src.sets.scalar_set import ScalarSet


def sized_batch(seed, sizes, domain, max_value):
    """One set per entry of sizes, all drawn from a single generator"""
    rng = Lcg64(seed)
    return [
        random_set(TrialSpec(seed=seed, set_size=size, trials=1, domain=domain, max_value=max_value), rng)
        for size in sizes
    ]


@pytest.fixture
def rng():
    return random.Random(31337)


class TestRatioSetBoundSuite:
    """Test |(A+A)/(A+A)| >= 2|A|² - 1 on 100 rational sets"""

    def test_hundred_rational_sets(self):
        """Test sizes 2 through 10, witness count exactly 2n² - 1"""
        sizes = [2 + i % 9 for i in range(100)]
        for a in sized_batch(101, sizes, TrialDomain.POSITIVE_RATIONALS, 12):
            report = verify_thm1(a)
            n = len(a)
            assert report.constants["witness_count"] == 2 * n * n - 1
            assert report.passed


class TestPointSetBoundSuite:
    """Test |R(P + P)| >= |P| + 1 on generated quadrant point sets"""

    def test_fifty_point_sets(self, rng):
        """Test up to 20 integer points on at least two origin lines"""
        for _ in range(50):
            size = rng.randint(2, 20)
            points = set()
            while len(points) < size:
                points.add(GridPoint(Fraction(rng.randint(1, 9)), Fraction(rng.randint(1, 9))))
            points = sorted(points, key=lambda p: (p.x, p.y))
            if len({p.slope() for p in points}) < 2:
                points.append(GridPoint(Fraction(points[0].x), Fraction(points[0].y + 1)))
            report = verify_thm2(points)
            assert int(report.measured) >= len(points) + 1
            assert report.passed


class TestLemma3Suite:
    """Test |AC+AD|·|BC+BD| >= |A/B|·|C|·|D|"""

    def test_hundred_quadruples(self, rng):
        """Test positive rational quadruples of sizes 1 to 6"""
        sizes = [rng.randint(1, 6) for _ in range(400)]
        sets = sized_batch(303, sizes, TrialDomain.POSITIVE_RATIONALS, 9)
        for a, b, c, d in zip(sets[0::4], sets[1::4], sets[2::4], sets[3::4]):
            assert verify_lemma3(a, b, c, d).passed


class TestFoldedProductSuite:
    """Test |4^(k-1) A^(k)| >= |A|^k at scale"""

    @pytest.mark.parametrize("n", range(1, 31))
    def test_intervals_with_upper_check(self, n):
        """Test {1..N}: N² <= |AA+AA+AA+AA| < 4N²"""
        report = verify_thm4(ScalarSet(range(1, n + 1)), 2)
        assert report.constants["exact"] is True
        assert report.constants["upper_bound"] == 4 * n * n
        assert n * n <= int(report.measured) < 4 * n * n
        assert report.passed

    def test_random_sets_k_two(self, rng):
        """Test exact k = 2 on integer sets up to eight elements"""
        sizes = [rng.randint(1, 8) for _ in range(20)]
        for a in sized_batch(404, sizes, TrialDomain.POSITIVE_INTEGERS, 20):
            report = verify_thm4(a, 2)
            assert report.constants["exact"] is True
            assert report.passed

    def test_random_sets_k_three(self):
        """Test k = 3 on four-element sets stops with a certificate"""
        for a in sized_batch(405, [4] * 10, TrialDomain.POSITIVE_INTEGERS, 20):
            report = verify_thm4(a, 3)
            assert report.passed
            assert int(report.measured) >= 64
            assert any(note.startswith("certificate:") for note in report.notes)


class TestCoprimeSuite:
    """Test coprime density and the interval ratio set"""

    def test_density_near_six_over_pi_squared(self):
        """Test N = 500 lands within one percent"""
        report = coprime_density(500)
        assert report.constants["relative_error"] < 0.01
        assert report.passed

    def test_interval_ratio_set_window(self):
        """Test N = 300: 2N² - 1 <= |(A+A)/(A+A)| <= 2.5·N²"""
        n = 300
        report = coprime_density(n)
        measured = int(report.measured)
        assert 2 * n * n - 1 <= measured <= Fraction(5, 2) * n * n
        assert report.passed


class TestEnergySuite:
    """Test multiplicative energy against the eight-fold enumeration"""

    def test_ten_random_sets(self):
        """Test counted, ratio-form and direct energy agree"""
        sizes = [2, 3, 4, 5, 3, 2, 4, 3, 5, 2]
        for a in sized_batch(606, sizes, TrialDomain.POSITIVE_INTEGERS, 15):
            expected = energy_direct(a)
            assert energy_count(a) == expected
            assert energy_ratio_form(a) == expected


class TestComplexWitnessSuite:
    """Test the spanning-tree witnesses on 50 Gaussian sets"""

    @pytest.fixture(scope="class")
    def gaussian_sets(self):
        sizes = [2 + i % 7 for i in range(50)]
        return sized_batch(707, sizes, TrialDomain.GAUSSIAN_RATIONALS, 30)

    def test_every_sum_is_a_distinct_witness(self, gaussian_sets):
        """Test no collisions and one witness per varied representation"""
        for a in gaussian_sets:
            report = thm6_witnesses(a)
            assert report.violations == []
            assert report.distinct_count == report.constants["per_edge_total"]
            assert 2 * report.distinct_count >= report.constants["spanned_mass"]
            assert report.passed

    def test_brute_force_holds_every_witness(self, gaussian_sets):
        """Test the exact ratio set is at least the witness count"""
        for a in gaussian_sets:
            report = verify_thm6(a)
            assert int(report.measured) >= report.constants["witness_count"]
            assert report.passed


class TestDisjointSumSuite:
    """Test the S_ij construction on 50 Gaussian triples"""

    def test_fifty_triples(self, rng):
        """Test sizes 1 to 5; each edge contributes |C'|² sums"""
        sizes = [rng.randint(1, 5) for _ in range(150)]
        sets = sized_batch(808, sizes, TrialDomain.GAUSSIAN_RATIONALS, 30)
        for a, b, c in zip(sets[0::3], sets[1::3], sets[2::3]):
            report = lemma7_construct(a, b, c)
            assert report.passed
            assert report.constants["s_total"] == report.constants["edges"] * report.constants["c_prime_size"] ** 2


class TestDirectionSuite:
    """Test directions of A × A against |A|² - 1"""

    def test_hundred_real_sets(self, rng):
        """Test signed rational sets, half of them holding 0"""
        for trial in range(100):
            size = rng.randint(2, 8)
            members = set()
            if trial % 2 == 0:
                members.add(Fraction(0))
            while len(members) < size:
                members.add(Fraction(rng.randint(-12, 12), rng.randint(1, 4)))
            a = ScalarSet(members)
            report = ungar_check(a)
            assert int(report.measured) >= len(a) ** 2 - 1
            assert report.passed


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
