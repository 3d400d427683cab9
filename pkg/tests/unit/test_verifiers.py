"""
Unit tests for the verifiers

Every verifier is run on the worked examples and on seeded random sets; the
bounds are theorems, so every check must pass.
"""

import json
import pytest
from fractions import Fraction

from src.arith.gaussian import GaussianRational as G
from src.geometry.slope_cover import GridPoint
from src.harness.trials import TrialDomain, TrialSpec, run_trials, trial_sets
from src.harness.verifiers import (
    points_from_set,
    verify_thm1,
    verify_thm2,
    verify_lemma3,
    verify_thm4,
    verify_corollary5,
    verify_thm6,
    verify_lemma7,
    verify_thm9,
    ungar_check,
)
from src.sets.scalar_set import ScalarSet
from src.utils.reporting import ReportDocument


@pytest.fixture
def a12():
    return ScalarSet([1, 2])


class TestRatioSetBound:
    """Test |(A+A)/(A+A)| >= 2|A|² - 1"""

    def test_three_element_set(self):
        """Test the tight example"""
        report = verify_thm1(ScalarSet([1, 2, 3]))
        assert (report.measured, report.bound, report.passed) == ("17", "17", True)
        assert report.constants["witness_count"] == 17

    def test_singleton(self):
        """Test 1 >= 1"""
        report = verify_thm1(ScalarSet([1]))
        assert report.measured == report.bound == "1"

    def test_powers_of_two(self):
        """Test {1,2,4,8} reaches at least 31"""
        report = verify_thm1(ScalarSet([1, 2, 4, 8]))
        assert int(report.measured) >= 31
        assert report.passed

    def test_random_rationals(self):
        """Test 30 seeded rational sets"""
        spec = TrialSpec(seed=7, set_size=5, trials=30, domain=TrialDomain.POSITIVE_RATIONALS, max_value=12)
        reports = run_trials(verify_thm1, trial_sets(spec), max_workers=4)
        assert all(r.passed for r in reports)

    def test_rejects_zero(self):
        """Test the precondition"""
        with pytest.raises(ValueError, match="Theorem 1 requires positive reals"):
            verify_thm1(ScalarSet([0, 1]))


class TestPointSetBound:
    """Test |R(P+P)| >= |P| + 1"""

    def test_two_points(self):
        """Test {(1,1),(1,2)}"""
        report = verify_thm2([GridPoint(1, 1), GridPoint(1, 2)])
        assert (report.measured, report.bound) == ("3", "3")
        assert report.passed

    def test_grid_from_real_set(self, a12):
        """Test a real set is read as its grid"""
        report = verify_thm2(points_from_set(a12))
        assert report.bound == "5"
        assert report.passed

    def test_complex_set_as_points(self):
        """Test a complex set is read as (re, im) points"""
        points = points_from_set(ScalarSet([G(1, 1), G(2, 2), G(3, 3), G(1, 2)]))
        report = verify_thm2(points)
        assert report.measured == "5"
        assert report.passed


class TestLemma3:
    """Test |AC+AD|·|BC+BD| >= |A/B|·|C|·|D|"""

    def test_pair_sets(self, a12):
        """Test A = B = C = D = {1,2}"""
        report = verify_lemma3(a12, a12, a12, a12)
        assert (report.measured, report.bound) == ("36", "12")
        assert report.passed

    def test_singletons(self):
        """Test 1 >= 1"""
        s = ScalarSet([3])
        report = verify_lemma3(s, s, s, s)
        assert (report.measured, report.bound) == ("1", "1")

    def test_random_quadruples(self):
        """Test 25 seeded quadruples"""
        sets = trial_sets(TrialSpec(seed=3, set_size=4, trials=100, max_value=30))
        for i in range(0, 100, 4):
            assert verify_lemma3(*sets[i:i + 4]).passed

    def test_rejects_complex(self, a12):
        """Test the positivity precondition"""
        with pytest.raises(ValueError):
            verify_lemma3(ScalarSet([G(1, 1)]), a12, a12, a12)


class TestFoldedProducts:
    """Test |4^(k-1) A^(k)| >= |A|^k"""

    def test_k_one(self):
        """Test the base case"""
        report = verify_thm4(ScalarSet([1, 5, 9]), 1)
        assert report.measured == report.bound == "3"

    def test_interval_upper_check(self):
        """Test A = {1..4}, k = 2: at least 16 and below 64"""
        report = verify_thm4(ScalarSet(range(1, 5)), 2)
        assert report.constants["exact"]
        assert report.constants["upper_bound"] == 64
        assert 16 <= int(report.measured) < 64
        assert report.passed

    def test_certificate_for_k_three(self):
        """Test A = {1..5}, k = 3 stops early at 125"""
        report = verify_thm4(ScalarSet(range(1, 6)), 3)
        assert report.bound == "125"
        assert not report.constants["exact"]
        assert report.passed
        assert any(note.startswith("certificate") for note in report.notes)

    def test_invalid_k(self, a12):
        """Test k < 1"""
        with pytest.raises(ValueError):
            verify_thm4(a12, 0)


class TestCorollary5:
    """Test |S+S| against |A|³/ln|A|"""

    def test_pair_set(self, a12):
        """Test A = {1,2}: S has 10 elements"""
        report = verify_corollary5(a12)
        assert report.bound == "8/ln(2)"
        assert report.constants["triple_product_size"] == 10
        assert report.passed

    def test_three_element_set(self):
        """Test the intermediate quantity is reported"""
        report = verify_corollary5(ScalarSet([1, 2, 3]))
        assert report.bound == "27/ln(3)"
        assert report.constants["intermediate"] > 0

    def test_singleton_rejected(self):
        """Test |A| >= 2"""
        with pytest.raises(ValueError):
            verify_corollary5(ScalarSet([1]))


class TestComplexVerifiers:
    """Test the complex pipeline wrappers"""

    def test_thm6_real_valued(self):
        """Test {1,2,3}: 17 ratios against target 5"""
        report = verify_thm6(ScalarSet([1, 2, 3]))
        assert (report.measured, report.bound) == ("17", "5")
        assert report.constants["witness_count"] == 10
        assert report.passed

    def test_thm6_input_records_wedge(self):
        """Test the wedge and sector count are part of the input"""
        report = verify_thm6(ScalarSet([G(1, 1), G(2, 2)]))
        assert report.input["wedge_slope"] == Fraction(1, 8)
        assert report.input["sectors"] == 8

    def test_lemma7_wrapper(self, a12):
        """Test the wrapper returns the construction report"""
        report = verify_lemma7(a12, a12, a12)
        assert report.task == "lemma7"
        assert report.bound == "8"

    def test_thm9_k_one(self):
        """Test the base case"""
        report = verify_thm9(ScalarSet([G(1, 1), G(2, -1)]), 1)
        assert report.measured == report.bound == "2"

    def test_thm9_pair_set(self, a12):
        """Test {1,2}, k = 2: bound 11, measured 12"""
        report = verify_thm9(a12, 2)
        assert report.constants["c1"] == Fraction(7, 4)
        assert report.constants["c2_2"] == Fraction(121, 28)
        assert (report.measured, report.bound) == ("12", "11")
        assert report.passed

    @pytest.mark.parametrize("k", [1, 2])
    def test_thm9_real_matches_complex_copy(self, k):
        """Test {1,2,3} and its Gaussian copy give the same constants and sizes"""
        real = verify_thm9(ScalarSet([1, 2, 3]), k)
        lifted = verify_thm9(ScalarSet([G(1), G(2), G(3)]), k)
        assert (real.measured, real.bound) == (lifted.measured, lifted.bound)
        assert real.constants == lifted.constants
        assert real.passed and lifted.passed

    def test_thm9_random_complex(self):
        """Test seeded Gaussian sets with k = 2"""
        spec = TrialSpec(seed=1, set_size=3, trials=5, domain=TrialDomain.GAUSSIAN_RATIONALS, max_value=5)
        for s in trial_sets(spec):
            assert verify_thm9(s, 2).passed


class TestDirections:
    """Test the direction count against |A|² - 1"""

    def test_with_zero(self):
        """Test {0,1,2}: 8 directions, 7 finite ratios"""
        report = ungar_check(ScalarSet([0, 1, 2]))
        assert (report.measured, report.bound) == ("8", "8")
        assert report.constants["finite_ratios"] == 7
        assert report.passed

    def test_pair(self, a12):
        """Test {1,2}"""
        assert int(ungar_check(a12).measured) >= 3

    def test_progression(self):
        """Test {1..5}"""
        assert ungar_check(ScalarSet(range(1, 6))).passed

    def test_needs_two_elements(self):
        """Test |A| >= 2"""
        with pytest.raises(ValueError):
            ungar_check(ScalarSet([4]))


class TestReportDocument:
    """Test the JSON report schema"""

    def test_schema(self):
        """Test report keys and exact strings"""
        document = ReportDocument([verify_thm1(ScalarSet([1, 2, 3]))], {"tool": "ratio-workbench"})
        payload = json.loads(document.to_json(include_timing=False))
        report = payload["reports"][0]
        assert set(report) == {"task", "input", "bound", "measured", "pass", "constants", "elapsed_ms", "notes"}
        assert report["pass"] is True
        assert report["elapsed_ms"] == 0
        assert report["input"]["A"] == "{1, 2, 3}"
        assert report["constants"]["ratio_over_n2"] == "17/9"
        assert document.all_passed

    def test_deterministic_without_timing(self):
        """Test byte-identical output"""
        first = ReportDocument([verify_lemma3(*[ScalarSet([1, 2])] * 4)]).to_json(False)
        second = ReportDocument([verify_lemma3(*[ScalarSet([1, 2])] * 4)]).to_json(False)
        assert first == second

    def test_write(self, tmp_path):
        """Test writing creates parent directories"""
        path = ReportDocument([verify_thm1(ScalarSet([1]))]).write(tmp_path / "out" / "r.json")
        assert json.loads(path.read_text())["reports"][0]["task"] == "thm1"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
