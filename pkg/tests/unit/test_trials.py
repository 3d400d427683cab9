"""
Unit tests for trial generation, parallel execution and the conjecture scan
"""

import json
import pytest
from fractions import Fraction

from src.arith.gaussian import GaussianRational
from src.arith.scalars import ScalarKind
from src.harness.trials import Lcg64, TrialDomain, TrialSpec, random_set, run_trials, trial_sets
from src.harness.scan import ScanKind, conjecture_scan, scan_trials, scan_value
from src.sets.scalar_set import ScalarSet


@pytest.fixture
def spec():
    """Small integer trial spec"""
    return TrialSpec(seed=42, set_size=4, trials=6, max_value=50)


class TestLcg64:
    """Test the seeded generator"""

    def test_reproducible(self):
        """Test equal seeds give equal streams"""
        first, second = Lcg64(123), Lcg64(123)
        assert [first.next_u32() for _ in range(5)] == [second.next_u32() for _ in range(5)]

    def test_seeds_differ(self):
        """Test different seeds diverge"""
        assert Lcg64(1).next_u32() != Lcg64(2).next_u32()

    def test_high_bits_recurrence(self):
        """Test one step of the recurrence"""
        rng = Lcg64(5)
        state = (Lcg64.MULTIPLIER * 5 + Lcg64.INCREMENT) % 2 ** 64
        assert rng.next_u32() == state >> 32

    def test_uniform_range(self):
        """Test draws fall in [1, upper]"""
        rng = Lcg64(9)
        draws = [rng.uniform(6) for _ in range(500)]
        assert min(draws) >= 1 and max(draws) <= 6
        assert set(draws) == {1, 2, 3, 4, 5, 6}


class TestTrialSpec:
    """Test spec parsing and validation"""

    def test_parse(self):
        """Test every key"""
        parsed = TrialSpec.parse("size=3, trials=2, seed=9, domain=positive-rationals, max=7")
        assert parsed == TrialSpec(9, 3, 2, TrialDomain.POSITIVE_RATIONALS, 7)

    def test_default_seed(self):
        """Test the configured seed fills a missing key"""
        assert TrialSpec.parse("size=2,trials=1", default_seed=77).seed == 77

    def test_unknown_key(self):
        """Test unknown keys are rejected"""
        with pytest.raises(ValueError, match="unknown"):
            TrialSpec.parse("size=2,colour=red")

    def test_unknown_domain(self):
        """Test unknown domain names"""
        with pytest.raises(ValueError):
            TrialSpec.parse("domain=primes")

    def test_invalid_size(self):
        """Test set size must be positive"""
        with pytest.raises(ValueError):
            TrialSpec(seed=0, set_size=0, trials=1)


class TestRandomSets:
    """Test set generation"""

    def test_sizes_and_kind(self, spec):
        """Test every set has set_size distinct integers in range"""
        for s in trial_sets(spec):
            assert len(s) == 4
            assert s.is_integral
            assert all(1 <= x <= 50 for x in s)

    def test_reproducible(self, spec):
        """Test the same spec gives the same sets"""
        assert trial_sets(spec) == trial_sets(spec)

    def test_trials_differ(self, spec):
        """Test sets are drawn in sequence from one generator"""
        sets = trial_sets(spec)
        assert len(set(sets)) > 1

    def test_gaussian_domain(self):
        """Test Gaussian rationals with nonzero components"""
        s = random_set(TrialSpec(seed=1, set_size=5, trials=1, domain=TrialDomain.GAUSSIAN_RATIONALS, max_value=4))
        assert s.kind is ScalarKind.COMPLEX
        assert all(isinstance(z, GaussianRational) and z.re != 0 and z.im != 0 for z in s)

    def test_rational_domain(self):
        """Test numerators and denominators stay in range"""
        s = random_set(TrialSpec(seed=3, set_size=6, trials=1, domain=TrialDomain.POSITIVE_RATIONALS, max_value=9))
        assert all(x > 0 and x.numerator <= 9 and x.denominator <= 9 for x in s)

    def test_domain_too_small(self):
        """Test more distinct integers than the range holds"""
        with pytest.raises(ValueError, match="domain too small"):
            random_set(TrialSpec(seed=0, set_size=5, trials=1, max_value=3))


class TestRunTrials:
    """Test sequential and threaded execution"""

    def test_order_preserved(self, spec):
        """Test threaded results keep trial order"""
        sets = trial_sets(spec)
        assert run_trials(ScalarSet.format, sets, max_workers=4) == [s.format() for s in sets]

    def test_sequential(self, spec):
        """Test one worker"""
        assert run_trials(len, trial_sets(spec), max_workers=1) == [4] * 6

    def test_exception_propagates(self, spec):
        """Test a failing trial raises"""
        def explode(s):
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError, match="boom"):
            run_trials(explode, trial_sets(spec), max_workers=3)


class TestConjectureScan:
    """Test the exploration scan"""

    def test_triple_product(self):
        """Test {1,2} gives 10 products, ratio 10/8"""
        assert scan_value(ScalarSet([1, 2]), ScanKind.TRIPLE_PRODUCT, 3) == 10

    def test_fold_product(self):
        """Test 2{1,2,4} has 6 elements"""
        assert scan_value(ScalarSet([1, 2]), ScanKind.FOLD_PRODUCT, 2) == 6

    def test_minimizers_tie(self):
        """Test two-element sets with distinct pair sums tie at 10/8"""
        report = conjecture_scan(ScanKind.TRIPLE_PRODUCT, [ScalarSet([1, 2]), ScalarSet([2, 4]), ScalarSet([1, 3])])
        assert report.minimum == Fraction(5, 4)
        assert report.minimizers == ["{1, 2}", "{2, 4}", "{1, 3}"]
        assert [e.measured for e in report.entries] == [10, 10, 10]

    def test_larger_set_lowers_minimum(self):
        """Test {1,2,3}: 30 products over 27 beats 10 over 8"""
        report = conjecture_scan(ScanKind.TRIPLE_PRODUCT, [ScalarSet([1, 2]), ScalarSet([1, 2, 3])])
        assert report.minimum == Fraction(10, 9)
        assert report.minimizers == ["{1, 2, 3}"]
        assert report.entries[1].measured == 30

    def test_json(self):
        """Test the JSON document"""
        report = conjecture_scan(ScanKind.FOLD_PRODUCT, [ScalarSet([1, 2])], k=2)
        payload = json.loads(report.to_json())
        assert payload["kind"] == "kA^(k)"
        assert payload["minimum"] == "3/2"
        assert payload["entries"][0]["measured"] == "6"

    def test_scan_trials(self, spec):
        """Test scanning generated sets"""
        report = scan_trials(ScanKind.TRIPLE_PRODUCT, spec, max_workers=2)
        assert len(report.entries) == 6
        assert report.minimum is not None

    def test_kind_aliases(self):
        """Test kind names"""
        assert ScanKind.parse("fold-product") is ScanKind.FOLD_PRODUCT
        with pytest.raises(ValueError):
            ScanKind.parse("quadruple")

    def test_invalid_k(self):
        """Test k < 1"""
        with pytest.raises(ValueError):
            conjecture_scan(ScanKind.FOLD_PRODUCT, [ScalarSet([1])], k=0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
