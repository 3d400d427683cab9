"""
Conjecture scan

Exploration mode: measures |kA^(k)| / |A|^k or |(A+A)(A+A)(A+A)| / |A|³ over
generated sets and keeps the minimum. Nothing is asserted.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from src.harness.trials import TrialSpec, run_trials, trial_sets
from src.sets.scalar_set import DEFAULT_SIZE_CAP, ScalarSet, SetOp, kfold_product, kfold_sum, pairwise
from src.utils.reporting import exact_str


logger = logging.getLogger(__name__)


class ScanKind(Enum):
    FOLD_PRODUCT = "kA^(k)"
    TRIPLE_PRODUCT = "triple-product"

    @classmethod
    def parse(cls, text: str) -> "ScanKind":
        aliases = {"fold-product": cls.FOLD_PRODUCT, "kA^(k)": cls.FOLD_PRODUCT, "triple-product": cls.TRIPLE_PRODUCT}
        if text not in aliases:
            raise ValueError(f"unknown scan kind {text!r}; expected one of {sorted(aliases)}")
        return aliases[text]


@dataclass
class ScanEntry:
    index: int
    set_text: str
    measured: int
    ratio: Fraction


@dataclass
class ScanReport:
    """
    Attributes:
        kind: Quantity scanned
        k: Fold parameter (FOLD_PRODUCT only)
        entries: One entry per set, in trial order
        minimum: Smallest ratio seen
        minimizers: Sets attaining the minimum
    """
    kind: ScanKind
    k: int
    entries: List[ScanEntry] = field(default_factory=list)
    minimum: Optional[Fraction] = None
    minimizers: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "k": self.k,
            "minimum": exact_str(self.minimum),
            "minimizers": self.minimizers,
            "entries": [
                {"index": e.index, "set": e.set_text, "measured": str(e.measured), "ratio": exact_str(e.ratio)}
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def scan_value(a: ScalarSet, kind: ScanKind, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """|kA^(k)| or |(A+A)(A+A)(A+A)|, exactly"""
    if kind is ScanKind.FOLD_PRODUCT:
        return len(kfold_sum(kfold_product(a, k, size_cap), k, size_cap=size_cap).exact)
    sums = pairwise(a, a, SetOp.ADD, size_cap).result
    square = pairwise(sums, sums, SetOp.MUL, size_cap).result
    return len(pairwise(square, sums, SetOp.MUL, size_cap).result)


def conjecture_scan(
    kind: ScanKind,
    sets: Sequence[ScalarSet],
    k: int = 2,
    size_cap: int = DEFAULT_SIZE_CAP,
    max_workers: int = 1,
) -> ScanReport:
    """
    Measure every set and keep the minimizers

    Args:
        kind: Quantity to scan
        sets: Sets to measure (see scan_trials for generated ones)
        k: Fold parameter for FOLD_PRODUCT
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    exponent = k if kind is ScanKind.FOLD_PRODUCT else 3
    values = run_trials(lambda s: scan_value(s, kind, k, size_cap), sets, max_workers)

    report = ScanReport(kind, k)
    for index, (s, measured) in enumerate(zip(sets, values)):
        ratio = Fraction(measured, len(s) ** exponent)
        report.entries.append(ScanEntry(index, s.format(), measured, ratio))
        if report.minimum is None or ratio < report.minimum:
            report.minimum, report.minimizers = ratio, [s.format()]
        elif ratio == report.minimum:
            report.minimizers.append(s.format())
    if report.minimum is not None:
        logger.info(f"Scan {kind.value}: minimum ratio {report.minimum} over {len(sets)} sets")
    return report


def scan_trials(kind: ScanKind, spec: TrialSpec, k: int = 2, **kwargs) -> ScanReport:
    return conjecture_scan(kind, trial_sets(spec), k, **kwargs)
