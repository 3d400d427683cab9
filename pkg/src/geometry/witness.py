"""
Witness reports

A witness is a ratio that a constructive argument certifies as an element of
some ratio set, tagged with where in the construction it came from.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.arith.scalars import Scalar, format_scalar, scalar_sort_key
from src.utils.errors import InvariantViolation


@dataclass(frozen=True)
class Witness:
    """
    Attributes:
        ratio: Certified ratio (second coordinate over first)
        provenance: Construction tag, e.g. "chain:2:q:3" or "diagonal:4"
        source: (first, second) coordinates of the vector sum realising the ratio
    """
    ratio: Scalar
    provenance: str
    source: Optional[Tuple[Scalar, Scalar]] = None


@dataclass
class WitnessReport:
    """
    Constructed witnesses against a target count

    Attributes:
        witnesses: Distinct witnesses in construction order
        distinct_count: len(witnesses)
        target_bound: Count the construction must reach
        passed: distinct_count >= target_bound (and no violations)
        constants: Measured quantities (empirical constants, intermediate counts)
        violations: Diagnostics that do not abort the construction
        notes: Free-text remarks
    """
    witnesses: List[Witness]
    distinct_count: int
    target_bound: int
    passed: bool
    constants: Dict[str, Any] = field(default_factory=dict)
    violations: List[Dict[str, Any]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @classmethod
    def build(
        cls,
        witnesses: Sequence[Witness],
        target_bound: int,
        constants: Optional[Dict[str, Any]] = None,
        notes: Optional[List[str]] = None,
    ) -> "WitnessReport":
        """
        Assemble a report, insisting the witnesses are pairwise distinct

        Raises:
            InvariantViolation: If two witnesses share a ratio
        """
        seen: Dict[Scalar, Witness] = {}
        for witness in witnesses:
            if witness.ratio in seen:
                raise InvariantViolation(
                    "witness ratios are not pairwise distinct",
                    {
                        "ratio": format_scalar(witness.ratio),
                        "first": seen[witness.ratio].provenance,
                        "second": witness.provenance,
                    },
                )
            seen[witness.ratio] = witness
        count = len(witnesses)
        return cls(
            witnesses=list(witnesses),
            distinct_count=count,
            target_bound=target_bound,
            passed=count >= target_bound,
            constants=constants or {},
            notes=notes or [],
        )

    def ratio_set(self) -> frozenset:
        return frozenset(w.ratio for w in self.witnesses)


def format_witness_dump(report: WitnessReport) -> str:
    """One ``ratio<TAB>provenance`` line per witness, sorted by ratio"""
    ordered = sorted(report.witnesses, key=lambda w: scalar_sort_key(w.ratio))
    return "".join(f"{format_scalar(w.ratio)}\t{w.provenance}\n" for w in ordered)


def parse_witness_dump(text: str) -> List[Tuple[str, str]]:
    rows = []
    for line in text.splitlines():
        if line.strip():
            ratio, provenance = line.split("\t", 1)
            rows.append((ratio, provenance))
    return rows


def write_witness_dump(report: WitnessReport, path: Union[str, Path]) -> Path:
    filepath = Path(path)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    filepath.write_text(format_witness_dump(report), encoding="utf-8")
    return filepath
