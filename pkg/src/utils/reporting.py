"""
Verification reports

Machine-readable outcome of one verification task plus the document that
bundles several of them for ``--report FILE.json``. Exact values are written
as canonical fraction strings; reports are deterministic apart from
``elapsed_ms``, which can be switched off.
"""

import hashlib
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Union

from src.arith.gaussian import GaussianRational
from src.arith.scalars import format_scalar


def exact_str(value: Any) -> Any:
    """Canonical string for exact values; other JSON-able values pass through"""
    if isinstance(value, bool):
        return value
    if isinstance(value, (Fraction, GaussianRational)):
        return format_scalar(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): exact_str(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact_str(v) for v in value]
    return value


def digest_input(payload: Dict[str, Any]) -> str:
    """sha256 over the canonical JSON form of the task input"""
    canonical = json.dumps(exact_str(payload), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


@dataclass
class VerificationReport:
    """
    Outcome of a bound-versus-measurement check

    Attributes:
        task: Task identifier (e.g. 'thm1', 'lemma3')
        input: Description of the inputs (sets as canonical strings, parameters)
        bound: Claimed bound, exact string
        measured: Measured value, exact string
        passed: Whether measured satisfies the claimed inequality
        constants: Empirical constants and intermediate quantities
        elapsed_ms: Wall-clock time spent
        notes: Remarks (advisory results, certificates used)
    """
    task: str
    input: Dict[str, Any]
    bound: str
    measured: str
    passed: bool
    constants: Dict[str, Any] = field(default_factory=dict)
    elapsed_ms: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def input_digest(self) -> str:
        return digest_input(self.input)

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        return {
            "task": self.task,
            "input": exact_str({**self.input, "digest": self.input_digest}),
            "bound": self.bound,
            "measured": self.measured,
            "pass": self.passed,
            "constants": exact_str(self.constants),
            "elapsed_ms": round(self.elapsed_ms, 3) if include_timing else 0,
            "notes": list(self.notes),
        }


@dataclass
class ReportDocument:
    """One or more reports with environment metadata"""
    reports: List[VerificationReport] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self, include_timing: bool = True) -> str:
        payload = {
            "metadata": exact_str(self.metadata),
            "reports": [r.to_dict(include_timing) for r in self.reports],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def write(self, path: Union[str, Path], include_timing: bool = True) -> Path:
        filepath = Path(path)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        filepath.write_text(self.to_json(include_timing), encoding="utf-8")
        return filepath


@contextmanager
def stopwatch() -> Iterator[Dict[str, float]]:
    """Yields a dict whose 'ms' entry holds the elapsed time after the block"""
    timing = {"ms": 0.0}
    start = time.perf_counter()
    try:
        yield timing
    finally:
        timing["ms"] = (time.perf_counter() - start) * 1000.0


def set_input(**sets: Optional[Any]) -> Dict[str, Any]:
    """Input description from named ScalarSets (or plain values)"""
    described = {}
    for name, value in sets.items():
        described[name] = value.format() if hasattr(value, "format") and not isinstance(value, str) else value
    return described
