"""
Set File Loader

UTF-8 text, one scalar per line, ``#`` starts a comment, blank lines are
ignored. Repeated values collapse silently; the number of collapsed lines is
returned so reports can mention it.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Union

from src.arith.scalars import Scalar, parse_scalar
from src.sets.scalar_set import ScalarSet


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SetFileResult:
    """
    Attributes:
        scalar_set: Parsed set
        duplicate_count: Lines whose value was already present
        source: File path or label
    """
    scalar_set: ScalarSet
    duplicate_count: int
    source: str


def parse_set_text(text: str, source: str = "<text>") -> SetFileResult:
    """
    Parse set-file text

    Raises:
        ValueError: On a malformed line (message carries source and line number)
    """
    values: List[Scalar] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(parse_scalar(line))
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"{source}:{lineno}: {e}")
    scalar_set = ScalarSet(values)
    duplicates = len(values) - len(scalar_set)
    if duplicates:
        logger.warning(f"{source}: {duplicates} duplicate value(s) collapsed")
    return SetFileResult(scalar_set, duplicates, source)


def load_set_file(path: Union[str, Path]) -> SetFileResult:
    """
    Load a set file from disk

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: On malformed content
    """
    filepath = Path(path)
    if not filepath.exists():
        raise FileNotFoundError(f"Set file not found: {filepath}")
    return parse_set_text(filepath.read_text(encoding="utf-8"), str(filepath))
