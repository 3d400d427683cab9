"""
Error types shared across the workbench

Input problems use the built-in exceptions (ValueError, ZeroDivisionError).
The two classes here mark conditions the command line reports with their own
exit codes.
"""

from typing import Any, Dict, Optional


class SizeCapExceeded(RuntimeError):
    """A set operation would grow past the configured element cap"""

    def __init__(self, projected: int, cap: int, context: str = ""):
        self.projected = projected
        self.cap = cap
        self.context = context
        where = f" ({context})" if context else ""
        super().__init__(f"size cap exceeded{where}: projected {projected} > cap {cap}")


class InvariantViolation(RuntimeError):
    """
    A mathematically guaranteed property failed on a concrete instance

    Attributes:
        details: Counterexample data (offending witnesses, edges, quadruples)
    """

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}
