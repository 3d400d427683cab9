"""
Utility modules: configuration, report types and error types
"""

from .config_loader import (
    ConfigLoader,
    WorkbenchConfig,
    ArithmeticConfig,
    SetAlgebraConfig,
    ComplexConfig,
    HarnessConfig,
    RenderConfig,
    LoggingConfig,
    load_config,
    config_problems
)
from .errors import SizeCapExceeded, InvariantViolation

__all__ = [
    'ConfigLoader',
    'WorkbenchConfig',
    'ArithmeticConfig',
    'SetAlgebraConfig',
    'ComplexConfig',
    'HarnessConfig',
    'RenderConfig',
    'LoggingConfig',
    'load_config',
    'config_problems',
    'SizeCapExceeded',
    'InvariantViolation'
]
