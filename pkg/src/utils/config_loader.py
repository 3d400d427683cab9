"""
Configuration Loader
Loads and validates the YAML configuration for the ratio-set workbench
"""

import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

from src.arith.rational import parse_real
from src.arith.wedge import DEFAULT_WEDGE_SLOPE, WedgeSpec


logger = logging.getLogger(__name__)

CONFIG_FILE = "workbench_config.yaml"


@dataclass
class ArithmeticConfig:
    """Exact arithmetic settings"""
    wedge_slope: Fraction = DEFAULT_WEDGE_SLOPE

    def wedge(self) -> WedgeSpec:
        return WedgeSpec(self.wedge_slope)


@dataclass
class SetAlgebraConfig:
    """Set operation limits"""
    size_cap: int = 10_000_000


@dataclass
class ComplexConfig:
    """Sector pigeonholing and region probe settings"""
    sector_count: int = 8
    probe_resolution: int = 256


@dataclass
class HarnessConfig:
    """Trial execution settings"""
    seed: int = 0
    max_workers: int = 1
    include_timing: bool = True


@dataclass
class RenderConfig:
    """SVG output settings"""
    float_precision: int = 3


@dataclass
class LoggingConfig:
    """Logging settings"""
    level: str = "INFO"
    file: Optional[str] = None


@dataclass
class WorkbenchConfig:
    """All configuration sections"""
    arithmetic: ArithmeticConfig = field(default_factory=ArithmeticConfig)
    set_algebra: SetAlgebraConfig = field(default_factory=SetAlgebraConfig)
    complex: ComplexConfig = field(default_factory=ComplexConfig)
    harness: HarnessConfig = field(default_factory=HarnessConfig)
    render: RenderConfig = field(default_factory=RenderConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


class ConfigLoader:
    """Load and manage configuration files"""

    def __init__(self, config_dir: str = "config"):
        """
        Initialize configuration loader

        Args:
            config_dir: Directory containing configuration files
        """
        self.config_dir = Path(config_dir)

        if not self.config_dir.exists():
            raise ValueError(f"Configuration directory not found: {config_dir}")

        load_dotenv()

    def load_yaml(self, filename: str) -> Dict[str, Any]:
        """
        Load a YAML configuration file

        Args:
            filename: Name of the YAML file

        Returns:
            Dictionary containing configuration data
        """
        filepath = self.config_dir / filename

        if not filepath.exists():
            raise FileNotFoundError(f"Configuration file not found: {filepath}")

        try:
            with open(filepath, 'r') as f:
                config = yaml.safe_load(f) or {}

            # Replace environment variables
            return self._replace_env_vars(config)
        except yaml.YAMLError as e:
            raise ValueError(f"Error parsing YAML file {filename}: {e}")

    def _replace_env_vars(self, config: Any) -> Any:
        """
        Recursively replace ${VAR_NAME} placeholders

        Args:
            config: Configuration data (dict, list, or primitive)

        Returns:
            Configuration with environment variables replaced
        """
        if isinstance(config, dict):
            return {k: self._replace_env_vars(v) for k, v in config.items()}
        elif isinstance(config, list):
            return [self._replace_env_vars(item) for item in config]
        elif isinstance(config, str):
            if config.startswith('${') and config.endswith('}'):
                var_name = config[2:-1]
                return os.getenv(var_name, config)  # Return original if not found
            return config
        else:
            return config

    def load_workbench_config(self, filename: str = CONFIG_FILE) -> WorkbenchConfig:
        """
        Build typed configuration; missing sections and keys keep their defaults

        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: On malformed YAML or values
        """
        raw = self.load_yaml(filename)
        arithmetic = raw.get('arithmetic', {}) or {}
        set_algebra = raw.get('set_algebra', {}) or {}
        complex_cfg = raw.get('complex', {}) or {}
        harness = raw.get('harness', {}) or {}
        render = raw.get('render', {}) or {}
        logging_cfg = raw.get('logging', {}) or {}

        try:
            return WorkbenchConfig(
                arithmetic=ArithmeticConfig(
                    wedge_slope=parse_real(str(arithmetic.get('wedge_slope', DEFAULT_WEDGE_SLOPE)))
                ),
                set_algebra=SetAlgebraConfig(size_cap=int(set_algebra.get('size_cap', 10_000_000))),
                complex=ComplexConfig(
                    sector_count=int(complex_cfg.get('sector_count', 8)),
                    probe_resolution=int(complex_cfg.get('probe_resolution', 256)),
                ),
                harness=HarnessConfig(
                    seed=int(harness.get('seed', 0)),
                    max_workers=int(harness.get('max_workers', 1)),
                    include_timing=_as_bool(harness.get('include_timing', True)),
                ),
                render=RenderConfig(
                    float_precision=int(render.get('float_precision', 3)),
                ),
                logging=LoggingConfig(
                    level=str(logging_cfg.get('level', 'INFO')).upper(),
                    file=logging_cfg.get('file') or None,
                ),
            )
        except (TypeError, ValueError) as e:
            raise ValueError(f"Invalid value in {filename}: {e}")

    def validate_config(self, config: Optional[WorkbenchConfig] = None) -> bool:
        """
        Validate configuration values

        Returns:
            True if the configuration is usable
        """
        try:
            config = config or self.load_workbench_config()
        except (FileNotFoundError, ValueError) as e:
            logger.error(f"Configuration validation failed: {e}")
            return False

        problems = config_problems(config)
        for problem in problems:
            logger.error(f"Invalid configuration: {problem}")
        return not problems


def _as_bool(value: Any) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in ('1', 'true', 'yes', 'on')
    return bool(value)


# Convenience function for loading configuration
def load_config(config_dir: str = "config") -> WorkbenchConfig:
    """
    Load the workbench configuration, falling back to defaults without a config file

    Args:
        config_dir: Directory containing configuration files
    """
    path = Path(config_dir)
    if not (path / CONFIG_FILE).exists():
        logger.debug(f"No {CONFIG_FILE} in {config_dir}; using defaults")
        return WorkbenchConfig()
    return ConfigLoader(config_dir).load_workbench_config()


def config_problems(config: WorkbenchConfig) -> List[str]:
    """Human-readable list of invalid values (empty when valid)"""
    problems = []
    if config.arithmetic.wedge_slope <= 0:
        problems.append(f"wedge_slope must be positive, got {config.arithmetic.wedge_slope}")
    if config.set_algebra.size_cap < 1:
        problems.append(f"size_cap must be at least 1, got {config.set_algebra.size_cap}")
    if config.complex.sector_count < 5:
        problems.append(f"sector_count must be at least 5, got {config.complex.sector_count}")
    if config.complex.probe_resolution < 2:
        problems.append(f"probe_resolution must be at least 2, got {config.complex.probe_resolution}")
    if config.harness.max_workers < 1:
        problems.append(f"max_workers must be at least 1, got {config.harness.max_workers}")
    return problems
