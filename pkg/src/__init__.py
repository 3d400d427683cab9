"""Ratio-Set Workbench - exact sum-product set algebra and verification."""

__version__ = "0.1.0"
