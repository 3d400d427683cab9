"""
Rendering Module

Deterministic SVG figures of the slope cover and of the complex spanning tree.
"""

from .svg import FigureKind, render_figure, render_slope_cover, render_complex_mst

__all__ = [
    'FigureKind',
    'render_figure',
    'render_slope_cover',
    'render_complex_mst',
]
