"""
SVG figures

Two deterministic pictures on a fixed 1000×1000 viewBox, drawn in the layer
order axes, lines, points, witnesses:

* slope-cover: the grid A × A, its origin lines and the witness sums with
  their chain provenance as tooltips.
* complex-mst: the ratio points of A/A, their Euclidean spanning tree and
  sampled outlines of the edge regions.

Example:
    svg = render_slope_cover(ScalarSet([1, 2, 3]))
    render_figure(FigureKind.SLOPE_COVER, ScalarSet([1, 2, 3]), "fig.svg")
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from html import escape
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.arith.wedge import WedgeSpec
from src.geometry.mst import euclidean_mst
from src.geometry.region_probe import boundary_samples
from src.geometry.slope_cover import build_grid, slope_cover, thm1_witnesses
from src.sets.scalar_set import ScalarSet, SetOp, pairwise


logger = logging.getLogger(__name__)

VIEWBOX = 1000
MARGIN = 50
SVG_NS = "http://www.w3.org/2000/svg"


class FigureKind(Enum):
    SLOPE_COVER = "slope-cover"
    COMPLEX_MST = "complex-mst"


def number_repr(value: float, precision: int = 3) -> str:
    """Fixed-precision float text without trailing zeros or negative zero"""
    text = f"{value:.{precision}f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


@dataclass
class Element:
    """Minimal SVG node; attributes render in insertion order"""
    tag: str
    attrs: Dict[str, Union[str, float, int]] = field(default_factory=dict)
    children: List["Element"] = field(default_factory=list)
    text: Optional[str] = None

    def svg(self, precision: int = 3, indent: int = 0) -> str:
        pad = "  " * indent
        props = "".join(
            f' {k.replace("_", "-")}="{number_repr(v, precision) if isinstance(v, float) else escape(str(v))}"'
            for k, v in self.attrs.items()
        )
        if not self.children and self.text is None:
            return f"{pad}<{self.tag}{props}/>"
        if self.text is not None and not self.children:
            return f"{pad}<{self.tag}{props}>{escape(self.text)}</{self.tag}>"
        inner = "\n".join(child.svg(precision, indent + 1) for child in self.children)
        return f"{pad}<{self.tag}{props}>\n{inner}\n{pad}</{self.tag}>"


class Canvas:
    """Maps world coordinates into the viewBox with equal x and y scales"""

    def __init__(self, xmin: float, xmax: float, ymin: float, ymax: float):
        span = max(xmax - xmin, ymax - ymin) or 1.0
        self.xmin, self.ymin = xmin, ymin
        self.scale = (VIEWBOX - 2 * MARGIN) / span

    def point(self, x: float, y: float) -> Tuple[float, float]:
        return (
            MARGIN + (x - self.xmin) * self.scale,
            VIEWBOX - MARGIN - (y - self.ymin) * self.scale,
        )

    def line(self, x1: float, y1: float, x2: float, y2: float, **attrs) -> Element:
        sx1, sy1 = self.point(x1, y1)
        sx2, sy2 = self.point(x2, y2)
        return Element("line", {"x1": sx1, "y1": sy1, "x2": sx2, "y2": sy2, **attrs})

    def circle(self, x: float, y: float, r: float, title: Optional[str] = None, **attrs) -> Element:
        cx, cy = self.point(x, y)
        node = Element("circle", {"cx": cx, "cy": cy, "r": float(r), **attrs})
        if title is not None:
            node.children.append(Element("title", text=title))
        return node

    def polyline(self, xs: Sequence[float], ys: Sequence[float], **attrs) -> Element:
        points = " ".join(
            f"{number_repr(sx)},{number_repr(sy)}" for sx, sy in (self.point(x, y) for x, y in zip(xs, ys))
        )
        return Element("polyline", {"points": points, **attrs})


def _document(layers: Dict[str, List[Element]], title: str) -> Element:
    root = Element(
        "svg",
        {"xmlns": SVG_NS, "version": "1.1", "viewBox": f"0 0 {VIEWBOX} {VIEWBOX}",
         "width": VIEWBOX, "height": VIEWBOX},
    )
    root.children.append(Element("title", text=title))
    for name in ("axes", "lines", "points", "witnesses"):
        root.children.append(Element("g", {"id": name}, layers.get(name, [])))
    return root


def _axes(canvas: Canvas, xmin: float, xmax: float, ymin: float, ymax: float) -> List[Element]:
    style = {"stroke": "#888888", "stroke_width": 1}
    return [
        canvas.line(xmin, 0.0, xmax, 0.0, **{"class": "axis"}, **style),
        canvas.line(0.0, ymin, 0.0, ymax, **{"class": "axis"}, **style),
    ]


def render_slope_cover(a: ScalarSet, precision: int = 3) -> str:
    """
    Grid points, origin lines and witness sums for a set of positive reals

    Raises:
        ValueError: If A is empty or not positive reals
    """
    grid = build_grid(a)
    cover = slope_cover(grid)
    report = thm1_witnesses(a)
    extent = float(max(max(w.source) for w in report.witnesses)) * 1.05
    canvas = Canvas(0.0, extent, 0.0, extent)

    lines = []
    for line in cover.lines:
        m = float(line.slope)
        end = (extent, m * extent) if m <= 1 else (extent / m, extent)
        lines.append(canvas.line(0.0, 0.0, *end, **{"class": "origin-line"}, stroke="#4477aa", stroke_width=1))
    points = [
        canvas.circle(float(p.x), float(p.y), 5, title=f"({p.x}, {p.y})", **{"class": "grid-point"}, fill="#222222")
        for p in sorted(grid, key=lambda p: (p.x, p.y))
    ]
    witnesses = [
        canvas.circle(float(w.source[0]), float(w.source[1]), 3, title=w.provenance, **{"class": "witness"}, fill="#cc3311")
        for w in report.witnesses
    ]
    doc = _document(
        {"axes": _axes(canvas, 0.0, extent, 0.0, extent), "lines": lines, "points": points, "witnesses": witnesses},
        f"slope cover of {a.format()}",
    )
    return doc.svg(precision) + "\n"


def render_complex_mst(
    a: ScalarSet,
    wedge: Optional[WedgeSpec] = None,
    resolution: int = 64,
    precision: int = 3,
) -> str:
    """
    Ratio points of A/A (0 deleted), their spanning tree and edge-region outlines

    Raises:
        ValueError: If A has fewer than two nonzero elements
    """
    wedge = wedge or WedgeSpec()
    nonzero = a.as_complex().without_zero()
    if len(nonzero) < 2:
        raise ValueError("complex-mst figure needs at least two nonzero elements")
    ratios = pairwise(nonzero, nonzero, SetOp.DIV).result
    mst = euclidean_mst(list(ratios))
    coords = np.array([v.to_complex() for v in mst.vertices])
    pad = 0.15 * max(float(np.ptp(coords.real)), float(np.ptp(coords.imag)), 1.0)
    xmin, xmax = float(coords.real.min()) - pad, float(coords.real.max()) + pad
    ymin, ymax = float(coords.imag.min()) - pad, float(coords.imag.max()) + pad
    canvas = Canvas(xmin, xmax, ymin, ymax)

    lines = []
    slope = float(wedge.slope_bound)
    for i, j in mst.edges:
        l_i, l_j = coords[i], coords[j]
        lines.append(canvas.line(l_i.real, l_i.imag, l_j.real, l_j.imag, **{"class": "mst-edge"}, stroke="#4477aa", stroke_width=2))
        arcs = boundary_samples(l_i, l_j, slope, resolution).reshape(2, resolution)
        for arc in arcs:
            xs = np.concatenate(([l_i.real], arc.real, [l_j.real]))
            ys = np.concatenate(([l_i.imag], arc.imag, [l_j.imag]))
            lines.append(canvas.polyline(xs, ys, **{"class": "region"}, fill="none", stroke="#66ccee", stroke_width=1))
    points = [
        canvas.circle(z.real, z.imag, 5, title=str(v), **{"class": "ratio-point"}, fill="#222222")
        for v, z in zip(mst.vertices, coords)
    ]
    doc = _document(
        {"axes": _axes(canvas, xmin, xmax, ymin, ymax), "lines": lines, "points": points},
        f"ratio points of {a.format()}",
    )
    return doc.svg(precision) + "\n"


def render_figure(
    kind: FigureKind,
    a: ScalarSet,
    out_path: Union[str, Path],
    wedge: Optional[WedgeSpec] = None,
    precision: int = 3,
) -> Path:
    """
    Render a figure to out_path

    Raises:
        ValueError: If the set does not suit the figure kind (e.g. empty)
        OSError: If the file cannot be written
    """
    if not a:
        raise ValueError("cannot render an empty set")
    if kind is FigureKind.SLOPE_COVER:
        text = render_slope_cover(a, precision)
    else:
        text = render_complex_mst(a, wedge, precision=precision)
    path = Path(out_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {kind.value} figure to {path}")
    return path
