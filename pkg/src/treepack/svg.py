"""SVG drawings of packings and centers. The only place coordinates become floats."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Sequence

from .geometry import Point2

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)


@dataclass(frozen=True)
class SvgOptions:
    width: int = 600
    height: int = 600
    margin: float = 0.05
    point_radius: float = 4.0
    stroke_width: float = 1.5
    labels: bool = True


class _Frame:
    """Maps data coordinates into the view box, y pointing up."""

    def __init__(self, coords: Sequence[tuple[float, float]], opts: SvgOptions):
        xs = [c[0] for c in coords]
        ys = [c[1] for c in coords]
        self.x0, self.y0 = min(xs), min(ys)
        span = max(max(xs) - self.x0, max(ys) - self.y0) or 1.0
        inner = min(opts.width, opts.height) * (1 - 2 * opts.margin)
        self.k = inner / span
        self.mx = opts.width * opts.margin
        self.my = opts.height * opts.margin
        self.h = opts.height

    def __call__(self, p) -> tuple[str, str]:
        x = self.mx + (float(p[0]) - self.x0) * self.k
        y = self.h - self.my - (float(p[1]) - self.y0) * self.k
        return f"{x:.3f}", f"{y:.3f}"


def render_svg(pts: Sequence[Point2], packing=None, region=None,
               options: SvgOptions | None = None) -> str:
    opts = options or SvgOptions()
    extra = list(region.vertices) if region is not None else []
    if packing is not None:
        extra.append(packing.centerpoint.c)
    frame = _Frame([(float(p.x), float(p.y)) for p in list(pts) + extra], opts)

    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "viewBox": f"0 0 {opts.width} {opts.height}",
        "width": str(opts.width),
        "height": str(opts.height),
    })
    ET.SubElement(svg, "rect", {"width": "100%", "height": "100%", "fill": "white"})

    if region is not None and region.vertices:
        _draw_region(svg, region, frame, opts)

    if packing is not None:
        for idx, tree in enumerate(packing.trees):
            layer = ET.SubElement(svg, "g", {
                "class": "tree",
                "id": f"tree-{idx + 1}",
                "stroke": PALETTE[idx % len(PALETTE)],
                "stroke-width": str(opts.stroke_width),
            })
            for tail, head in tree.edges:
                (x1, y1), (x2, y2) = frame(pts[tail]), frame(pts[head])
                ET.SubElement(layer, "line", {"x1": x1, "y1": y1, "x2": x2, "y2": y2})

    labels = {}
    if packing is not None:
        labels = {idx: f"p{pos}" for pos, idx in enumerate(packing.radial_order.order, 1)}
    layer = ET.SubElement(svg, "g", {"class": "points", "fill": "black"})
    for idx, p in enumerate(pts):
        cx, cy = frame(p)
        ET.SubElement(layer, "circle", {"cx": cx, "cy": cy, "r": str(opts.point_radius),
                                        "data-index": str(idx)})
        if opts.labels:
            text = ET.SubElement(layer, "text", {
                "x": f"{float(cx) + 6:.3f}", "y": f"{float(cy) - 6:.3f}", "font-size": "12"})
            text.text = labels.get(idx, str(idx))

    if packing is not None:
        cx, cy = frame(packing.centerpoint.c)
        ET.SubElement(svg, "circle", {
            "class": "centerpoint", "cx": cx, "cy": cy, "r": str(opts.point_radius * 1.5),
            "fill": "none", "stroke": "black", "stroke-width": "2"})
    return ET.tostring(svg, encoding="unicode") + "\n"


def _draw_region(svg, region, frame, opts):
    style = {"class": "center-region", "fill": "#ffd70080", "stroke": "#b8860b",
             "stroke-width": str(opts.stroke_width)}
    verts = [frame(v) for v in region.vertices]
    if len(verts) == 1:
        x, y = verts[0]
        ET.SubElement(svg, "circle", dict(style, cx=x, cy=y, r=str(opts.point_radius * 2.5)))
    elif len(verts) == 2:
        (x1, y1), (x2, y2) = verts
        ET.SubElement(svg, "line", dict(style, x1=x1, y1=y1, x2=x2, y2=y2))
    else:
        ET.SubElement(svg, "polygon", dict(style, points=" ".join(f"{x},{y}" for x, y in verts)))
