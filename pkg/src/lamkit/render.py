"""Deterministic SVG pictures of laminations.

Exact angles are turned into coordinates only here, at a fixed precision, so
the same lamination always yields the same bytes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .circle import ccw, fmt_angle
from .lamination import Lamination

DEFAULT_PALETTE = {
    "finite_lap": "#f4c542",
    "caterpillar": "#e07b39",
    "siegel_candidate": "#6cc24a",
    "fatou_candidate": "#7fb3e6",
    "unresolved": "none",
}


@dataclass(frozen=True)
class RenderSpec:
    size: int = 600
    leaf_color: str = "#1f2d3d"
    leaf_width: float = 0.8
    gap_palette: dict = field(default_factory=lambda: dict(DEFAULT_PALETTE))
    label_angles: bool = False
    title: Optional[str] = None


def _num(x: float) -> str:
    s = f"{x:.12f}"
    return "0.000000000000" if s == "-0.000000000000" else s


class _Frame:
    def __init__(self, size: int):
        self.c = size / 2
        self.r = size / 2 * 0.9

    def point(self, t: Fraction, scale: float = 1.0) -> tuple[str, str]:
        th = 2 * math.pi * float(t)
        return (_num(self.c + scale * self.r * math.cos(th)),
                _num(self.c - scale * self.r * math.sin(th)))


def _fill_for(tag: str, palette: dict) -> str:
    if tag in palette:
        return palette[tag]
    if tag.startswith("fatou_candidate"):
        return palette.get("fatou_candidate", "none")
    return "none"


def _gap_path(g, frame: _Frame) -> str:
    if not g.vertices:
        x, y = frame.point(Fraction(0))
        x2, y2 = frame.point(Fraction(1, 2))
        r = _num(frame.r)
        return f"M {x} {y} A {r} {r} 0 1 0 {x2} {y2} A {r} {r} 0 1 0 {x} {y} Z"
    parts = []
    x, y = frame.point(g.vertices[0])
    parts.append(f"M {x} {y}")
    r = _num(frame.r)
    for s, e, arc in g.pieces():
        x, y = frame.point(e)
        if arc:
            large = 1 if ccw(s, e) > Fraction(1, 2) or s == e else 0
            # sweep flag 0 runs counterclockwise as displayed
            parts.append(f"A {r} {r} 0 {large} 0 {x} {y}")
        else:
            parts.append(f"L {x} {y}")
    parts.append("Z")
    return " ".join(parts)


def render_svg(L: Lamination, gaps=None, spec: RenderSpec = RenderSpec()) -> str:
    """SVG 1.1 text: unit circle, straight leaves, optional gap fills and labels.

    ``gaps`` is a list of (Gap, tag) pairs, for instance from classify_gap.
    """
    frame = _Frame(spec.size)
    size = spec.size
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}"'
        f' viewBox="0 0 {size} {size}">',
    ]
    if spec.title:
        out.append(f"<title>{escape(spec.title)}</title>")
    out.append(f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>')
    if gaps:
        out.append('<g id="gaps" stroke="none" fill-opacity="0.6">')
        for g, tag in sorted(gaps, key=lambda p: (p[0].vertices, str(p[1]))):
            fill = _fill_for(str(getattr(tag, "tag", tag)), spec.gap_palette)
            if fill == "none":
                continue
            out.append(f'<path d="{_gap_path(g, frame)}" fill="{fill}"/>')
        out.append("</g>")
    c = _num(frame.c)
    out.append(f'<circle cx="{c}" cy="{c}" r="{_num(frame.r)}" fill="none" stroke="black" stroke-width="1"/>')
    out.append(f'<g id="leaves" stroke="{spec.leaf_color}" stroke-width="{spec.leaf_width}" fill="none">')
    for leaf in L.sorted_leaves:
        x1, y1 = frame.point(leaf.a)
        x2, y2 = frame.point(leaf.b)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    if spec.label_angles:
        pts = sorted({x for c in L.leaves for x in c.endpoints})
        out.append('<g id="labels" font-family="sans-serif" font-size="10" text-anchor="middle">')
        for t in pts:
            x, y = frame.point(t, 1.06)
            out.append(f'<text x="{x}" y="{y}">{fmt_angle(t)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
