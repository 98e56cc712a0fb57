"""SVG rendering of the figure.

Coordinates are exact until the very last step, where each one is rounded to
three decimals of a pixel.  Output is byte-for-byte deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable
from xml.sax.saxutils import escape

from .comparisons import ComparisonSet
from .exact_geom import Point
from .figure import CelliFigure, Color

SHOW_ALL = frozenset({"squares", "pieces", "colored", "euclid", "parallelograms", "labels"})

DEFAULT_COLORS = {"red": "#d62728", "green": "#2ca02c", "blue": "#1f77b4"}


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    padding_fraction: Fraction = Fraction(1, 20)
    show: frozenset = SHOW_ALL
    color_map: dict = field(default_factory=lambda: dict(DEFAULT_COLORS))

    def __post_init__(self):
        pad = Fraction(self.padding_fraction)
        if not (0 <= pad < Fraction(1, 2)):
            raise ValueError("padding_fraction must lie in [0, 1/2)")
        object.__setattr__(self, "padding_fraction", pad)
        if self.width_px <= 0:
            raise ValueError("width_px must be positive")
        missing = {"red", "green", "blue"} - set(self.color_map)
        if missing:
            raise ValueError(f"color_map lacks {', '.join(sorted(missing))}")
        unknown = set(self.show) - SHOW_ALL
        if unknown:
            raise ValueError(f"unknown show item(s): {', '.join(sorted(unknown))}")
        object.__setattr__(self, "show", frozenset(self.show))


def _num(v: Fraction) -> str:
    """Fixed three-decimal rendering of an exact value (half-even rounding)."""
    milli = round(Fraction(v) * 1000)
    sign = "-" if milli < 0 else ""
    whole, frac = divmod(abs(milli), 1000)
    return f"{sign}{whole}.{frac:03d}"


class _Frame:
    """World to pixel map: uniform scale, y flipped."""

    def __init__(self, points: Iterable[Point], opts: RenderOptions):
        pts = list(points)
        self.min_x = min(p.x for p in pts)
        self.max_y = max(p.y for p in pts)
        span_x = max(p.x for p in pts) - self.min_x
        span_y = self.max_y - min(p.y for p in pts)
        inner = opts.width_px * (1 - 2 * opts.padding_fraction)
        self.scale = inner / span_x if span_x else Fraction(1)
        self.pad = opts.width_px * opts.padding_fraction
        self.width = Fraction(opts.width_px)
        self.height = span_y * self.scale + 2 * self.pad

    def xy(self, p: Point) -> tuple[Fraction, Fraction]:
        return (self.pad + (p.x - self.min_x) * self.scale, self.pad + (self.max_y - p.y) * self.scale)

    def path(self, pts: Iterable[Point]) -> str:
        cmds = []
        for i, p in enumerate(pts):
            x, y = self.xy(p)
            cmds.append(f"{'M' if i == 0 else 'L'}{_num(x)},{_num(y)}")
        return " ".join(cmds) + " Z"


def _drawn_points(figure: CelliFigure, comparisons: ComparisonSet | None, show) -> list[Point]:
    t = figure.triangle
    pts = [t.A, t.B, t.C]
    for d in figure.dissections:
        if show & {"squares", "pieces", "colored", "labels"}:
            pts.extend(d.square.corners)
        if show & {"pieces", "colored", "labels"}:
            pts.append(d.apex_reflected)
    if comparisons is not None and "parallelograms" in show:
        for par in list(comparisons.anderson.values()) + list(comparisons.boyadzhiev.values()):
            pts.extend(par.vertices)
    return pts


def render_svg(
    figure: CelliFigure,
    comparisons: ComparisonSet | None = None,
    options: RenderOptions | None = None,
) -> str:
    opts = options or RenderOptions()
    show = opts.show
    colors = opts.color_map
    frame = _Frame(_drawn_points(figure, comparisons, show), opts)
    w, h = _num(frame.width), _num(frame.height)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        "<defs>",
    ]
    for name in ("red", "green", "blue"):
        lines.append(
            f'<pattern id="hatch-{name}" patternUnits="userSpaceOnUse" width="6" height="6" '
            f'patternTransform="rotate(45)"><line x1="0" y1="0" x2="0" y2="6" '
            f'stroke="{escape(colors[name])}" stroke-width="2"/></pattern>'
        )
    lines.append("</defs>")

    if "squares" in show:
        for d in figure.dissections:
            c = escape(colors[d.color.value])
            lines.append(
                f'<path class="square" data-color="{d.color.value}" d="{frame.path(d.square.corners)}" '
                f'fill="none" stroke="{c}" stroke-width="2"/>'
            )
    if "pieces" in show:
        for d in figure.dissections:
            c = escape(colors[d.color.value])
            for idx, tri in sorted(d.indexed_pieces().items()):
                negative = d.area(tri) < 0
                fill = f'url(#hatch-{d.color.value})' if negative else c
                cls = "piece negative" if negative else "piece"
                lines.append(
                    f'<path class="{cls}" data-color="{d.color.value}" data-index="{idx}" '
                    f'd="{frame.path(tri.vertices)}" fill="{fill}" fill-opacity="0.25" '
                    f'stroke="{c}" stroke-width="0.75"/>'
                )
    if "colored" in show:
        # a colored triangle takes the color of its pair, not of its host square
        for color in (Color.BLUE, Color.GREEN, Color.RED):
            pair = figure.pairs[color]
            c = escape(colors[color.value])
            for tri in (pair.copy1, pair.copy2):
                lines.append(
                    f'<path class="colored" data-color="{color.value}" '
                    f'data-anchor="{pair.anchor_vertex}" d="{frame.path(tri.vertices)}" '
                    f'fill="{c}" fill-opacity="0.7" stroke="black" stroke-width="0.75"/>'
                )
    if comparisons is not None and "euclid" in show:
        for (anchor, color), e in sorted(comparisons.euclid.items(), key=lambda kv: (kv[0][0], kv[0][1].value)):
            lines.append(
                f'<path class="euclid" data-anchor="{anchor}" data-host="{color.value}" '
                f'd="{frame.path(e.vertices.vertices)}" fill="none" stroke="black" '
                f'stroke-dasharray="4 3" stroke-width="1"/>'
            )
    if comparisons is not None and "parallelograms" in show:
        for fam, style in (("anderson", "6 2"), ("boyadzhiev", "2 2")):
            group = getattr(comparisons, fam)
            for (anchor, color), par in sorted(group.items(), key=lambda kv: (kv[0][0], kv[0][1].value)):
                lines.append(
                    f'<path class="parallelogram {fam}" data-anchor="{anchor}" '
                    f'data-host="{color.value}" d="{frame.path(par.vertices)}" fill="none" '
                    f'stroke="{escape(colors[color.value])}" stroke-dasharray="{style}" stroke-width="1"/>'
                )

    t = figure.triangle
    lines.append(
        f'<path class="triangle" d="{frame.path((t.A, t.B, t.C))}" fill="none" '
        f'stroke="black" stroke-width="2"/>'
    )
    if "labels" in show:
        named = [("A", t.A), ("B", t.B), ("C", t.C)]
        named += [(d.labels[2] + "′", d.apex_reflected) for d in figure.dissections]
        for name, p in named:
            x, y = frame.xy(p)
            lines.append(
                f'<text class="label" x="{_num(x + 4)}" y="{_num(y - 4)}" font-family="sans-serif" '
                f'font-size="14">{escape(name)}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
