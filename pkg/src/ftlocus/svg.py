"""Deterministic SVG emission for ball-and-sites scenes.

A Scene bundles a norm, the sites, an optional minimizer region, and any
extra regions to outline (distance segments, cones clipped to a box).
Rendering is pure: the same scene always produces the same bytes.  That
is achieved by a fixed viewport mapping, a fixed element order, ids
assigned by position, and coordinates rounded to four decimals before
formatting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import EMPTY, POINT, POLYGON, SEGMENT, ConvexRegion
from .norms import PolyNorm

WIDTH = 640
HEIGHT = 640
MARGIN = 56.0
SMOOTH_SAMPLES = 96

BALL_STYLE = 'fill="#f4f4f3" stroke="#8a8782" stroke-width="1.5"'
LOCUS_FILL = 'fill="#a7c8f0" fill-opacity="0.75" stroke="#2458b3" stroke-width="2"'
LOCUS_LINE = 'stroke="#2458b3" stroke-width="4.5" stroke-linecap="round"'
LOCUS_POINT = 'fill="#2458b3"'
OUTLINE_STYLE = 'fill="none" stroke="#d2622a" stroke-width="1.6" stroke-dasharray="7 4"'
OUTLINE_POINT = 'fill="none" stroke="#d2622a" stroke-width="1.6"'
SITE_STYLE = 'fill="#1c1c1a"'
LABEL_STYLE = 'font-family="Helvetica,Arial,sans-serif" font-size="15" fill="#1c1c1a"'


@dataclass(frozen=True)
class Scene:
    norm: object
    sites: tuple
    locus: ConvexRegion | None = None
    outlines: tuple = field(default_factory=tuple)


def _fnum(v: float) -> str:
    # round-then-add-zero collapses -0.0000 to 0.0000
    return "%.4f" % (round(v, 4) + 0.0)


def _ball_outline(norm):
    if isinstance(norm, PolyNorm):
        return [(float(v.x), float(v.y)) for v in norm.vertices]
    p = float(norm.p)
    pts = []
    for k in range(SMOOTH_SAMPLES):
        t = 2.0 * math.pi * k / SMOOTH_SAMPLES
        c, s = math.cos(t), math.sin(t)
        pts.append(
            (
                math.copysign(abs(c) ** (2.0 / p), c),
                math.copysign(abs(s) ** (2.0 / p), s),
            )
        )
    return pts


def _region_points(region: ConvexRegion):
    return [(float(v.x), float(v.y)) for v in region.vertices]


class _Viewport:
    """Uniform world-to-pixel map fitting every drawable with margin."""

    def __init__(self, points):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        cx, cy = (min(xs) + max(xs)) / 2.0, (min(ys) + max(ys)) / 2.0
        span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
        self.scale = (WIDTH - 2.0 * MARGIN) / span
        self.cx, self.cy = cx, cy

    def map(self, pt):
        x, y = pt
        return (
            WIDTH / 2.0 + (x - self.cx) * self.scale,
            HEIGHT / 2.0 - (y - self.cy) * self.scale,
        )


def _poly_attr(view, pts) -> str:
    return " ".join("%s,%s" % tuple(map(_fnum, view.map(p))) for p in pts)


def _emit_region(out, view, region, ident, fill_style, line_style, point_style):
    if region.kind == EMPTY:
        return
    if region.kind == POINT:
        x, y = view.map(_region_points(region)[0])
        out.append(
            '<circle id="%s" cx="%s" cy="%s" r="5" %s/>'
            % (ident, _fnum(x), _fnum(y), point_style)
        )
        return
    if region.kind == SEGMENT:
        (ax, ay), (bx, by) = (view.map(p) for p in _region_points(region))
        out.append(
            '<line id="%s" x1="%s" y1="%s" x2="%s" y2="%s" %s/>'
            % (ident, _fnum(ax), _fnum(ay), _fnum(bx), _fnum(by), line_style)
        )
        return
    out.append(
        '<polygon id="%s" points="%s" %s/>'
        % (ident, _poly_attr(view, _region_points(region)), fill_style)
    )


def render_string(scene: Scene) -> str:
    ball = _ball_outline(scene.norm)
    sites = [(float(x), float(y)) for x, y in scene.sites]
    drawable = list(ball) + list(sites)
    for region in scene.outlines:
        drawable += _region_points(region)
    if scene.locus is not None:
        drawable += _region_points(scene.locus)
    view = _Viewport(drawable)

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="%d" height="%d" viewBox="0 0 %d %d">' % (WIDTH, HEIGHT, WIDTH, HEIGHT),
        '<rect id="bg" width="%d" height="%d" fill="#ffffff"/>' % (WIDTH, HEIGHT),
        '<polygon id="ball" points="%s" %s/>' % (_poly_attr(view, ball), BALL_STYLE),
    ]
    for k, region in enumerate(scene.outlines, 1):
        _emit_region(
            out, view, region, "outline-%d" % k, OUTLINE_STYLE, OUTLINE_STYLE, OUTLINE_POINT
        )
    if scene.locus is not None:
        _emit_region(out, view, scene.locus, "locus", LOCUS_FILL, LOCUS_LINE, LOCUS_POINT)
    for k, pt in enumerate(sites, 1):
        x, y = view.map(pt)
        out.append(
            '<circle id="site-%d" cx="%s" cy="%s" r="4" %s/>'
            % (k, _fnum(x), _fnum(y), SITE_STYLE)
        )
        out.append(
            '<text id="label-%d" x="%s" y="%s" %s>p%d</text>'
            % (k, _fnum(x + 7.0), _fnum(y - 7.0), LABEL_STYLE, k)
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(scene: Scene, path) -> None:
    data = render_string(scene)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(data)
