"""Deterministic SVG renderings of the sieve and its quotient structure.

Four figures are produced: the full sieve plane, a zoomed detail with
integer labels, the quotient distribution between the hyperbolas y = p/x
and y = p/x - 1, and the (quotient, remainder) scatter.  Output is plain
SVG text built here, with no external renderer involved: identical inputs
give byte-identical documents, and each data point is exactly one
``<circle>`` element so tests can count them.

All geometry stays exact (integers and Fractions) until serialization,
where coordinates become decimal strings with 9 significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from xml.sax.saxutils import escape

from .extremes import extremes as all_extremes
from .extremes import quotient_points
from .plane import SieveContext, map_to_plane
from .remainders import attained_quotients
from .sieve import sieve_geometric

DEFAULT_PALETTE = {
    "uncrossed": "black",
    "crossed": "gray",
    "focalLine": "lightblue",
    "curve": "black",
    "bisector": "orange",
    "axis": "crimson",
    "extreme": "green",
    "quotientPoint": "blue",
    "horizontal": "red",
}


@dataclass(frozen=True)
class Window:
    """Axis-aligned rectangle in plane coordinates."""

    x_min: Fraction
    x_max: Fraction
    y_min: Fraction
    y_max: Fraction

    @property
    def has_positive_area(self) -> bool:
        return self.x_max > self.x_min and self.y_max > self.y_min


def make_window(x_min, x_max, y_min, y_max) -> Window:
    w = Window(Fraction(x_min), Fraction(x_max), Fraction(y_min), Fraction(y_max))
    if not w.has_positive_area:
        raise ValueError(f"window must have positive area: {w}")
    return w


@dataclass
class RenderOptions:
    width_px: int = 900
    height_px: int = 900
    window: Window | None = None
    palette: dict[str, str] = field(default_factory=dict)
    max_lines_per_family: int = 3
    stroke_width: float = 1.0

    def validate(self) -> None:
        if self.width_px < 64 or self.height_px < 64:
            raise ValueError(
                f"width/height must be >= 64 px, got {self.width_px}x{self.height_px}"
            )
        if self.window is not None and not self.window.has_positive_area:
            raise ValueError(f"window must have positive area: {self.window}")
        if self.max_lines_per_family < 0:
            raise ValueError("max_lines_per_family must be >= 0")
        if self.stroke_width <= 0:
            raise ValueError("stroke_width must be positive")

    def color(self, role: str) -> str:
        return self.palette.get(role, DEFAULT_PALETTE[role])


def _fmt(v) -> str:
    """Decimal with 9 significant digits; the only exact-to-float boundary."""
    return f"{float(v):.9g}"


class _Canvas:
    """Maps plane coordinates into a pixel viewport and collects elements."""

    def __init__(self, opts: RenderOptions, bounds: Window):
        self.opts = opts
        self.bounds = bounds
        self.margin = 0.05 * min(opts.width_px, opts.height_px)
        self.sx = (opts.width_px - 2 * self.margin) / float(bounds.x_max - bounds.x_min)
        self.sy = (opts.height_px - 2 * self.margin) / float(bounds.y_max - bounds.y_min)
        self.elements: list[str] = []

    def px(self, x) -> float:
        return self.margin + (float(x) - float(self.bounds.x_min)) * self.sx

    def py(self, y) -> float:
        return self.margin + (float(self.bounds.y_max) - float(y)) * self.sy

    def point_radius(self, scale: float = 0.32) -> float:
        r = scale * min(self.sx, self.sy)
        return min(8.0, max(0.8, r))

    def circle(self, x, y, r_px: float, fill: str) -> None:
        self.elements.append(
            f'<circle cx="{_fmt(self.px(x))}" cy="{_fmt(self.py(y))}" '
            f'r="{_fmt(r_px)}" fill="{escape(fill)}"/>'
        )

    def segment(self, p1, p2, stroke: str, width: float) -> None:
        (x1, y1), (x2, y2) = p1, p2
        self.elements.append(
            f'<line x1="{_fmt(self.px(x1))}" y1="{_fmt(self.py(y1))}" '
            f'x2="{_fmt(self.px(x2))}" y2="{_fmt(self.py(y2))}" '
            f'stroke="{escape(stroke)}" stroke-width="{_fmt(width)}"/>'
        )

    def polyline(self, pts, stroke: str, width: float) -> None:
        coords = " ".join(f"{_fmt(self.px(x))},{_fmt(self.py(y))}" for x, y in pts)
        self.elements.append(
            f'<polyline points="{coords}" fill="none" '
            f'stroke="{escape(stroke)}" stroke-width="{_fmt(width)}"/>'
        )

    def text(self, x, y, s: str, dx_px: float, dy_px: float, size_px: float) -> None:
        self.elements.append(
            f'<text x="{_fmt(self.px(x) + dx_px)}" y="{_fmt(self.py(y) + dy_px)}" '
            f'font-size="{_fmt(size_px)}">{escape(s)}</text>'
        )

    def document(self) -> str:
        w, h = self.opts.width_px, self.opts.height_px
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">'
        )
        return "\n".join([head, *self.elements, "</svg>"]) + "\n"


def _clip_slope_line(x_intercept, run, rect: Window):
    """Clip y = (x - x_intercept)/run against rect, exactly.

    Returns a ((x, y), (x, y)) segment of Fractions, or None when the line
    misses the rectangle (or only grazes a corner).
    """
    b, r = Fraction(x_intercept), Fraction(run)
    candidates = set()
    for x in (rect.x_min, rect.x_max):
        y = (x - b) / r
        if rect.y_min <= y <= rect.y_max:
            candidates.add((x, y))
    for y in (rect.y_min, rect.y_max):
        x = b + r * y
        if rect.x_min <= x <= rect.x_max:
            candidates.add((x, y))
    if len(candidates) < 2:
        return None
    pts = sorted(candidates)
    return pts[0], pts[-1]


def _intersect(a: Window, b: Window) -> Window | None:
    x_min, x_max = max(a.x_min, b.x_min), min(a.x_max, b.x_max)
    y_min, y_max = max(a.y_min, b.y_min), min(a.y_max, b.y_max)
    if x_max > x_min and y_max > y_min:
        return Window(x_min, x_max, y_min, y_max)
    return None


def _sieve_bounds(ctx: SieveContext) -> Window:
    return Window(Fraction(0), Fraction(ctx.p + 1), Fraction(-ctx.p), Fraction(1))


def _draw_axes(canvas: _Canvas, opts: RenderOptions) -> None:
    b = canvas.bounds
    width = 0.6 * opts.stroke_width
    color = opts.color("axis")
    if b.y_min <= 0 <= b.y_max:
        canvas.segment((b.x_min, 0), (b.x_max, 0), color, width)
    if b.x_min <= 0 <= b.x_max:
        canvas.segment((0, b.y_min), (0, b.y_max), color, width)


def _draw_focal_lines(canvas: _Canvas, ctx: SieveContext, opts: RenderOptions) -> None:
    rect = canvas.bounds
    color = opts.color("focalLine")
    k_hi = min(ctx.p, opts.max_lines_per_family)
    for a in range(2, ctx.p):
        rem = ctx.p % a
        for k in range(1, k_hi + 1):
            seg = _clip_slope_line(k * a, rem, rect)
            if seg is not None:
                canvas.segment(*seg, color, opts.stroke_width)
    if rect.x_min <= ctx.p <= rect.x_max:
        canvas.segment(
            (ctx.p, rect.y_min), (ctx.p, rect.y_max), color, opts.stroke_width
        )


def _sieve_canvas(
    ctx: SieveContext, opts: RenderOptions, rect: Window, labels: bool
) -> _Canvas:
    canvas = _Canvas(opts, rect)
    _draw_axes(canvas, opts)
    _draw_focal_lines(canvas, ctx, opts)
    prime_set = frozenset(sieve_geometric(ctx).primes)
    r_px = canvas.point_radius()
    for n in range(1, ctx.p_squared + 1):
        pt = map_to_plane(ctx, n)
        if not (rect.x_min <= pt.x <= rect.x_max and rect.y_min <= pt.y <= rect.y_max):
            continue
        fill = opts.color("uncrossed") if n in prime_set else opts.color("crossed")
        canvas.circle(pt.x, pt.y, r_px, fill)
        if labels:
            canvas.text(
                pt.x, pt.y, str(n), r_px + 1.0, -(r_px + 1.0), max(7.0, 2.4 * r_px)
            )
    return canvas


def render_sieve(ctx: SieveContext, opts: RenderOptions) -> str:
    """Full sieve figure: all p² integers, crossings grayed, focal lines behind."""
    opts.validate()
    return _sieve_canvas(ctx, opts, _sieve_bounds(ctx), labels=False).document()


def render_detail(
    ctx: SieveContext, window: Window | None, opts: RenderOptions
) -> str:
    """Sieve content clipped to a window, with integer labels on the points."""
    opts.validate()
    window = window or opts.window or _sieve_bounds(ctx)
    if not window.has_positive_area:
        raise ValueError(f"window must have positive area: {window}")
    rect = _intersect(window, _sieve_bounds(ctx))
    if rect is None:
        raise ValueError(f"window lies outside the plot bounds: {window}")
    return _sieve_canvas(ctx, opts, rect, labels=True).document()


def render_quotient_distribution(ctx: SieveContext, opts: RenderOptions) -> str:
    """Quotient points between the hyperbolas, extremes highlighted."""
    opts.validate()
    p = ctx.p
    rect = Window(Fraction(0), Fraction(p), Fraction(0), Fraction(p))
    canvas = _Canvas(opts, rect)
    _draw_axes(canvas, opts)

    for q in attained_quotients(ctx):
        canvas.segment((0, q), (p, q), opts.color("horizontal"), 0.6 * opts.stroke_width)

    seg = _clip_slope_line(0, 1, rect)
    if seg is not None:
        canvas.segment(*seg, opts.color("bisector"), opts.stroke_width)

    xs = [1 + Fraction(j, 8) for j in range(8 * (p - 1) + 1)]
    upper = [(x, Fraction(p) / x) for x in xs]
    lower = [(x, Fraction(p) / x - 1) for x in xs]
    canvas.polyline(upper, opts.color("curve"), opts.stroke_width)
    canvas.polyline(lower, opts.color("curve"), opts.stroke_width)

    extreme_as = {e.a for e in all_extremes(ctx)}
    r_px = canvas.point_radius(0.12)
    for pt in quotient_points(ctx):
        role = "extreme" if pt.a in extreme_as else "quotientPoint"
        canvas.circle(pt.a, pt.q, r_px, opts.color(role))
    return canvas.document()


def render_quotient_remainder(ctx: SieveContext, opts: RenderOptions) -> str:
    """Scatter of (p // a, rem(p/a)) over a in [2, p-1]: p - 2 distinct points."""
    opts.validate()
    pairs = [divmod(ctx.p, a) for a in range(2, ctx.p)]
    x_hi = max(q for q, _ in pairs) + 1
    y_hi = max(r for _, r in pairs) + 1
    rect = Window(Fraction(0), Fraction(x_hi), Fraction(0), Fraction(y_hi))
    canvas = _Canvas(opts, rect)
    _draw_axes(canvas, opts)
    r_px = canvas.point_radius(0.12)
    for q, rem in pairs:
        canvas.circle(q, rem, r_px, opts.color("quotientPoint"))
    return canvas.document()
