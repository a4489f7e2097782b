"""Styled vector scenes and the deterministic SVG emitter.

A scene is an ordered list of primitives; order defines paint order.  Every
primitive carries one stroke class from STYLE_CLASSES, so renderers stay
decoupled from per-font styling.  Emission is byte-deterministic: fixed
6-decimal coordinate formatting, fixed attribute order, no timestamps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyScene
from .geometry import CCW, Arc, Point2, arc_extent, point_on_circle

STYLE_CLASSES = frozenset({
    "boundary", "mountain", "valley", "belt", "disk", "wall", "floor",
    "chain", "piece", "hinge", "envelope", "guide",
    "strand_a", "strand_b", "strand_c", "strand_d", "strand_e", "strand_f",
})

# class -> (stroke color, stroke width in units, dash pattern or None, fill)
_STYLE_TABLE = {
    "boundary": ("#000000", 0.060, None, "none"),
    "mountain": ("#b3202c", 0.030, None, "none"),
    "valley":   ("#2060b3", 0.030, "0.12,0.08", "none"),
    "belt":     ("#111111", 0.050, None, "none"),
    "disk":     ("#444444", 0.030, None, "#d9d9d9"),
    "wall":     ("#000000", 0.120, None, "none"),
    "floor":    ("#888888", 0.020, None, "#f2f2f2"),
    "chain":    ("#333333", 0.020, None, "none"),
    "piece":    ("#555555", 0.015, None, "#e8d9a0"),
    "hinge":    ("#b3202c", 0.020, None, "#b3202c"),
    "envelope": ("#666666", 0.025, None, "none"),
    "guide":    ("#bbbbbb", 0.010, "0.05,0.05", "none"),
    "strand_a": ("#1f3b8c", 0.030, None, "#1f3b8c"),
    "strand_b": ("#b3202c", 0.030, None, "#b3202c"),
    "strand_c": ("#1e7d32", 0.030, None, "#1e7d32"),
    "strand_d": ("#b37d20", 0.030, None, "#b37d20"),
    "strand_e": ("#6a1fb3", 0.030, None, "#6a1fb3"),
    "strand_f": ("#0f8c8c", 0.030, None, "#0f8c8c"),
}


def _check_style(style: str) -> str:
    if style not in STYLE_CLASSES:
        raise ValueError(f"unknown style class {style!r}")
    return style


@dataclass(frozen=True)
class Polyline:
    points: tuple
    style: str


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius: float
    style: str
    filled: bool = False


@dataclass(frozen=True)
class ArcShape:
    arc: Arc
    style: str


@dataclass(frozen=True)
class Polygon:
    points: tuple
    style: str
    filled: bool = True


@dataclass
class VectorScene:
    primitives: list = field(default_factory=list)

    def add_polyline(self, points, style: str) -> None:
        self.primitives.append(Polyline(tuple(Point2(*p) for p in points), _check_style(style)))

    def add_circle(self, center, radius: float, style: str, filled: bool = False) -> None:
        self.primitives.append(Circle(Point2(*center), float(radius), _check_style(style), filled))

    def add_arc(self, arc: Arc, style: str) -> None:
        self.primitives.append(ArcShape(arc, _check_style(style)))

    def add_polygon(self, points, style: str, filled: bool = True) -> None:
        self.primitives.append(Polygon(tuple(Point2(*p) for p in points), _check_style(style), filled))

    def extend(self, other: "VectorScene") -> None:
        self.primitives.extend(other.primitives)

    def translated(self, dx: float, dy: float) -> "VectorScene":
        out = VectorScene()
        for prim in self.primitives:
            if isinstance(prim, Polyline):
                out.primitives.append(Polyline(tuple(Point2(p.x + dx, p.y + dy) for p in prim.points), prim.style))
            elif isinstance(prim, Circle):
                out.primitives.append(Circle(Point2(prim.center.x + dx, prim.center.y + dy),
                                             prim.radius, prim.style, prim.filled))
            elif isinstance(prim, ArcShape):
                a = prim.arc
                out.primitives.append(ArcShape(Arc(Point2(a.center.x + dx, a.center.y + dy),
                                                   a.radius, a.start_angle, a.end_angle, a.orientation),
                                               prim.style))
            else:
                out.primitives.append(Polygon(tuple(Point2(p.x + dx, p.y + dy) for p in prim.points),
                                              prim.style, prim.filled))
        return out

    def style_classes(self) -> set:
        return {prim.style for prim in self.primitives}

    def bounds(self) -> tuple[float, float, float, float]:
        """(min_x, min_y, max_x, max_y) over all primitives."""
        xs: list[float] = []
        ys: list[float] = []
        for prim in self.primitives:
            if isinstance(prim, (Polyline, Polygon)):
                xs.extend(p.x for p in prim.points)
                ys.extend(p.y for p in prim.points)
            elif isinstance(prim, Circle):
                xs.extend((prim.center.x - prim.radius, prim.center.x + prim.radius))
                ys.extend((prim.center.y - prim.radius, prim.center.y + prim.radius))
            else:
                a = prim.arc
                from .geometry import arc_contains_angle
                probes = [a.start_angle, a.end_angle]
                probes += [c for c in (0.0, 90.0, 180.0, 270.0) if arc_contains_angle(a, c)]
                for ang in probes:
                    p = point_on_circle(a.center, a.radius, ang)
                    xs.append(p.x)
                    ys.append(p.y)
        if not xs:
            return (0.0, 0.0, 0.0, 0.0)
        return (min(xs), min(ys), max(xs), max(ys))


@dataclass(frozen=True)
class SvgConfig:
    scale: float = 40.0          # pixels per unit
    margin: float = 0.6          # units of padding around the drawing
    allow_empty: bool = False
    background: str | None = "#ffffff"


def _fmt(value: float) -> str:
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


def emit_svg(scene: VectorScene, config: SvgConfig = SvgConfig()) -> str:
    """Serialize a scene to an SVG 1.1 document (byte-deterministic)."""
    if not scene.primitives:
        if not config.allow_empty:
            raise EmptyScene("refusing to emit an empty scene")
        return ('<?xml version="1.0" encoding="UTF-8"?>\n'
                '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                'width="1" height="1" viewBox="0 0 1 1"></svg>\n')

    min_x, min_y, max_x, max_y = scene.bounds()
    m = config.margin
    width = (max_x - min_x + 2 * m) * config.scale
    height = (max_y - min_y + 2 * m) * config.scale
    s = config.scale

    def tx(x: float) -> float:
        return (x - min_x + m) * s

    def ty(y: float) -> float:
        return (max_y - y + m) * s  # flip: SVG y axis points down

    parts = ['<?xml version="1.0" encoding="UTF-8"?>\n'
             f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
             f'width="{_fmt(width)}" height="{_fmt(height)}" '
             f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n']
    if config.background is not None:
        parts.append(f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" '
                     f'fill="{config.background}" stroke="none"/>\n')

    for prim in scene.primitives:
        color, w, dash, fill = _STYLE_TABLE[prim.style]
        stroke_attrs = (f'stroke="{color}" stroke-width="{_fmt(w * s)}" '
                        f'stroke-linecap="round" stroke-linejoin="round"')
        if dash is not None:
            dashes = ",".join(_fmt(float(d) * s) for d in dash.split(","))
            stroke_attrs += f' stroke-dasharray="{dashes}"'
        if isinstance(prim, Polyline):
            pts = " ".join(f"{_fmt(tx(p.x))},{_fmt(ty(p.y))}" for p in prim.points)
            parts.append(f'<polyline points="{pts}" fill="none" {stroke_attrs}/>\n')
        elif isinstance(prim, Circle):
            use_fill = fill if prim.filled else "none"
            parts.append(f'<circle cx="{_fmt(tx(prim.center.x))}" cy="{_fmt(ty(prim.center.y))}" '
                         f'r="{_fmt(prim.radius * s)}" fill="{use_fill}" {stroke_attrs}/>\n')
        elif isinstance(prim, ArcShape):
            a = prim.arc
            ext = arc_extent(a)
            p0 = point_on_circle(a.center, a.radius, a.start_angle)
            p1 = point_on_circle(a.center, a.radius, a.end_angle)
            large = 1 if ext > 180.0 else 0
            sweep = 0 if a.orientation == CCW else 1  # y-flip inverts handedness
            parts.append(f'<path d="M {_fmt(tx(p0.x))} {_fmt(ty(p0.y))} '
                         f'A {_fmt(a.radius * s)} {_fmt(a.radius * s)} 0 {large} {sweep} '
                         f'{_fmt(tx(p1.x))} {_fmt(ty(p1.y))}" fill="none" {stroke_attrs}/>\n')
        else:
            pts = " ".join(f"{_fmt(tx(p.x))},{_fmt(ty(p.y))}" for p in prim.points)
            use_fill = fill if prim.filled else "none"
            parts.append(f'<polygon points="{pts}" fill="{use_fill}" fill-opacity="0.55" {stroke_attrs}/>\n')

    parts.append("</svg>\n")
    return "".join(parts)
