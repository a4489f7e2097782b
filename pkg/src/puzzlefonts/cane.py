"""Glass-cane font: cross-section top views and twisted side views.

A cane is a unit-radius envelope holding colored subcanes, each given by a
polar offset rho, a phase phi (degrees), a radius, and a color class.
Twisting at omega turns per unit length turns each off-axis strand into a
helix; the side view projects strand centerlines to x(t) = rho*cos(2*pi*
omega*t + phi) and draws each silhouette as the band x(t) +- r, depth-sorted
per sample so nearer strands occlude farther ones.  The silhouette width is
kept constant at r (the foreshortening of a tilted tube is not modeled); the
decodable features are phase, amplitude, period and width.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scene import VectorScene

STRAND_STYLES = ("strand_a", "strand_b", "strand_c", "strand_d", "strand_e", "strand_f")


@dataclass(frozen=True)
class Subcane:
    rho: float     # radial offset of the strand center, in [0, 1)
    phi: float     # phase angle, degrees
    radius: float  # strand radius, > 0
    color: str     # one of STRAND_STYLES

    def __post_init__(self):
        if not 0.0 <= self.rho < 1.0:
            raise ValueError(f"rho must be in [0, 1), got {self.rho}")
        if self.radius <= 0.0:
            raise ValueError(f"subcane radius must be positive, got {self.radius}")
        if self.rho + self.radius > 1.0 + 1e-12:
            raise ValueError(f"subcane at rho={self.rho} r={self.radius} leaves the envelope")
        if self.color not in STRAND_STYLES:
            raise ValueError(f"color must be one of {STRAND_STYLES}, got {self.color!r}")


@dataclass(frozen=True)
class CaneCrossSection:
    subcanes: tuple

    @staticmethod
    def of(rows) -> "CaneCrossSection":
        return CaneCrossSection(tuple(Subcane(float(r), float(p), float(rr), c)
                                      for r, p, rr, c in rows))


@dataclass(frozen=True)
class TwistParams:
    omega: float   # turns per unit length, >= 0
    length: float  # cane length, > 0

    def __post_init__(self):
        if self.omega < 0.0:
            raise ValueError("twist rate must be >= 0")
        if self.length <= 0.0:
            raise ValueError("cane length must be positive")


def strand_x(sub: Subcane, omega: float, t: float) -> float:
    """Projected x of the strand centerline at height t."""
    return sub.rho * math.cos(2.0 * math.pi * omega * t + math.radians(sub.phi))


def strand_depth(sub: Subcane, omega: float, t: float) -> float:
    """Depth toward the viewer (larger = nearer) at height t."""
    return sub.rho * math.sin(2.0 * math.pi * omega * t + math.radians(sub.phi))


def render_top(cs: CaneCrossSection) -> VectorScene:
    """Envelope circle plus one circle per subcane at its polar position."""
    scene = VectorScene()
    scene.add_circle((0.0, 0.0), 1.0, "envelope")
    for sub in cs.subcanes:
        cx = sub.rho * math.cos(math.radians(sub.phi))
        cy = sub.rho * math.sin(math.radians(sub.phi))
        scene.add_circle((cx, cy), sub.radius, sub.color, filled=True)
    return scene


def side_view_samples(cs: CaneCrossSection, twist: TwistParams,
                      samples_per_unit: int = 64) -> list:
    """Sampled strand data: per strand, a list of (t, x, depth)."""
    if samples_per_unit < 8:
        raise ValueError("samples_per_unit must be at least 8")
    n = max(1, int(round(twist.length * samples_per_unit)))
    out = []
    for sub in cs.subcanes:
        rows = []
        for k in range(n + 1):
            t = twist.length * k / n
            rows.append((t, strand_x(sub, twist.omega, t), strand_depth(sub, twist.omega, t)))
        out.append(rows)
    return out


def render_side(cs: CaneCrossSection, twist: TwistParams,
                samples_per_unit: int = 64) -> VectorScene:
    """Orthographic side view: silhouettes x(t) +- r, painter-sorted per segment.

    The vertical axis of the scene is the cane length; the envelope is the
    pair of lines x = -1 and x = +1.
    """
    sampled = side_view_samples(cs, twist, samples_per_unit)
    scene = VectorScene()
    scene.add_polyline([(-1.0, 0.0), (-1.0, twist.length)], "envelope")
    scene.add_polyline([(1.0, 0.0), (1.0, twist.length)], "envelope")
    # gather per-segment quads across all strands, sort far-to-near
    segments = []
    for idx, rows in enumerate(sampled):
        sub = cs.subcanes[idx]
        for k in range(len(rows) - 1):
            t0, x0, d0 = rows[k]
            t1, x1, d1 = rows[k + 1]
            depth = 0.5 * (d0 + d1)
            segments.append((depth, idx, k, sub, t0, x0, t1, x1))
    segments.sort(key=lambda s: (s[0], s[1], s[2]))
    for (_depth, _idx, _k, sub, t0, x0, t1, x1) in segments:
        r = sub.radius
        scene.add_polygon([(x0 - r, t0), (x0 + r, t0), (x1 + r, t1), (x1 - r, t1)],
                          sub.color, filled=True)
    return scene
