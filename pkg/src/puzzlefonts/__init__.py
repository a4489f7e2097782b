"""puzzlefonts: geometry and typesetting for five algorithmic puzzle typefaces.

Each font family pairs an easily readable "solved" rendering with a "puzzle"
rendering that must be solved to be read: fixed-angle linkage chains, taut
conveyer belts around unit disks, origami-maze crease patterns, a universal
hinged dissection chain, and twisted glass canes.
"""

__version__ = "0.1.0"

from .geometry import CCW, CW, TOL, Arc, Point2, Segment, path_is_simple, tangent_points
from .scene import SvgConfig, VectorScene, emit_svg

__all__ = [
    "CCW", "CW", "TOL", "Arc", "Point2", "Segment",
    "path_is_simple", "tangent_points",
    "SvgConfig", "VectorScene", "emit_svg",
    "__version__",
]
