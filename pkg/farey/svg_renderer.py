from cf_core import ExtendedRational
from cf_core import INFINITY
from dataclasses import dataclass
from decimal import Decimal
from .farey_path import FareyPath
from fractions import Fraction
from .geodesic import GeodesicArc
from .geodesic import geodesic
from .geodesic import Semicircle
from html import escape
import math
from pathlib import Path
from typing import Iterator
from typing import Optional

@dataclass(frozen=True)
class Viewport:
    """window [xmin, xmax] x [0, height] of the upper half-plane and its pixel size.

    Args:
        labels (bool): draw one label per distinct vertex.
        tessellation_depth (Optional[int]): draw every Farey edge between vertices with
            denominator <= tessellation_depth behind the path. None draws none.
    """
    xmin: Fraction = Fraction(-1)
    xmax: Fraction = Fraction(3)
    height: Fraction = Fraction(2)
    width_px: int = 800
    height_px: int = 400
    labels: bool = False
    tessellation_depth: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "xmin", Fraction(self.xmin))
        object.__setattr__(self, "xmax", Fraction(self.xmax))
        object.__setattr__(self, "height", Fraction(self.height))
        if not self.xmin < self.xmax:
            raise ValueError(f"degenerate viewport: xmin {self.xmin} >= xmax {self.xmax}.")
        if self.height <= 0 or self.width_px <= 0 or self.height_px <= 0:
            raise ValueError(
                f"degenerate viewport: height {self.height}, pixels {self.width_px}x{self.height_px}."
            )
        if self.tessellation_depth is not None and self.tessellation_depth < 1:
            raise ValueError(
                f"tessellation_depth must be positive. got {self.tessellation_depth}."
            )

    def px_x(self, x: Fraction) -> Fraction:
        return (x - self.xmin) * self.width_px / (self.xmax - self.xmin)

    def px_y(self, y: Fraction) -> Fraction:
        return self.height_px - y * self.height_px / self.height

    def px_length_x(self, length: Fraction) -> Fraction:
        return length * self.width_px / (self.xmax - self.xmin)

    def px_length_y(self, length: Fraction) -> Fraction:
        return length * self.height_px / self.height

def format_px(value: Fraction) -> str:
    """value rounded half-to-even at 1/100 pixel."""
    return f"{Decimal(round(value * 100)).scaleb(-2):f}"

def _farey_edges(
    left: ExtendedRational,
    right: ExtendedRational,
    depth: int
) -> Iterator[tuple[ExtendedRational, ExtendedRational]]:
    yield left, right
    mediant: ExtendedRational = ExtendedRational(left.num + right.num, left.den + right.den)
    if mediant.den <= depth:
        yield from _farey_edges(left, mediant, depth)
        yield from _farey_edges(mediant, right, depth)

class FareySvgRenderer:
    """draws Farey paths as hyperbolic geodesics in the upper half-plane."""
    def __init__(self, viewport: Optional[Viewport] = None) -> None:
        self.viewport: Viewport = Viewport() if viewport is None else viewport

    def arc_d(self, arc: GeodesicArc) -> str:
        """path data: a semicircle drawn left to right, or a ray clipped at the top."""
        viewport: Viewport = self.viewport
        baseline: str = format_px(viewport.px_y(Fraction(0)))
        if isinstance(arc, Semicircle):
            left, right = arc.endpoints
            rx: str = format_px(viewport.px_length_x(arc.radius))
            ry: str = format_px(viewport.px_length_y(arc.radius))
            return (
                f"M {format_px(viewport.px_x(left))} {baseline} "
                f"A {rx} {ry} 0 0 1 {format_px(viewport.px_x(right))} {baseline}"
            )
        x: str = format_px(viewport.px_x(arc.x))
        return f"M {x} {baseline} L {x} 0.00"

    def tessellation_edges(self) -> list[tuple[ExtendedRational, ExtendedRational]]:
        depth: Optional[int] = self.viewport.tessellation_depth
        if depth is None:
            return []
        edges: list[tuple[ExtendedRational, ExtendedRational]] = []
        first: int = math.floor(self.viewport.xmin)
        last: int = math.ceil(self.viewport.xmax)
        for n in range(first, last + 1):
            edges.append((ExtendedRational(n), INFINITY))
            if n < last:
                edges.extend(_farey_edges(ExtendedRational(n), ExtendedRational(n + 1), depth))
        return edges

    def _label(self, vertex: ExtendedRational) -> str:
        viewport: Viewport = self.viewport
        if vertex.is_infinite:
            x: str = format_px(Fraction(viewport.width_px, 2))
            y: str = format_px(Fraction(12))
        else:
            x = format_px(viewport.px_x(vertex.to_fraction()))
            y = format_px(viewport.px_y(Fraction(0)) - 4)
        return (
            f'<text class="label" x="{x}" y="{y}" text-anchor="middle">'
            f"{escape(vertex.label())}</text>"
        )

    def render(self, path: FareyPath) -> str:
        """SVG 1.1 document. elements come in a fixed order: background, edges, labels."""
        viewport: Viewport = self.viewport
        lines: list[str] = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{viewport.width_px}" height="{viewport.height_px}" '
            f'viewBox="0 0 {viewport.width_px} {viewport.height_px}">',
            "<style>.edge{fill:none;stroke:black;stroke-width:1.5}"
            ".tessellation{fill:none;stroke:#bbbbbb;stroke-width:0.5}"
            ".label{font-family:serif;font-size:12px}</style>",
        ]
        for u, v in self.tessellation_edges():
            lines.append(f'<path class="tessellation" d="{self.arc_d(geodesic(u, v))}"/>')
        for u, v in path.edges():
            lines.append(f'<path class="edge" d="{self.arc_d(geodesic(u, v))}"/>')
        if viewport.labels:
            for vertex in dict.fromkeys(path.vertices):
                lines.append(self._label(vertex))
        lines.append("</svg>")
        return "\n".join(lines) + "\n"

    def save(self, path: FareyPath, svg_path: Path) -> None:
        svg_path.write_text(self.render(path))

def render_svg(path: FareyPath, viewport: Optional[Viewport] = None) -> str:
    return FareySvgRenderer(viewport).render(path)
