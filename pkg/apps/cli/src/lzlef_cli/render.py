"""ASCII and SVG drawings of triangular regions and their lozenge tilings."""

from __future__ import annotations

import io
import logging
from typing import TYPE_CHECKING

from lzlef_core.monomials import Monomial
from lzlef_lozenge.tilings import orientation

if TYPE_CHECKING:
    import cairocffi

    from lzlef_lozenge.regions import TriangularRegion
    from lzlef_lozenge.tilings import Tiling

logger = logging.getLogger(__name__)

EDGE = 24
MARGIN = 4
HALFSQRT3 = 0.5 * 3**0.5

PUNCTURE = (0.25, 0.25, 0.25)
BACKGROUND = (1.0, 1.0, 1.0)
GRID = (0.6, 0.6, 0.6)
OUTLINE = (0.0, 0.0, 0.0)
# Lozenge fill by the variable joining its two triangles: x, y, z
LOZENGE_COLORS = ((0.89, 0.1, 0.11), (1.0, 0.5, 0.0), (0.21, 0.5, 0.7))

Point = tuple[int, int, int]


def _up_vertices(label: Monomial) -> tuple[Point, Point, Point]:
    i, j, k = label.exponents
    return ((i + 1, j, k), (i, j + 1, k), (i, j, k + 1))


def _down_vertices(label: Monomial) -> tuple[Point, Point, Point]:
    i, j, k = label.exponents
    return ((i + 1, j + 1, k), (i + 1, j, k + 1), (i, j + 1, k + 1))


def _to_page(vertex: Point, d: int) -> tuple[float, float]:
    """Barycentric (bottom, upper-right, upper-left) distances to page points."""
    bottom, _, upper_left = vertex
    x = EDGE * (upper_left + bottom / 2) + MARGIN
    y = EDGE * HALFSQRT3 * (d - bottom) + MARGIN
    return (x, y)


# ---------------------------------------------------------------------------
# ASCII
# ---------------------------------------------------------------------------


def render_ascii(region: TriangularRegion) -> str:
    """One text row per strip of T_d, apex first.

    Up triangles print as ``/\\``, down triangles as ``\\/`` and removed
    triangles of either kind as ``##``.
    """
    d = region.d
    ups = set(region.up_triangles)
    downs = set(region.down_triangles)
    lines = []
    for row in range(d - 1, -1, -1):
        cells = []
        for k in range(d - row):
            up = Monomial(row, d - 1 - row - k, k)
            cells.append("/\\" if up in ups else "##")
            if k < d - 1 - row:
                down = Monomial(row, d - 2 - row - k, k)
                cells.append("\\/" if down in downs else "##")
        lines.append(" " * (2 * row) + "".join(cells))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------


def _polygon(ctx: cairocffi.Context, points: list[tuple[float, float]]) -> None:
    ctx.move_to(*points[0])
    for point in points[1:]:
        ctx.line_to(*point)
    ctx.close_path()


def _lozenge_outline(down: Monomial, up: Monomial) -> list[Point]:
    down_vertices = _down_vertices(down)
    up_vertices = _up_vertices(up)
    shared = [v for v in down_vertices if v in up_vertices]
    (down_tip,) = (v for v in down_vertices if v not in up_vertices)
    (up_tip,) = (v for v in up_vertices if v not in down_vertices)
    return [down_tip, shared[0], up_tip, shared[1]]


def render_svg(region: TriangularRegion, tiling: Tiling | None = None) -> bytes:
    """SVG document of T_d with removed triangles shaded dark gray.

    With a tiling, each lozenge is filled by its orientation.
    """
    # libcairo is only needed here; ASCII output works without it
    import cairocffi as cairo

    d = region.d
    ups = set(region.up_triangles)
    downs = set(region.down_triangles)
    buffer = io.BytesIO()
    width = EDGE * d + 2 * MARGIN
    height = EDGE * HALFSQRT3 * d + 2 * MARGIN
    surface = cairo.SVGSurface(buffer, width, height)
    ctx = cairo.Context(surface)
    ctx.set_line_join(cairo.LINE_JOIN_ROUND)
    ctx.set_line_width(1)

    cells: list[tuple[tuple[Point, Point, Point], bool]] = []
    for row in range(d):
        for k in range(d - row):
            up = Monomial(row, d - 1 - row - k, k)
            cells.append((_up_vertices(up), up in ups))
            if k < d - 1 - row:
                down = Monomial(row, d - 2 - row - k, k)
                cells.append((_down_vertices(down), down in downs))
    for vertices, kept in cells:
        _polygon(ctx, [_to_page(v, d) for v in vertices])
        ctx.set_source_rgb(*(BACKGROUND if kept else PUNCTURE))
        ctx.fill_preserve()
        ctx.set_source_rgb(*GRID)
        ctx.stroke()

    if tiling is not None:
        for lozenge in tiling.lozenges:
            _polygon(ctx, [_to_page(v, d) for v in _lozenge_outline(*lozenge)])
            ctx.set_source_rgb(*LOZENGE_COLORS[orientation(lozenge)])
            ctx.fill_preserve()
            ctx.set_source_rgb(*OUTLINE)
            ctx.stroke()

    corners = [(d, 0, 0), (0, d, 0), (0, 0, d)]
    _polygon(ctx, [_to_page(v, d) for v in corners])
    ctx.set_source_rgb(*OUTLINE)
    ctx.stroke()
    surface.finish()
    logger.debug("Rendered %s as SVG (%d bytes)", region, buffer.tell())
    return buffer.getvalue()
