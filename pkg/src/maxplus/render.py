"""Deterministic SVG rendering of 2D convex sets."""

from __future__ import annotations

import math
from typing import List, Tuple

from .convex_sets import ConvexSet
from .linalg import TropVector

PX_PER_UNIT = 40.0
PAD_UNITS = 2.0
# coordinates at -inf live on a clipped margin band just outside the box
BAND_UNITS = 1.0


def _finite_bbox(A: ConvexSet) -> Tuple[float, float, float, float]:
    xs: List[float] = []
    ys: List[float] = []
    for v in list(A.points.columns) + list(A.rays.columns):
        if not v[0].is_zero:
            xs.append(v[0].as_float())
        if not v[1].is_zero:
            ys.append(v[1].as_float())
    if not xs:
        xs = [0.0, 1.0]
    if not ys:
        ys = [0.0, 1.0]
    return min(xs), max(xs), min(ys), max(ys)


class _Frame:
    """Affine chart -> pixel mapping with a margin band for -inf coordinates."""

    def __init__(self, A: ConvexSet):
        x0, x1, y0, y1 = _finite_bbox(A)
        self.x0 = x0 - PAD_UNITS
        self.x1 = x1 + PAD_UNITS
        self.y0 = y0 - PAD_UNITS
        self.y1 = y1 + PAD_UNITS
        self.width = (self.x1 - self.x0 + BAND_UNITS) * PX_PER_UNIT
        self.height = (self.y1 - self.y0 + BAND_UNITS) * PX_PER_UNIT

    def px(self, x: float) -> float:
        if x == -math.inf:
            x = self.x0 - BAND_UNITS / 2
        return (x - (self.x0 - BAND_UNITS)) * PX_PER_UNIT

    def py(self, y: float) -> float:
        # y axis flipped: larger y is higher on screen
        if y == -math.inf:
            y = self.y0 - BAND_UNITS / 2
        return (self.y1 - y) * PX_PER_UNIT

    def point_px(self, v: TropVector) -> Tuple[float, float]:
        return self.px(v[0].as_float()), self.py(v[1].as_float())


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def _shading_rects(A: ConvexSet, frame: _Frame, grid: int) -> List[str]:
    """Row-major membership sampling, merged into horizontal run rectangles."""
    rects = []
    dx = (frame.x1 - frame.x0) / grid
    dy = (frame.y1 - frame.y0) / grid
    for row in range(grid):
        y = frame.y1 - (row + 0.5) * dy
        run_start = None
        for col in range(grid + 1):
            inside = False
            if col < grid:
                x = frame.x0 + (col + 0.5) * dx
                inside = A.member(TropVector.of(x, y))
            if inside and run_start is None:
                run_start = col
            elif not inside and run_start is not None:
                x_left = frame.px(frame.x0 + run_start * dx)
                x_right = frame.px(frame.x0 + col * dx)
                y_top = frame.py(y + dy / 2)
                rects.append(
                    f'<rect x="{_fmt(x_left)}" y="{_fmt(y_top)}" '
                    f'width="{_fmt(x_right - x_left)}" height="{_fmt(dy * PX_PER_UNIT)}" '
                    f'fill="#c8d8f0"/>'
                )
                run_start = None
    return rects


def render_set_svg(A: ConvexSet, grid: int = 200) -> str:
    """SVG 1.1 picture of a 2D set: shaded region, rays, points, extreme points."""
    if A.dim != 2:
        raise ValueError(f"rendering needs a 2-dimensional set, got dim {A.dim}")
    frame = _Frame(A)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(frame.width)}" height="{_fmt(frame.height)}" '
        f'viewBox="0 0 {_fmt(frame.width)} {_fmt(frame.height)}">',
        f'<rect x="0" y="0" width="{_fmt(frame.width)}" height="{_fmt(frame.height)}" fill="white"/>',
    ]
    parts.extend(_shading_rects(A, frame, grid))

    # margin band separator for coordinates at -inf
    band_x = frame.px(frame.x0)
    band_y = frame.py(frame.y0)
    parts.append(
        f'<line x1="{_fmt(band_x)}" y1="0" x2="{_fmt(band_x)}" y2="{_fmt(frame.height)}" '
        f'stroke="#bbbbbb" stroke-dasharray="4 3"/>'
    )
    parts.append(
        f'<line x1="0" y1="{_fmt(band_y)}" x2="{_fmt(frame.width)}" y2="{_fmt(band_y)}" '
        f'stroke="#bbbbbb" stroke-dasharray="4 3"/>'
    )
    parts.append(
        f'<text x="2" y="{_fmt(frame.height - 4)}" font-size="10" fill="#888888">-inf</text>'
    )

    # origin cross
    ox, oy = frame.px(0.0), frame.py(0.0)
    parts.append(
        f'<path d="M {_fmt(ox - 6)} {_fmt(oy)} H {_fmt(ox + 6)} '
        f'M {_fmt(ox)} {_fmt(oy - 6)} V {_fmt(oy + 6)}" stroke="black" stroke-width="1"/>'
    )

    # rays drawn as arrows anchored at the join of all points (a member)
    anchor = A.points[0]
    for p in A.points:
        anchor = anchor.join(p)
    ax, ay = frame.point_px(anchor)
    for r in A.rays:
        rx = r[0].as_float()
        ry = r[1].as_float()
        # direction of travel in the affine chart as the scale grows
        dirx = 0.0 if rx == -math.inf else 1.0
        diry = 0.0 if ry == -math.inf else 1.0
        if rx != -math.inf and ry != -math.inf:
            # ray direction is the all-ones shift of the finite support
            dirx, diry = 1.0, 1.0
        norm = math.hypot(dirx, diry) or 1.0
        length = 1.5 * PX_PER_UNIT
        tipx = ax + dirx / norm * length
        tipy = ay - diry / norm * length
        parts.append(
            f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(tipx)}" y2="{_fmt(tipy)}" '
            f'stroke="#336699" stroke-width="2"/>'
        )
        parts.append(
            f'<circle cx="{_fmt(tipx)}" cy="{_fmt(tipy)}" r="3" fill="#336699"/>'
        )

    extreme = set(A.extreme_points())
    for p in A.points:
        x, y = frame.point_px(p)
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.5" fill="#777777"/>')
    for p in sorted(extreme, key=lambda v: v.sort_key()):
        x, y = frame.point_px(p)
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" fill="none" '
            f'stroke="#cc2222" stroke-width="2"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
