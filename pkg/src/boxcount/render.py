"""Deterministic SVG lozenge pictures of plane partitions.

Cube corners ``(x, y, z)`` project to ``x*ex + y*ey + z*ez`` with unit
vectors 120 degrees apart; the picture is translated so the hexagon's
unique leftmost vertex, the image of ``(0, b, c)``, sits at the origin.
SVG's y axis points down, so ``ez`` draws upward.
"""

from __future__ import annotations

from math import sqrt

from .combinatorics import PlanePartition

__all__ = ["PALETTE", "lozenges", "hexagon", "render_svg"]

_R3 = sqrt(3) / 2
_EX = (1.0, 0.0)
_EY = (-0.5, _R3)
_EZ = (-0.5, -_R3)

PALETTE = {"top": "#e8c170", "side-x": "#6d9dc5", "side-y": "#c4704f"}
_STROKE = "#222222"

Point = tuple[float, float]


def _proj(x: float, y: float, z: float) -> Point:
    return (x * _EX[0] + y * _EY[0] + z * _EZ[0], x * _EX[1] + y * _EY[1] + z * _EZ[1])


def lozenges(t: PlanePartition) -> list[tuple[str, tuple[Point, ...]]]:
    """Visible unit faces: ``ab`` tops, then ``bc`` x-facing, then ``ac`` y-facing."""
    a, b, c = t.box
    h = t.heights
    out: list[tuple[str, tuple[Point, ...]]] = []
    for i in range(a):
        for j in range(b):
            z = h[i][j]
            out.append(("top", (_proj(i, j, z), _proj(i + 1, j, z), _proj(i + 1, j + 1, z), _proj(i, j + 1, z))))
    for j in range(b):
        for k in range(c):
            x = sum(1 for i in range(a) if h[i][j] > k)
            out.append(("side-x", (_proj(x, j, k), _proj(x, j + 1, k), _proj(x, j + 1, k + 1), _proj(x, j, k + 1))))
    for i in range(a):
        for k in range(c):
            y = sum(1 for j in range(b) if h[i][j] > k)
            out.append(("side-y", (_proj(i, y, k), _proj(i + 1, y, k), _proj(i + 1, y, k + 1), _proj(i, y, k + 1))))
    return out


def hexagon(a: int, b: int, c: int) -> tuple[Point, ...]:
    corners = ((0, b, c), (0, 0, c), (a, 0, c), (a, 0, 0), (a, b, 0), (0, b, 0))
    return tuple(_proj(*v) for v in corners)


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _points(pts: tuple[Point, ...], origin: Point) -> str:
    return " ".join(f"{_fmt(x - origin[0])},{_fmt(y - origin[1])}" for x, y in pts)


def render_svg(t: PlanePartition, unit: int = 40) -> str:
    a, b, c = t.box
    hexa = hexagon(a, b, c)
    origin = hexa[0]
    xs = [x - origin[0] for x, _ in hexa]
    ys = [y - origin[1] for _, y in hexa]
    pad = 0.25
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, hgt = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(hgt)}" '
        f'width="{_fmt(w * unit)}" height="{_fmt(hgt * unit)}">',
        f'<g stroke="{_STROKE}" stroke-width="0.03" stroke-linejoin="round">',
    ]
    for kind, pts in lozenges(t):
        lines.append(f'<polygon class="lozenge {kind}" fill="{PALETTE[kind]}" points="{_points(pts, origin)}"/>')
    lines.append("</g>")
    lines.append(
        f'<polygon class="hexagon" fill="none" stroke="{_STROKE}" stroke-width="0.06" points="{_points(hexa, origin)}"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
