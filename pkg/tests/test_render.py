from __future__ import annotations

import re
from itertools import product
from math import sqrt

from hypothesis import given

from boxcount.combinatorics import PlanePartition
from boxcount.enumeration import iter_heights
from boxcount.render import PALETTE, hexagon, lozenges, render_svg

from test_combinatorics import plane_partitions

R3 = sqrt(3) / 2


def lattice(pt):
    """Invert the projection onto integer coordinates (u, v) = (x - z, y - z)."""
    v = pt[1] / R3
    u = pt[0] + 0.5 * v
    ru, rv = round(u), round(v)
    assert abs(u - ru) < 1e-9 and abs(v - rv) < 1e-9
    return ru, rv


def triangles(t):
    """Each lozenge as two unit triangles, keyed by three times the centroid."""
    out = []
    for _, pts in lozenges(t):
        p = [lattice(q) for q in pts]
        for tri in ((p[0], p[1], p[2]), (p[0], p[2], p[3])):
            out.append((sum(x for x, _ in tri), sum(y for _, y in tri)))
    return out


def inside_hexagon(key, a, b, c):
    u3, v3 = key
    return -3 * c < u3 < 3 * a and -3 * c < v3 < 3 * b and -3 * b < u3 - v3 < 3 * a


def test_lozenge_counts_per_kind():
    t = PlanePartition.empty((2, 3, 4))
    kinds = [k for k, _ in lozenges(t)]
    assert kinds.count("top") == 6 and kinds.count("side-x") == 12 and kinds.count("side-y") == 8


def test_lozenges_tile_hexagon_exhaustively():
    for box in product(range(4), repeat=3):
        a, b, c = box
        for h in iter_heights(box):
            tris = triangles(PlanePartition(h, box))
            assert len(tris) == 2 * (a * b + b * c + c * a)
            assert len(set(tris)) == len(tris)
            assert all(inside_hexagon(k, a, b, c) for k in tris)


@given(plane_partitions(max_side=5))
def test_lozenges_tile_hexagon_random(t):
    a, b, c = t.box
    tris = triangles(t)
    assert len(set(tris)) == len(tris) == 2 * (a * b + b * c + c * a)


def test_hexagon_leftmost_vertex_is_origin():
    svg = render_svg(PlanePartition.empty((2, 2, 2)))
    hexa = re.search(r'class="hexagon"[^>]*points="([^"]+)"', svg).group(1).split()
    assert hexa[0] == "0.000000,0.000000"
    xs = [float(p.split(",")[0]) for p in hexa]
    assert min(xs) == 0.0 and xs.count(0.0) == 1
    assert len(hexagon(2, 2, 2)) == 6


def test_svg_structure_and_determinism():
    t = PlanePartition(((2, 1), (1, 0)), (2, 2, 2))
    svg = render_svg(t)
    assert svg == render_svg(PlanePartition(((2, 1), (1, 0)), (2, 2, 2)))
    assert svg.startswith("<svg ") and svg.endswith("</svg>\n")
    assert svg.count('class="lozenge ') == 12
    for kind, colour in PALETTE.items():
        assert svg.count(f'class="lozenge {kind}" fill="{colour}"') == 4
    assert "-0.000000" not in svg


def test_render_distinguishes_partitions():
    a = render_svg(PlanePartition.empty((2, 2, 2)))
    b = render_svg(PlanePartition.full((2, 2, 2)))
    assert a != b
