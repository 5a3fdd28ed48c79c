"""Write lozenge pictures of a few plane partitions to SVG files.

    python demos/render_gallery.py out/
"""

import sys
from pathlib import Path

from boxcount.combinatorics import PlanePartition
from boxcount.render import render_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "gallery")
out.mkdir(parents=True, exist_ok=True)

pictures = {
    "empty_3x3x3": PlanePartition.empty((3, 3, 3)),
    "full_3x3x3": PlanePartition.full((3, 3, 3)),
    "staircase_3x3x3": PlanePartition(((3, 2, 1), (2, 1, 0), (1, 0, 0)), (3, 3, 3)),
    "pyramid_4x4x4": PlanePartition(((4, 3, 2, 1), (3, 3, 2, 1), (2, 2, 2, 1), (1, 1, 1, 1)), (4, 4, 4)),
}
for name, t in pictures.items():
    path = out / f"{name}.svg"
    path.write_text(render_svg(t))
    print("wrote", path)
