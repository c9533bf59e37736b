"""Flatten the hull into the plane so the rectangles land on a regular N-gon."""

import sys
from pathlib import Path

from younghull.partitions import format_partition
from younghull.projection import (
    circulant_det,
    circulant_det_closed,
    origin_vertices,
    project_skeleton,
    write_svg,
)

N = 9
outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")

for n in range(2, 9):
    print(f"det C_{n} = {circulant_det(n)}  (closed form {circulant_det_closed(n)})")

emb = project_skeleton(N)
print(f"\nN={N}: {len(emb.partitions)} points, {len(emb.edges)} segments")
print("landing on the origin:", ", ".join(format_partition(l) for l in origin_vertices(emb)))

for lam in [(j,) * (N - j) for j in range(1, 4)]:
    x, y = emb.point(lam)
    print(f"  rectangle {format_partition(lam)} -> ({x:+.6f}, {y:+.6f})")

path = write_svg(emb, outdir / f"hull{N}.svg", scale=120, radius=1.5, stroke=0.4)
print(f"\nwrote {path}")
