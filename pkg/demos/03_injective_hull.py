"""Vertices, edges and faces of the hull of the N-cycle metric."""

from younghull.hull import (
    central_cube,
    enumerate_faces,
    face_count_closed,
    hasse_skeleton,
    in_hull,
    norm_extremes,
    oracle_vertices,
    rhombohedron_data,
    vertex_direct,
    vertex_recursive,
)
from younghull.partitions import format_partition

N = 5

skel = hasse_skeleton(N)
print(f"N={N}: {len(skel.vertices)} vertices, {len(skel.edges)} edges")
for v in skel.vertices:
    mark = "" if v.values == vertex_recursive(v.lam, N).values else "  (mismatch!)"
    print(f"  {format_partition(v.lam):>8}  f = {v.values}{mark}")

# the same vertex set falls out of brute-force linear algebra
brute = oracle_vertices(N)
print(f"brute force over all {N}-subsets of sites: {len(brute)} vertices, "
      f"same set: {set(brute) == {tuple(v.values) for v in skel.vertices}}")

for n in range(4, 9):
    counts = [len(enumerate_faces(n, v)) for v in range(n // 2 + 1)]
    closed = [face_count_closed(n, v) for v in range(n // 2 + 1)]
    print(f"N={n} face counts {counts}  closed form {closed}")

print("constant 3 in the hull at N=5:", in_hull([3] * 5, 5))
for n in (5, 6, 7, 8):
    hi, lo, argmin = norm_extremes(n)
    print(f"N={n}: l1 norm ranges over [{lo}, {hi}], minimum at {len(argmin)} vertices")

cube = central_cube(6)
face, body = rhombohedron_data(6)
print(f"N=6 central cube below {cube.lam}: face diagonals^2 {face[0]}, body diagonals^2 {body}")
print("vertex of the staircase (4,3,2,1) at N=9:", vertex_direct((4, 3, 2, 1), 9).values)
