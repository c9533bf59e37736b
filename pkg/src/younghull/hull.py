"""The injective hull E(X_N) of the cyclic metric space X_N.

X_N is the N-cycle with d(j, k) = |k-j| (N - |k-j|).  Its hull vertices are
indexed by Y_N; faces are Boolean intervals below a top partition.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from ._exact import solve_fraction
from .moebius import all_sites, canonical_site, extend_function, rim_of_partition, site_vector
from .partitions import (
    check_young,
    corner_subsets,
    covers,
    enumerate_young,
    inner_corners,
    lower_covers,
    remove_corners,
    staircase,
    tau,
)


def cyclic_distance(j, k, n):
    if not (0 <= j < n and 0 <= k < n):
        raise ValueError(f"indices ({j}, {k}) out of range for N={n}")
    a = abs(k - j)
    return a * (n - a)


def distance_matrix(n):
    return [[cyclic_distance(j, k, n) for k in range(n)] for j in range(n)]


@dataclass(frozen=True)
class HullVertex:
    lam: tuple
    values: tuple

    @property
    def n(self):
        return len(self.values)

    def l1(self):
        return sum(self.values)


@dataclass(frozen=True)
class Face:
    lam: tuple
    corners: tuple

    @property
    def dim(self):
        return len(self.corners)

    def partitions(self):
        """The 2**dim partitions below the top vertex, one per corner subset."""
        out = []
        for r in range(self.dim + 1):
            for sub in combinations(self.corners, r):
                out.append(remove_corners(self.lam, sub))
        return out

    def vertices(self, n):
        return [vertex_direct(nu, n) for nu in self.partitions()]

    def to_json(self):
        return {"top": list(self.lam), "corners": [list(c) for c in self.corners]}


def vertex_direct(lam, n):
    """f(l) = |tau^l(lam)|."""
    check_young(lam, n)
    values = []
    cur = lam
    for _ in range(n):
        values.append(sum(cur))
        cur = tau(cur, n)
    return HullVertex(lam, tuple(values))


def _descending_chain(lam):
    # strip the inner corner in the lowest row first
    chain = [lam]
    while lam:
        row, _ = inner_corners(lam)[-1]
        lam = remove_corners(lam, [(row, lam[row - 1])])
        chain.append(lam)
    return chain[::-1]


def covering_pair(lam, mu, n):
    """The (j, k) with rim site (j, k+1) of mu replaced by (j+1, k) in lam."""
    old = set(rim_of_partition(mu, n).sites) - set(rim_of_partition(lam, n).sites)
    new = set(rim_of_partition(lam, n).sites) - set(rim_of_partition(mu, n).sites)
    if len(old) != 1 or len(new) != 1:
        raise ValueError(f"{lam} does not cover {mu}")
    (a,), (dsite,) = old, new
    found = []
    for x in range(n + 1):
        for y in range(x, n + 1):
            if canonical_site(x, y, n) != a:
                continue
            j, k = x, y - 1
            if 0 <= j < k <= n - 1 and canonical_site(j + 1, k, n) == dsite:
                found.append((j, k))
    if len(found) != 1:
        raise AssertionError(f"ambiguous covering move {lam} > {mu}: {found}")
    return found[0]


def covering_update(values, j, k):
    """+1 on [0, j], -1 on (j, k], +1 on (k, N)."""
    return tuple(v + (-1 if j < l <= k else 1) for l, v in enumerate(values))


def vertex_recursive(lam, n, chain=None):
    """Build f_lam from f_() along a saturated chain () < ... < lam."""
    check_young(lam, n)
    if chain is None:
        chain = _descending_chain(lam)
    values = tuple(l * (n - l) for l in range(n))
    for mu, nu in zip(chain, chain[1:]):
        values = covering_update(values, *covering_pair(nu, mu, n))
    return HullVertex(lam, values)


def in_delta(f, n):
    return all(v >= 0 for v in extend_function(f, n).values())


def in_hull(f, n):
    ext = extend_function(f, n)
    if any(v < 0 for v in ext.values()):
        return False
    return all(any(ext[canonical_site(j, k, n)] == 0 for k in range(n)) for j in range(n))


def enumerate_faces(n, v):
    """All v-faces, as (top partition, corner subset) pairs in canonical order."""
    if v < 0:
        return []
    return [Face(lam, tuple(map(tuple, sub))) for lam in enumerate_young(n)
            for sub in corner_subsets(lam, v)]


def face_count_closed(n, v):
    """2^(N-2v-1) N/(N-v) C(N-v, v), exactly; 0 when 2v > N."""
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    if v < 0 or 2 * v > n:
        return 0
    value = Fraction(2) ** (n - 2 * v - 1) * Fraction(n, n - v) * comb(n - v, v)
    assert value.denominator == 1
    return int(value)


def face_count_sum(n, v):
    """sum over s of C(N, 2s) C(s, v)."""
    return sum(comb(n, 2 * s) * comb(s, v) for s in range(v, n // 2 + 1))


@dataclass
class Skeleton:
    n: int
    vertices: list
    edges: list

    def to_json(self):
        return {
            "n": self.n,
            "vertices": [{"partition": list(v.lam), "f": list(v.values)} for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }


def hasse_skeleton(n):
    lams = enumerate_young(n)
    index = {lam: i for i, lam in enumerate(lams)}
    vertices = [vertex_direct(lam, n) for lam in lams]
    edges = sorted(tuple(sorted((index[mu], i))) for i, lam in enumerate(lams)
                   for mu in lower_covers(lam))
    return Skeleton(n, vertices, edges)


def faces_to_json(n, faces):
    return {"n": n, "faces": [f.to_json() for f in faces]}


ORACLE_MAX_N = 8


def oracle_vertices(n, chunk=100_000):
    """Vertices of Delta(X_N) by brute force over N-subsets of sites.

    Each subset with a regular matrix (rows e_j + e_k) is solved for
    f(j) + f(k) = d(j, k).  numpy supplies the determinant and a float
    solution; the solution is then rounded to numerators over the integer
    determinant and checked exactly in integer arithmetic.  Subsets failing
    the exact check are re-solved with rational elimination.  Returns a
    sorted list of tuples of Fractions.
    """
    if not 2 <= n <= ORACLE_MAX_N:
        raise ValueError(f"oracle supports 2 <= N <= {ORACLE_MAX_N}, got {n}")
    sites = all_sites(n)
    rows = np.array([site_vector(s, n) for s in sites], dtype=np.int64)
    dist = np.array([cyclic_distance(j, k, n) for j, k in sites], dtype=np.int64)
    sj = np.array([s[0] for s in sites])
    sk = np.array([s[1] for s in sites])
    found = set()
    combos = combinations(range(len(sites)), n)
    while True:
        idx = np.fromiter((i for c in _take(combos, chunk) for i in c), dtype=np.int64)
        if idx.size == 0:
            break
        idx = idx.reshape(-1, n)
        found.update(_solve_batch(rows, dist, sj, sk, idx))
    return sorted(found)


def _take(it, k):
    for _, x in zip(range(k), it):
        yield x


def _solve_batch(rows, dist, sj, sk, idx):
    a = rows[idx]
    b = dist[idx]
    det = np.rint(np.linalg.det(a.astype(float))).astype(np.int64)
    keep = det != 0
    a, b, det, idx = a[keep], b[keep], det[keep], idx[keep]
    if len(det) == 0:
        return []
    x = np.linalg.solve(a.astype(float), b.astype(float)[..., None])[..., 0]
    num = np.rint(x * det[:, None]).astype(np.int64)
    exact = np.all(np.einsum("cij,cj->ci", a, num) == det[:, None] * b, axis=1)
    out = []
    sign = np.sign(det)[:, None]
    # f~(j,k) >= 0  <=>  sign(det) * (num_j + num_k - det * d) >= 0
    slack = sign * (num[:, sj] + num[:, sk] - det[:, None] * dist[None, :])
    ok = exact & np.all(slack >= 0, axis=1)
    for row, d in zip(num[ok], det[ok]):
        out.append(tuple(Fraction(int(v), int(d)) for v in row))
    for i in np.nonzero(~exact)[0]:
        sol = solve_fraction(a[i].tolist(), b[i].tolist())
        if sol is not None and in_delta(sol, len(sol)):
            out.append(tuple(sol))
    return out


def central_cube(n):
    """For even N: the partitions below the staircase (N/2, ..., 1)."""
    if n % 2:
        raise ValueError("the central cube exists for even N only")
    top = staircase(n)
    return Face(top, tuple(inner_corners(top)))


def norm_extremes(n):
    """(max l1 over vertices, min l1 over vertices, minimising partitions)."""
    verts = [vertex_direct(lam, n) for lam in enumerate_young(n)]
    norms = [v.l1() for v in verts]
    lo = min(norms)
    argmin = [v.lam for v, s in zip(verts, norms) if s == lo]
    return max(norms), lo, argmin


def barycentre(points):
    pts = [tuple(Fraction(x) for x in p) for p in points]
    return tuple(sum(col) / len(pts) for col in zip(*pts))


def edge_vector(lam, mu, n):
    if not (covers(lam, mu) or covers(mu, lam)):
        raise ValueError(f"{lam} and {mu} are not a covering pair")
    a, b = vertex_direct(lam, n).values, vertex_direct(mu, n).values
    return tuple(x - y for x, y in zip(a, b))


def squared_distance(f, g):
    return sum((x - y) ** 2 for x, y in zip(f, g))


def rhombohedron_data(n=6):
    """Squared diagonals of the central cube under the Euclidean metric.

    Returns (face, body): ``face`` lists the sorted pair of squared
    diagonals of every 2-face, ``body`` the sorted squared lengths of the
    segments joining complementary corners.
    """
    cube = central_cube(n)
    corners = cube.corners
    point = {}
    for r in range(len(corners) + 1):
        for sub in combinations(corners, r):
            point[frozenset(sub)] = vertex_direct(remove_corners(cube.lam, sub), n).values
    face = []
    for a, b in combinations(corners, 2):
        rest = [c for c in corners if c not in (a, b)]
        for r in range(len(rest) + 1):
            for base in combinations(rest, r):
                base = frozenset(base)
                face.append(sorted([
                    squared_distance(point[base], point[base | {a, b}]),
                    squared_distance(point[base | {a}], point[base | {b}]),
                ]))
    full = frozenset(corners)
    body = sorted(squared_distance(point[s], point[full - s])
                  for s in point if corners[0] in s)
    return face, body
