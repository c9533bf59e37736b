"""Cross-module consistency checks, run by ``younghull verify``."""

import random
from fractions import Fraction
from math import comb

import numpy as np

from . import continuous, hull, moebius, partitions, projection


class VerificationError(AssertionError):
    pass


def _require(cond, message):
    if not cond:
        raise VerificationError(message)


def square_triple_failures(n, samples, rng, lo=-50, hi=50):
    """Count violations of the 2x2 square and boundary triple identities of f~."""
    bad = 0
    for _ in range(samples):
        f = [rng.randint(lo, hi) for _ in range(n)]
        ext = moebius.extend_function(f, n)
        e = lambda j, k: ext[moebius.canonical_site(j, k, n)]
        for j in range(n):
            bad += 2 * e(j, j + 1) + n - e(j, j) - e(j + 1, j + 1) != 1
            for k in range(j + 1, n):
                bad += e(j, k + 1) + e(j + 1, k) - e(j, k) - e(j + 1, k + 1) != 1
    return bad


def verify(n, oracle=False, samples=100, seed=0, log=print):
    """Run every consistency check for one N; raise VerificationError on a mismatch."""
    rng = random.Random(seed)
    lams = partitions.enumerate_young(n)
    _require(len(lams) == 2 ** (n - 1), f"|Y_N| = {len(lams)} != 2^(N-1)")
    for lam in lams:
        _require(partitions.sigma(partitions.tau(lam, n), n) == lam, f"sigma(tau({lam})) != {lam}")
        _require(partitions.tau(partitions.sigma(lam, n), n) == lam, f"tau(sigma({lam})) != {lam}")
        _require(n % len(partitions.tau_orbit(lam, n)) == 0, f"tau-orbit of {lam} does not divide N")
        _require(partitions.dual(lam) in set(lams), f"dual of {lam} leaves Y_N")
    log(f"partitions: {len(lams)} = 2^{n - 1}; tau/sigma inverse, orbits divide {n}")

    census = partitions.census_by_inner_corners(n)
    for s in range(n // 2 + 1):
        _require(census.get(s, 0) == comb(n, 2 * s), f"{census.get(s, 0)} partitions with {s} corners")
    log(f"inner-corner census: {[census.get(s, 0) for s in range(n // 2 + 1)]} = C(N, 2s)")

    rims = {moebius.rim_of_partition(lam, n): lam for lam in lams}
    _require(set(rims) == set(moebius.enumerate_rims(n)), "rims differ from the direct loop search")
    for rim, lam in rims.items():
        _require(moebius.partition_of_rim(rim) == lam, f"rim of {lam} does not invert")
        _require(abs(moebius.rim_matrix_det(lam, n)) == 2, f"|det T| != 2 for {lam}")
    log(f"rims: {len(rims)} loops, bijective with Y_N, |det T| = 2")

    vertices = {}
    for lam in lams:
        v = hull.vertex_direct(lam, n)
        _require(v.values == hull.vertex_recursive(lam, n).values, f"direct != recursive for {lam}")
        _require(v.values[0] == partitions.size(lam), f"f(0) != |lam| for {lam}")
        ext = moebius.extend_function(v.values, n)
        rim = set(moebius.rim_of_partition(lam, n).sites)
        for site, val in ext.items():
            _require((val == 0) == (site in rim) and val >= 0, f"rim constraint fails at {site} for {lam}")
            if n <= 9:
                _require(val == moebius.box_count_alpha(lam, site, n), f"f~ != alpha at {site} for {lam}")
        _require(hull.in_hull(v.values, n), f"f_{lam} not in E(X)")
        tv = hull.vertex_direct(partitions.tau(lam, n), n).values
        _require(tv == v.values[1:] + v.values[:1], f"rotation equivariance fails for {lam}")
        vertices[lam] = v.values
    log(f"vertices: {len(vertices)} matched (direct = recursive), all in E(X)")

    if oracle:
        found = set(hull.oracle_vertices(n))
        expected = {tuple(Fraction(x) for x in f) for f in vertices.values()}
        _require(found == expected, f"oracle found {len(found)} vertices, expected {len(expected)}")
        log(f"oracle: {len(found)} vertices of Delta(X) by brute force, identical set")

    skel = hull.hasse_skeleton(n)
    _require(len(skel.edges) == hull.face_count_closed(n, 1), f"{len(skel.edges)} edges")
    for a, b in skel.edges:
        diff = [x - y for x, y in zip(skel.vertices[a].values, skel.vertices[b].values)]
        _require(all(abs(x) == 1 for x in diff), f"edge {a}-{b} difference {diff}")
    log(f"edges: {len(skel.edges)}, every difference vector in {{+1,-1}}^N")

    counts = []
    for v in range(n // 2 + 2):
        m = len(hull.enumerate_faces(n, v))
        _require(m == hull.face_count_closed(n, v) == hull.face_count_sum(n, v), f"{v}-face count {m}")
        counts.append(m)
    log("faces: " + " ".join(f"v={v}:{m}" for v, m in enumerate(counts) if m))
    if n // 2 >= 2:
        log(f"2-faces: {counts[2]}")

    hi, lo, argmin = hull.norm_extremes(n)
    _require(6 * hi == n ** 3 - n, f"max l1 {hi}")
    if n % 2:
        _require(8 * lo == n ** 3 - n and argmin == [partitions.staircase(n)], f"min l1 {lo} at {argmin}")
    else:
        cube = sorted(hull.central_cube(n).partitions())
        _require(8 * lo == n ** 3 and sorted(argmin) == cube, f"min l1 {lo} at {argmin}")
    log(f"l1 norms: max {hi}, min {lo}")

    if n <= 14:
        _require(projection.circulant_det(n) == projection.circulant_det_closed(n), "circulant det")
        log(f"circulant det: {projection.circulant_det(n)}")
    proj = projection.projection_matrix(n)
    c = projection.circulant_matrix(n)
    err = max(float(np.max(np.abs(proj(c[j]) - projection.polygon_vertex(j, n)))) for j in range(n))
    _require(err <= 1e-9, f"N-gon error {err}")
    emb = projection.project_skeleton(n)
    log(f"projection: N-gon error {err:.1e}; {len(projection.origin_vertices(emb))} vertices at the origin")

    bad = square_triple_failures(n, samples, rng)
    _require(bad == 0, f"{bad} square/triple identity failures")
    log(f"square/triple identities: {samples} random vectors, no failures")

    for j in range(n):
        for k in range(n):
            dd = continuous.distance_D(Fraction(j, n), Fraction(k, n)) * n * n / 2
            _require(dd == hull.cyclic_distance(j, k, n), f"D(j/N, k/N) mismatch at {(j, k)}")
    for lam in lams:
        disc, _ = continuous.discretize_profile(lam, n)
        _require(disc(0) == 2 * partitions.durfee_side(lam), f"Durfee relation fails for {lam}")
    log("continuous: D(j/N, k/N) N^2/2 = d(j, k); scaled rim profiles valid")
    return True
