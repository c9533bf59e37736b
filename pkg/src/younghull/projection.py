"""Planar projection of the hull through the circulant distance matrix."""

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from ._exact import det_bareiss, inverse_fraction
from .hull import distance_matrix, hasse_skeleton


def circulant_matrix(n):
    """C_N with entry (j, k) = d(j, k); row j is f for the rectangle (j^(N-j))."""
    return distance_matrix(n)


def circulant_det_closed(n):
    """(-1)^(N+1) (2N)^(N-2) (N^2 - 1) / 3."""
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    value = Fraction((-1) ** (n + 1) * (2 * n) ** (n - 2) * (n * n - 1), 3)
    assert value.denominator == 1
    return int(value)


def circulant_det(n):
    """Exact determinant of C_N (arbitrary precision integers)."""
    return det_bareiss(circulant_matrix(n))


def polygon_vertex(j, n):
    """Vertex j of the target N-gon: rotation block applied to (cos, sin)."""
    theta = 2 * math.pi * j / n
    return (math.sin(theta), -math.cos(theta))


@dataclass(frozen=True)
class PlaneProjection:
    n: int
    matrix: np.ndarray

    def __call__(self, f):
        return self.matrix @ np.asarray(f, dtype=float)


def projection_matrix(n):
    """P = [[0, 1], [-1, 0]] @ [cos; sin] @ C_N^-1, with C_N^-1 computed exactly."""
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    inv = np.array([[float(x) for x in row] for row in inverse_fraction(circulant_matrix(n))])
    theta = 2 * np.pi * np.arange(n) / n
    trig = np.vstack([np.cos(theta), np.sin(theta)])
    rot = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return PlaneProjection(n, rot @ trig @ inv)


@dataclass
class Embedding:
    n: int
    partitions: list
    points: np.ndarray
    edges: list

    def point(self, lam):
        return self.points[self.partitions.index(lam)]


def project_skeleton(n):
    skel = hasse_skeleton(n)
    proj = projection_matrix(n)
    values = np.array([v.values for v in skel.vertices], dtype=float)
    points = values @ proj.matrix.T
    return Embedding(n, [v.lam for v in skel.vertices], points, list(skel.edges))


def origin_vertices(embedding, tol=1e-9):
    """Partitions whose projection lies within ``tol`` of the origin."""
    return [lam for lam, p in zip(embedding.partitions, embedding.points)
            if np.max(np.abs(p)) <= tol]


def rotate(point, n, steps=1):
    a = 2 * math.pi * steps / n
    c, s = math.cos(a), math.sin(a)
    x, y = point
    return (c * x - s * y, s * x + c * y)


def svg_text(embedding, scale=100.0, radius=2.0, stroke=1.0, color="black"):
    """Render the embedding as an SVG 1.1 document string.

    The y axis is flipped so the picture keeps the mathematical
    orientation; the canvas is fitted to the points with a 5% margin.
    """
    pts = embedding.points * scale
    pts = np.column_stack([pts[:, 0], -pts[:, 1]])
    lo = pts.min(axis=0)
    hi = pts.max(axis=0)
    span = np.maximum(hi - lo, 2 * radius)
    margin = 0.05 * span + radius
    lo = lo - margin
    width, height = span + 2 * margin

    def fmt(x):
        x = round(float(x), 3)
        return f"{x + 0.0:.3f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt(width)}" height="{fmt(height)}" '
        f'viewBox="{fmt(lo[0])} {fmt(lo[1])} {fmt(width)} {fmt(height)}">',
        f'<g stroke="{color}" stroke-width="{fmt(stroke)}">',
    ]
    for a, b in embedding.edges:
        (x1, y1), (x2, y2) = pts[a], pts[b]
        out.append(f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}"/>')
    out.append("</g>")
    out.append(f'<g fill="{color}">')
    for (x, y), lam in zip(pts, embedding.partitions):
        label = ",".join(map(str, lam)) or "0"
        out.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(radius)}"><title>{label}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(embedding, path, scale=100.0, radius=2.0, stroke=1.0):
    path = Path(path)
    text = svg_text(embedding, scale=scale, radius=radius, stroke=stroke)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write SVG to {path}: {exc}") from exc
    return path
