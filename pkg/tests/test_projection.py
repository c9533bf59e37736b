import math

import numpy as np
import pytest

from conftest import leibniz_det
from younghull.projection import (
    circulant_det,
    circulant_det_closed,
    circulant_matrix,
    origin_vertices,
    polygon_vertex,
    project_skeleton,
    projection_matrix,
    rotate,
    svg_text,
    write_svg,
)
from younghull.partitions import tau


def test_circulant_small():
    assert circulant_matrix(2) == [[0, 1], [1, 0]]
    assert leibniz_det(circulant_matrix(2)) == -1
    assert leibniz_det(circulant_matrix(3)) == 16
    assert circulant_det(2) == -1 and circulant_det(3) == 16


def test_circulant_against_permutation_expansion():
    for n in range(2, 8):
        assert circulant_det(n) == leibniz_det(circulant_matrix(n)) == circulant_det_closed(n)


@pytest.mark.parametrize("n", range(2, 15))
def test_circulant_closed_form(n):
    assert circulant_det(n) == circulant_det_closed(n)


@pytest.mark.parametrize("n", range(2, 13))
def test_rectangles_map_to_polygon(n):
    proj = projection_matrix(n)
    c = circulant_matrix(n)
    for j in range(n):
        assert np.allclose(proj(c[j]), polygon_vertex(j, n), atol=1e-9, rtol=0)


def test_polygon_vertex():
    assert polygon_vertex(0, 4) == (0.0, -1.0)
    x, y = polygon_vertex(1, 4)
    assert math.isclose(x, 1.0) and abs(y) < 1e-15


def test_origin_vertices_nine():
    emb = project_skeleton(9)
    origin = origin_vertices(emb)
    assert sorted(origin) == sorted([(3, 3, 3), (4, 3, 2, 1), (4, 4, 1, 1, 1), (5, 2, 2, 2)])
    fixed = [lam for lam in origin if tau(lam, 9) == lam]
    assert fixed == [(4, 3, 2, 1)]
    orbit = {(3, 3, 3)}
    while len(orbit) < 4:
        new = {tau(lam, 9) for lam in orbit} | orbit
        if new == orbit:
            break
        orbit = new
    assert orbit == {(3, 3, 3), (5, 2, 2, 2), (4, 4, 1, 1, 1)}


def test_projection_is_rotation_equivariant():
    n = 7
    emb = project_skeleton(n)
    for lam, p in zip(emb.partitions, emb.points):
        # rotating coordinates by tau turns the picture by -2 pi / N
        q = emb.point(tau(lam, n))
        assert np.allclose(rotate(q, n, 1), p, atol=1e-9)


@pytest.mark.parametrize("n,nodes,edges", [(2, 2, 1), (5, 16, 20), (9, 256, 576)])
def test_svg_counts(n, nodes, edges):
    text = svg_text(project_skeleton(n))
    assert text.startswith("<?xml")
    assert text.count("<circle") == nodes
    assert text.count("<line") == edges


def test_svg_is_byte_stable(tmp_path):
    a = write_svg(project_skeleton(6), tmp_path / "a.svg")
    b = write_svg(project_skeleton(6), tmp_path / "b.svg")
    assert a.read_bytes() == b.read_bytes()
    assert b"-0.000" not in a.read_bytes()


def test_svg_write_error(tmp_path):
    with pytest.raises(OSError):
        write_svg(project_skeleton(3), tmp_path / "missing" / "x.svg")
