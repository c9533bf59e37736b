"""Restricted Young lattices Y_N and the injective hull of the cyclic metric space X_N."""

from .continuous import (
    PLFunction,
    area_F,
    discretize_profile,
    distance_D,
    make_profile,
    rectangular_R,
)
from .hull import (
    Face,
    HullVertex,
    cyclic_distance,
    enumerate_faces,
    face_count_closed,
    hasse_skeleton,
    in_delta,
    in_hull,
    norm_extremes,
    oracle_vertices,
    vertex_direct,
    vertex_recursive,
)
from .moebius import (
    Rim,
    box_count_alpha,
    canonical_site,
    enumerate_rims,
    extend_function,
    partition_of_rim,
    rim_matrix_det,
    rim_of_partition,
)
from .partitions import (
    count_by_inner_corners,
    covers,
    dual,
    durfee_side,
    enumerate_young,
    inner_corners,
    max_hook,
    sigma,
    tau,
)
from .projection import circulant_det, project_skeleton, projection_matrix, write_svg

__version__ = "0.1.0"
