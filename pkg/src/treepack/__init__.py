"""Exact planar centers and packings of floor(n/3) edge-disjoint plane spanning trees."""

from .center import (
    CenterRegion,
    Centerpoint,
    classify_dimension,
    compute_center_region,
    enumerate_center_halfplanes,
    select_centerpoint,
)
from .errors import DimensionError, GeneralPositionError, RadialTieError, VerificationError
from .geometry import Point2, is_general_position, point, points
from .packing import Packing, SpanningTree, pack_spanning_trees, radial_order
from .verification import check_lemma1, min_halfplane_count

__all__ = [
    "CenterRegion",
    "Centerpoint",
    "DimensionError",
    "GeneralPositionError",
    "Packing",
    "Point2",
    "RadialTieError",
    "SpanningTree",
    "VerificationError",
    "check_lemma1",
    "classify_dimension",
    "compute_center_region",
    "enumerate_center_halfplanes",
    "is_general_position",
    "min_halfplane_count",
    "pack_spanning_trees",
    "point",
    "points",
    "radial_order",
    "select_centerpoint",
]
