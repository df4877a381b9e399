"""Geometry of finite point worlds, assumption-digging diagrams and the podgon game."""

from .bisection import (
    Halves,
    a_bisection_points,
    all_segments_a_bisectable,
    all_segments_b_bisectable,
    b_bisection_cuts,
    parity_report,
)
from .enumeration import (
    SearchQuery,
    WorldFamily,
    canonical_form,
    enumerate_worlds,
    make_family,
    search_worlds,
)
from .figures import (
    CircleSpec,
    TriangleSpec,
    circle_points,
    circles_through,
    equilateral_triangles,
    is_isosceles,
    triangles,
)
from .lines import LineKind, is_subwalk, maximal_lines, straight_segments
from .world import Connection, Walk, World, distance, format_world, geodesics, is_geodesic, parse_world

__version__ = "0.1.0"
