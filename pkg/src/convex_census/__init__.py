"""Exact counting of convex polygons in plane graphs, and the extremal sequences around it."""
from .certify import (CertifiedVerdict, Interval, iv_exp, iv_root, verify_fact,
                      verify_lambda_bound, verify_theorem2)
from .constructions import (arc_points, balanced_triangulation, concat_construction,
                            convexify, count_containing_face)
from .counting import (ConvexPolygon, count_by_length, count_convex_paths,
                       count_convex_polygons, enumerate_convex_polygons, iter_convex_polygons)
from .geometry import (Orientation, Point, in_region, is_convex_cycle, is_convex_position,
                       lex_less, orientation)
from .oracle import brute_count, brute_count_paths
from .pslg import DualGraph, Pslg, Triangulation, dual_graph, is_triangulation, load, save, validate
from .recurrences import argmax_split, ccx_table, lambda_seq, p_table

__version__ = "0.1.0"
