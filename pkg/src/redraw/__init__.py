"""Counting how many ways triangulations can be drawn on point sets."""

from .bounds import (
    AlphaVector,
    ConstraintKind,
    entropy,
    exponent_rate,
    exponent_rate_gradient,
    growth_objective,
    largest_remainder_parts,
    multinomial_rate_check,
    optimize_growth,
)
from .comb import (
    CombTriangulation,
    build_k_nested_double_chain,
    build_k_nested_regular,
    canonical_code,
    enumerate_comb_triangulations,
    from_edge_list,
    from_rotation_json,
    from_straight_line_drawing,
    tutte_count,
)
from .drawings import (
    DrawingMapping,
    GeomTriangulation,
    apply_drawing,
    classify_drawings,
    classify_to_csv,
    count_drawings,
    count_geometric_triangulations,
    count_mappings,
    count_polygonalizations,
    enumerate_geometric_triangulations,
    forced_cycle,
    forced_edges_always_present,
    forced_hamiltonian_cycle,
    is_valid_drawing,
    recursive_layer_count,
    render_svg,
    to_comb,
)
from .geometry import Orientation, Point, convex_hull, general_position, orient, segments_cross
from .pointsets import (
    DoubleChain,
    NestedTriangles,
    PointSet,
    gen_double_chain,
    gen_nested_triangles,
    validate_double_chain,
    validate_nested_triangles,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaVector",
    "CombTriangulation",
    "ConstraintKind",
    "DoubleChain",
    "DrawingMapping",
    "GeomTriangulation",
    "NestedTriangles",
    "Orientation",
    "Point",
    "PointSet",
    "apply_drawing",
    "build_k_nested_double_chain",
    "build_k_nested_regular",
    "canonical_code",
    "classify_drawings",
    "classify_to_csv",
    "convex_hull",
    "count_drawings",
    "count_geometric_triangulations",
    "count_mappings",
    "count_polygonalizations",
    "entropy",
    "enumerate_comb_triangulations",
    "enumerate_geometric_triangulations",
    "exponent_rate",
    "exponent_rate_gradient",
    "forced_cycle",
    "forced_edges_always_present",
    "forced_hamiltonian_cycle",
    "from_edge_list",
    "from_rotation_json",
    "from_straight_line_drawing",
    "gen_double_chain",
    "gen_nested_triangles",
    "general_position",
    "growth_objective",
    "is_valid_drawing",
    "largest_remainder_parts",
    "multinomial_rate_check",
    "optimize_growth",
    "orient",
    "recursive_layer_count",
    "render_svg",
    "segments_cross",
    "to_comb",
    "tutte_count",
    "validate_double_chain",
    "validate_nested_triangles",
]
