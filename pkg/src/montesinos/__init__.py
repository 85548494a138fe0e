"""Exact enumeration of candidate essential surfaces and boundary slopes
for Montesinos knots via Farey-diagram edgepath systems."""

from .rationals import INF, Frac, decimal_str
from .farey import (
    Edge,
    PartialPoint,
    Vertex,
    angle,
    circle,
    diagram_edge,
    farey_parents,
    horizontal_edge,
    is_farey_edge,
    mediant,
    same_triangle,
    uv_coords,
)
from .edgepaths import (
    Edgepath,
    PathSkeleton,
    SignedEdge,
    classify_type,
    constant_path,
    edge_sign,
    edge_twist,
    enumerate_skeletons,
    path_from_vertices,
)
from .systems import (
    CapExceededError,
    DegenerateSystemError,
    Diagnostic,
    EdgepathSystem,
    EndpointSolution,
    MontesinosKnot,
    SeifertReferenceError,
    Violation,
    enumerate_systems,
    enumerate_systems_with_diagnostics,
    find_seifert_system,
    is_seifert_candidate,
    penultimate_vertex,
    solve_endpoints,
    validate_system,
)
from .surfaces import (
    IntegrityError,
    SurfaceReport,
    boundary_component_count,
    boundary_slope,
    build_report,
    build_reports,
    essentiality,
    euler_characteristic_type_I,
    euler_ratio,
    number_of_sheets,
    system_twist,
)
from .bruteforce import (
    WeightVector,
    brute_force_endpoints,
    exhaustive_paths,
    normalize_weight_vector,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Frac",
    "decimal_str",
    "Edge",
    "PartialPoint",
    "Vertex",
    "angle",
    "circle",
    "diagram_edge",
    "farey_parents",
    "horizontal_edge",
    "is_farey_edge",
    "mediant",
    "same_triangle",
    "uv_coords",
    "Edgepath",
    "PathSkeleton",
    "SignedEdge",
    "classify_type",
    "constant_path",
    "edge_sign",
    "edge_twist",
    "enumerate_skeletons",
    "path_from_vertices",
    "CapExceededError",
    "DegenerateSystemError",
    "Diagnostic",
    "EdgepathSystem",
    "EndpointSolution",
    "MontesinosKnot",
    "SeifertReferenceError",
    "Violation",
    "enumerate_systems",
    "enumerate_systems_with_diagnostics",
    "find_seifert_system",
    "is_seifert_candidate",
    "penultimate_vertex",
    "solve_endpoints",
    "validate_system",
    "IntegrityError",
    "SurfaceReport",
    "boundary_component_count",
    "boundary_slope",
    "build_report",
    "build_reports",
    "essentiality",
    "euler_characteristic_type_I",
    "euler_ratio",
    "number_of_sheets",
    "system_twist",
    "WeightVector",
    "brute_force_endpoints",
    "exhaustive_paths",
    "normalize_weight_vector",
]
