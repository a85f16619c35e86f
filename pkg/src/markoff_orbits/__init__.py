"""Orbit equivalence on generalized Markoff cubic surfaces.

Exact-integer toolkit for the surfaces

    x1^2 + x2^2 + x3^2 + x1*x2*x3 - a1*x1 - a2*x2 - a3*x3 - b = 0,

their Vieta involutions, height descent to last vertices, finite
exceptional sets, and decision procedures (with replayable
certificates) for equivalence under the full involution group and under
the mapping class group of even words.
"""

from .decide import (
    Certificate,
    DegenerateUnbounded,
    Reason,
    SliceClass,
    decide_gamma,
    decide_mcg,
    probe_junction_pairs,
    slice_analysis,
    trace_bounded_region,
)
from .descent import (
    DescentResult,
    Moveset,
    OrbitEdge,
    OrbitGraph,
    ResourceCap,
    descend,
    descending_directions,
    is_last_vertex,
    orbit_graph,
)
from .exceptional import (
    INDEX_TRIPLES,
    ExceptionalCatalog,
    core_components,
    enumerate_core,
    enumerate_core_mcg,
    is_in_core,
    is_in_junction,
    is_in_junction_mcg,
)
from .oracle import OracleVerdict, bfs_orbit, oracle_equivalent
from .surface import (
    MoveWord,
    NotOnSurface,
    ParameterMismatch,
    SurfaceParams,
    SurfacePoint,
    apply_vieta,
    apply_word,
    derive_params,
    height,
    make_point,
    residual,
    reverse_word,
    simplify_word,
    torus_params,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "DegenerateUnbounded",
    "DescentResult",
    "ExceptionalCatalog",
    "INDEX_TRIPLES",
    "MoveWord",
    "Moveset",
    "NotOnSurface",
    "OracleVerdict",
    "OrbitEdge",
    "OrbitGraph",
    "ParameterMismatch",
    "Reason",
    "ResourceCap",
    "SliceClass",
    "SurfaceParams",
    "SurfacePoint",
    "apply_vieta",
    "apply_word",
    "bfs_orbit",
    "core_components",
    "decide_gamma",
    "decide_mcg",
    "derive_params",
    "descend",
    "descending_directions",
    "enumerate_core",
    "enumerate_core_mcg",
    "height",
    "is_in_core",
    "is_in_junction",
    "is_in_junction_mcg",
    "is_last_vertex",
    "make_point",
    "oracle_equivalent",
    "orbit_graph",
    "probe_junction_pairs",
    "residual",
    "reverse_word",
    "simplify_word",
    "slice_analysis",
    "torus_params",
    "trace_bounded_region",
]
