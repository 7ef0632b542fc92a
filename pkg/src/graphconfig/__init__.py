"""Configuration spaces of colored graphs as explicit cube complexes.

Build the n-point configuration complex of a finite colored graph (ordered
or unordered), then analyze it exactly: Euler characteristics, integer
homology, fundamental-group presentations, closed-surface recognition,
the link condition for non-positive curvature, manifold detection through
links, graph-of-groups splittings over the base graph, and shortest-path
planning for tokens moving on the graph.
"""

from .complexes import Components, CubeComplex, SimplicialComplex
from .curvature import (
    FlagReport,
    LinkConditionReport,
    check_flag_condition,
    check_link_condition,
)
from .graphs import (
    ColoredGraph,
    GraphMorphism,
    MorphismClass,
    classify_morphism,
    compose_morphisms,
    identity_morphism,
    random_colored_graph,
    standard_graph,
    subdivide,
)
from .invariants import (
    HomologyProfile,
    Presentation,
    SurfaceReport,
    classify_simplicial_surface,
    euler_characteristic,
    homology,
    pi1_presentation,
    smith_normal_form,
    surface_classify,
)
from .manifolds import (
    LinkClassification,
    LinkRecord,
    ManifoldReport,
    classify_links,
    ideal_finite_census,
    manifold_away_from_skeleton,
)
from .planning import legal_moves, path_moves, replay, shortest_path
from .spaces import (
    CellularMap,
    InducedReport,
    build_ordered,
    build_unordered,
    color_disjoint,
    induced_map,
    ordered_tuple_bound,
    verify_induced_properties,
)
from .splittings import (
    DecompositionEdge,
    DecompositionGraph,
    DecompositionNode,
    available_subgraph,
    decomposition_graph,
    fiber_complex,
)

__version__ = "0.1.0"

__all__ = [
    "ColoredGraph",
    "GraphMorphism",
    "MorphismClass",
    "classify_morphism",
    "compose_morphisms",
    "identity_morphism",
    "random_colored_graph",
    "standard_graph",
    "subdivide",
    "CubeComplex",
    "SimplicialComplex",
    "Components",
    "color_disjoint",
    "build_ordered",
    "build_unordered",
    "ordered_tuple_bound",
    "CellularMap",
    "induced_map",
    "InducedReport",
    "verify_induced_properties",
    "euler_characteristic",
    "homology",
    "HomologyProfile",
    "smith_normal_form",
    "pi1_presentation",
    "Presentation",
    "surface_classify",
    "SurfaceReport",
    "classify_simplicial_surface",
    "check_link_condition",
    "LinkConditionReport",
    "check_flag_condition",
    "FlagReport",
    "classify_links",
    "LinkClassification",
    "LinkRecord",
    "manifold_away_from_skeleton",
    "ManifoldReport",
    "ideal_finite_census",
    "available_subgraph",
    "fiber_complex",
    "decomposition_graph",
    "DecompositionGraph",
    "DecompositionNode",
    "DecompositionEdge",
    "legal_moves",
    "shortest_path",
    "path_moves",
    "replay",
]
