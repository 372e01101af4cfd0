"""Perfectly matchable subgraph polytopes.

For a finite simple graph the polytope is the convex hull of the indicator
vectors of all vertex sets that admit a perfect matching in their induced
subgraph (including the empty set).  This package enumerates those lattice
points, builds inequality descriptions with facet flags, and decides
compressedness, Gorensteinness, and dilate decomposition properties, with
brute-force geometric oracles for cross-validation.
"""

from .classify import (
    ClassificationReport,
    ComponentReport,
    Verdict,
    classify_all,
    complete_multipartite_shape,
    compressed_by_theorem,
    gorenstein_bipartite,
    gorenstein_complete_multipartite,
    gorenstein_decide,
    gorenstein_pseudotree,
    odd_cycle_condition,
    solve_interior_vector,
)
from .errors import (
    DegeneratePointSetError,
    DisconnectedError,
    GraphParseError,
    InconsistentFacetsError,
    NotAFacetError,
    NotBipartiteError,
    NotPseudotreeError,
    PmspError,
    SelfLoopError,
    TooLargeError,
    UnsupportedShapeError,
)
from .graph import (
    Graph,
    VertexSet,
    bipartition,
    blocks_and_cut_vertices,
    complete_bipartite_graph,
    complete_graph,
    complete_multipartite_graph,
    connected_components,
    cycle_graph,
    induced_subgraph,
    is_connected,
    line_graph,
    parse_graph,
    parse_graph_json,
    path_graph,
    pseudotree_profile,
)
from .matchable import (
    MatchableFamily,
    hall_violations,
    has_perfect_matching,
    matchable_subsets,
)
from .oracle import (
    CorpusSpec,
    SweepRecord,
    SweepReport,
    agreement_sweep,
    brute_force_matchable,
    canonical_code,
    generate_corpus,
    sullivant_compressed,
)
from .polytope import (
    AffineInequality,
    AffineLattice,
    DilateCheck,
    FacetCheckReport,
    GorensteinCertificate,
    NormalizationMap,
    NormalizedPolytope,
    PointSet,
    bipartite_projection,
    dimension,
    facet_levels,
    gorenstein_geometric,
    idp_check,
    inequality_system,
    lattice_points,
    membership,
    normalize_lattice,
    verify_facet_flags,
)

__version__ = "0.1.0"

__all__ = [
    "AffineInequality",
    "AffineLattice",
    "ClassificationReport",
    "ComponentReport",
    "CorpusSpec",
    "DegeneratePointSetError",
    "DilateCheck",
    "DisconnectedError",
    "FacetCheckReport",
    "GorensteinCertificate",
    "Graph",
    "GraphParseError",
    "InconsistentFacetsError",
    "MatchableFamily",
    "NormalizationMap",
    "NormalizedPolytope",
    "NotAFacetError",
    "NotBipartiteError",
    "NotPseudotreeError",
    "PmspError",
    "PointSet",
    "SelfLoopError",
    "SweepRecord",
    "SweepReport",
    "TooLargeError",
    "UnsupportedShapeError",
    "Verdict",
    "VertexSet",
    "agreement_sweep",
    "bipartite_projection",
    "bipartition",
    "blocks_and_cut_vertices",
    "brute_force_matchable",
    "canonical_code",
    "classify_all",
    "complete_bipartite_graph",
    "complete_graph",
    "complete_multipartite_graph",
    "complete_multipartite_shape",
    "compressed_by_theorem",
    "connected_components",
    "cycle_graph",
    "dimension",
    "facet_levels",
    "generate_corpus",
    "gorenstein_bipartite",
    "gorenstein_complete_multipartite",
    "gorenstein_decide",
    "gorenstein_geometric",
    "gorenstein_pseudotree",
    "hall_violations",
    "has_perfect_matching",
    "idp_check",
    "induced_subgraph",
    "inequality_system",
    "is_connected",
    "lattice_points",
    "line_graph",
    "matchable_subsets",
    "membership",
    "normalize_lattice",
    "odd_cycle_condition",
    "parse_graph",
    "parse_graph_json",
    "path_graph",
    "pseudotree_profile",
    "solve_interior_vector",
    "sullivant_compressed",
    "verify_facet_flags",
]
