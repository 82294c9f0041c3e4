"""Tropical (min-plus / max-plus) dot-product representations of graphs."""

from .errors import (
    BadParameter,
    BadSpec,
    DimensionMismatch,
    InvalidCover,
    InvalidInputRepresentation,
    MixedInfinity,
    NotThreshold,
    ParseError,
    TooLarge,
    TropigraphError,
    VertexCountMismatch,
    VertexMismatch,
)
from .graphs import (
    CaterpillarSpec,
    Graph,
    alpha,
    caterpillar,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty,
    generate,
    matching,
    maximum_clique,
    maximum_independent_set,
    parse_edge_list,
    parse_graph6,
    path,
    star,
    to_edge_list,
    to_graph6,
)
from .representations import (
    Representation,
    caterpillar_2dim,
    caterpillar_rep_for_graph,
    cycle_3dim,
    cycle_rep_for_graph,
    forest_of_caterpillars,
    join_clique,
    maxplus_from_cover,
    maxplus_generic,
    minplus_extend_vertex,
    minplus_from_intersection,
    minplus_generic,
    multipartite_kdim,
    multipartite_rep_for_graph,
    rescale,
    threshold_1dim,
)
from .threshold import (
    CoverMode,
    CoverSolution,
    ThetaResult,
    ThresholdCertificate,
    ThresholdRealization,
    VertexKind,
    complement_cover,
    find_alternating_c4,
    is_threshold,
    max_induced_threshold,
    star_cover,
    theta,
    theta_bounds,
    theta_hat,
    threshold_weights,
    validate_cover,
)
from .tropical import (
    MAX_PLUS,
    MIN_PLUS,
    NEG_INF,
    POS_INF,
    Algebra,
    TropicalValue,
    TropicalVector,
    as_fraction,
    trop_add,
    trop_dot,
    trop_mul,
    trop_scale,
    trop_sub,
)
from .verify import (
    ConjectureReport,
    DimensionResult,
    VerificationReport,
    canonical_code,
    check_conjecture,
    nonisomorphic_graphs,
    project_slices,
    realize_graph,
    rho,
    verify,
)

__version__ = "0.1.0"
