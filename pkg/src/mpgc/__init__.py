"""Recognition, enumeration and verification of minimal prime graph complements."""

from mpgc.coloring import color_counts_on, rotate_component_colors, three_color, validate
from mpgc.errors import CapabilityError, GraphInputError, PreconditionError, TheoremCheckFailure
from mpgc.gamma import (
    GammaGraph,
    GammaParams,
    build_gamma,
    check_gamma_cover,
    embed_gamma,
    gamma_counts,
    verify_gamma,
)
from mpgc.graph import (
    CanonicalForm,
    Graph,
    canonical_form,
    complement,
    cycles_through_edge,
    diameter,
    from_edges,
    has_induced_c5,
    is_bipartite,
    is_connected,
    min_degree,
    triangle_witness,
)
from mpgc.mpg import (
    CycleCover,
    MpgcReport,
    check_cycle_lemma,
    check_mpg,
    check_mpgc,
    check_structure,
    duplicate_vertex,
    find_blocker,
    five_cycle_cover,
    mpg_uncovered_edges,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "CapabilityError",
    "CycleCover",
    "GammaGraph",
    "GammaParams",
    "Graph",
    "GraphInputError",
    "MpgcReport",
    "PreconditionError",
    "TheoremCheckFailure",
    "build_gamma",
    "canonical_form",
    "check_cycle_lemma",
    "check_gamma_cover",
    "check_mpg",
    "check_mpgc",
    "check_structure",
    "color_counts_on",
    "complement",
    "cycles_through_edge",
    "diameter",
    "duplicate_vertex",
    "embed_gamma",
    "find_blocker",
    "five_cycle_cover",
    "from_edges",
    "gamma_counts",
    "has_induced_c5",
    "is_bipartite",
    "is_connected",
    "min_degree",
    "mpg_uncovered_edges",
    "rotate_component_colors",
    "three_color",
    "triangle_witness",
    "validate",
    "verify_gamma",
]
