"""Exact graph toughness, adjacency spectra, and spectral toughness certificates.

The library computes toughness exactly by pruned cut enumeration, builds
the extremal families that sit on the certification thresholds, and
certifies 1/b-toughness of connected regular graphs from their second or
(b+1)-st adjacency eigenvalue, cross-validated against the exact solver.
"""

from .graph import (
    ComponentDecomposition,
    Graph,
    complement,
    complete,
    complete_bipartite,
    components,
    copies_k2_complement,
    cycle,
    delete_vertices,
    disjoint_union,
    edgeless,
    from_adjacency,
    from_edges,
    induced_subgraph,
    is_connected,
    is_regular,
    join,
    path,
)
from .graph6 import (
    BadLengthError,
    Graph6Error,
    InvalidByteError,
    TrailingGarbageError,
    iter_graph6,
    parse_graph6,
    write_graph6,
)
from .spectral import (
    TOL,
    NonRealSpectrumError,
    Partition,
    QuotientMatrix,
    Spectrum,
    check_interlacing,
    eigenvalues,
    eigenvalues_small_matrix,
    lambda_k,
    quotient_matrix,
    spectral_radius,
)
from .thresholds import (
    Branch,
    Comparison,
    ThresholdParams,
    ThresholdValue,
    alpha_d,
    compare_with_tolerance,
    phi,
    psi,
)
from .constructions import (
    ExtremalSpec,
    Family,
    InfeasibleConstructionError,
    build_G1star,
    build_G2star,
    build_G3star,
    build_G4star,
    build_H,
    build_family,
    deficient_vertices,
    feasible_star_parameters,
    hub_size,
)
from .toughness import (
    BudgetExceededError,
    CensusEntry,
    CensusMode,
    ToughnessDecision,
    ToughnessResult,
    ToughnessUndefinedError,
    component_census,
    is_one_over_b_tough,
    toughness_exact,
)
from .certify import (
    CertReport,
    ContradictionError,
    CorpusSummary,
    TheoremChoice,
    Verdict,
    certify_thm3,
    certify_thm4,
    random_regular,
    verify_on_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "ComponentDecomposition",
    "components",
    "delete_vertices",
    "induced_subgraph",
    "complement",
    "disjoint_union",
    "join",
    "is_connected",
    "is_regular",
    "complete",
    "cycle",
    "path",
    "edgeless",
    "complete_bipartite",
    "copies_k2_complement",
    "from_edges",
    "from_adjacency",
    "parse_graph6",
    "write_graph6",
    "iter_graph6",
    "Graph6Error",
    "BadLengthError",
    "InvalidByteError",
    "TrailingGarbageError",
    "TOL",
    "Spectrum",
    "Partition",
    "QuotientMatrix",
    "NonRealSpectrumError",
    "eigenvalues",
    "lambda_k",
    "spectral_radius",
    "quotient_matrix",
    "eigenvalues_small_matrix",
    "check_interlacing",
    "ThresholdParams",
    "ThresholdValue",
    "Branch",
    "Comparison",
    "alpha_d",
    "phi",
    "psi",
    "compare_with_tolerance",
    "ExtremalSpec",
    "Family",
    "InfeasibleConstructionError",
    "build_H",
    "build_G1star",
    "build_G2star",
    "build_G3star",
    "build_G4star",
    "build_family",
    "deficient_vertices",
    "hub_size",
    "feasible_star_parameters",
    "ToughnessResult",
    "ToughnessDecision",
    "ToughnessUndefinedError",
    "BudgetExceededError",
    "toughness_exact",
    "is_one_over_b_tough",
    "CensusMode",
    "CensusEntry",
    "component_census",
    "CertReport",
    "Verdict",
    "TheoremChoice",
    "ContradictionError",
    "CorpusSummary",
    "certify_thm3",
    "certify_thm4",
    "verify_on_corpus",
    "random_regular",
]
