"""Distance spectra of connected graphs with exact arithmetic.

Core capabilities: graph6 I/O and BFS distance matrices, exact integer
characteristic polynomials, Sturm-sequence root localization against the
algebraic threshold (17 - sqrt(329))/2, the three graph families realizing
small second distance eigenvalues, certificate-producing classification, and
exhaustive cospectrality scans over small-order censuses.
"""

from .graphs import (
    ContradictionError,
    DisconnectedError,
    DistanceMatrix,
    Graph,
    Graph6Error,
    PATTERNS,
    Pattern,
    apsp,
    canonical_graph,
    canonical_key,
    diameter,
    enumerate_connected,
    find_induced,
    is_isomorphic,
    parse_graph6,
    principal_submatrix,
    read_graph6_lines,
    write_graph6,
)
from .spectra import (
    CharPoly,
    ONE_MINUS_SQRT3,
    ONE_MINUS_SQRT3_MIN_POLY,
    QuadAlg,
    SQRT2_MINUS_2,
    SQRT2_MINUS_2_MIN_POLY,
    SpectrumSummary,
    SturmChain,
    THETA,
    THETA_MIN_POLY,
    Trichotomy,
    char_poly_exact,
    count_distinct_roots_above,
    eigenvalues,
    lambda2_vs_threshold,
    power_sum_moment,
    root_multiplicity,
    summarize,
)
from .families import (
    Complete,
    ConeOfCliques,
    ConeFactor,
    PendantClique,
    build_complete,
    build_cone_of_cliques,
    build_pendant_clique,
    closed_form_cone_poly,
    closed_form_pendant_poly,
    cone_factor,
    pendant_params_from_poly,
    recognize,
    reconstruct_cone_partition,
)
from .classify import (
    AboveThreshold,
    CompletionCase,
    InFamily,
    check_certificate,
    classify_spectral,
    classify_structural,
    forbidden_scan,
)
from .scan import (
    ScanReport,
    family_cross_check,
    moment_audit,
    partitions,
    scan_order,
)

__version__ = "0.1.0"
