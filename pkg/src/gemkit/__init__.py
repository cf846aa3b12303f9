"""gemkit: edge-colored graph encodings of compact 3-manifolds.

The core object is a 4-regular multigraph with a proper edge coloring by
four colors, stored as four fixed-point-free involutions.  Connected
bipartite graphs carry compact code strings; the package computes vertex
links, boundary profiles and first homology of the represented manifolds,
solves for admissible cyclic coverings via voltage assignments, and
enumerates small censuses up to color isomorphism.
"""

from gemkit.census import (
    CensusEntry,
    build_census,
    classify,
    enumerate_gems,
    minimality_probe,
    verify_table1,
)
from gemkit.coverings import (
    ComplexityBounds,
    CoveringMap,
    VoltageAssignment,
    complexity_bounds_report,
    derived_graph,
    find_admissible_cyclic_coverings,
    holonomy,
    is_admissible,
    verify_covering,
)
from gemkit.data import COVERING_BASE_CODES, COVERING_BASE_TETRAHEDRA, TABLE1
from gemkit.errors import (
    BadCharError,
    BadLengthError,
    CapExceededError,
    CodeError,
    GemError,
    InvalidLabelingError,
    NoAdmissibleCoveringError,
    NonUniformFiberError,
    NotAdjacencyPreservingError,
    NotBipartiteError,
    NotConnectedError,
    NotInvolutionError,
)
from gemkit.graphs import (
    COLOR_PAIRS,
    COLORS,
    BicoloredCycle,
    ColoredGraph,
    Residue,
    are_isomorphic,
    bicolored_cycles,
    bipartition,
    canonical_code,
    emit_code,
    identity_labeling,
    is_bipartite,
    is_connected,
    parse_code,
    recolored,
    relabeled,
    residues,
)
from gemkit.homology import HomologyGroup, smith_normal_form
from gemkit.topology import (
    BoundaryProfile,
    GemComplexityReport,
    SurfaceType,
    boundary_profile,
    euler_characteristic,
    first_homology,
    gem_complexity_report,
    invariant_report,
    is_closed,
    is_six_regular,
    link_surface,
    surface_type,
)

__version__ = "0.1.0"

__all__ = [
    "BicoloredCycle",
    "BoundaryProfile",
    "CensusEntry",
    "ColoredGraph",
    "COLOR_PAIRS",
    "COLORS",
    "COVERING_BASE_CODES",
    "COVERING_BASE_TETRAHEDRA",
    "ComplexityBounds",
    "CoveringMap",
    "GemComplexityReport",
    "HomologyGroup",
    "Residue",
    "SurfaceType",
    "TABLE1",
    "VoltageAssignment",
    "are_isomorphic",
    "bicolored_cycles",
    "bipartition",
    "boundary_profile",
    "canonical_code",
    "build_census",
    "classify",
    "complexity_bounds_report",
    "derived_graph",
    "emit_code",
    "enumerate_gems",
    "euler_characteristic",
    "find_admissible_cyclic_coverings",
    "first_homology",
    "gem_complexity_report",
    "holonomy",
    "identity_labeling",
    "invariant_report",
    "is_admissible",
    "is_bipartite",
    "is_closed",
    "is_connected",
    "is_six_regular",
    "link_surface",
    "minimality_probe",
    "parse_code",
    "recolored",
    "relabeled",
    "residues",
    "smith_normal_form",
    "surface_type",
    "verify_covering",
    "verify_table1",
    # errors
    "GemError",
    "CodeError",
    "BadLengthError",
    "BadCharError",
    "NotInvolutionError",
    "NotBipartiteError",
    "NotConnectedError",
    "InvalidLabelingError",
    "NotAdjacencyPreservingError",
    "NonUniformFiberError",
    "NoAdmissibleCoveringError",
    "CapExceededError",
]
