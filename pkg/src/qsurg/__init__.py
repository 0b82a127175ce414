"""qsurg: CSS codes as chain complexes over GF(2), with automated code
surgery via pushouts and coequalisers, and distance estimation."""

from .css import ChainMap2, CodeStats, CssCode, direct_sum, k_of, new_css, stats_of, tensor_code, validate_chain_map
from .distance import (
    DistanceReport,
    GaugeSpec,
    distance_exact,
    distance_exhaustive,
    distance_upper_random,
    find_low_weight_logicals,
    subsystem_distance,
)
from .errors import (
    CapExceeded,
    CommutationError,
    InvalidSpec,
    NoLogicals,
    NoSpan,
    NotALogical,
    NotIrreducible,
    Overlap,
    ParseError,
    QsurgError,
    ShapeError,
)
from .families import FamilySpec, build, parse_poly
from .gf2 import BitMatrix, BitVector, RingPoly, hstack, in_span, kernel_basis, kron, lift, rank, rref, vstack
from .logicals import LogicalBasis, Subcomplex, is_gauge_fixable, is_irreducible, logical_basis, restricted_matrix
from .spans import MonicSpan, find_monic_span
from .surgery import (
    AncillaComplex,
    MergeResult,
    classify_logicals,
    direct_merge,
    external_merge,
    internal_merge,
    path_complex,
    sandwich,
    single_qubit_measure,
    truncated_path_complex,
)

__version__ = "0.1.0"
