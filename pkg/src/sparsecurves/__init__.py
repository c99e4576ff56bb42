"""Sparse curve systems on high-genus surfaces.

Builds the cyclic-necklace curve families, computes their exact crossing
numbers three independent ways, certifies pairwise non-isotopy through
homology classes, and evaluates rigorous lower/upper size bounds in exact or
log-interval arithmetic.
"""

from .bounds import (
    BoundValue,
    CrossingInequalityVerdict,
    InequalityStatus,
    LinearRegimeBound,
    SizeUpperBound,
    bounds_table,
    certified_le,
    construction_count,
    crossing_inequality_check,
    linear_regime_bound,
    lower_bound,
    render_table_csv,
    render_table_json,
    upper_bound,
)
from .curves import (
    DEFAULT_WORD_CAP,
    CrossingReport,
    Curve,
    CurveSystem,
    SparsityThreshold,
    generate_necklace_family,
    generate_system,
    generate_system_analytic,
    sparsity_chain_check,
    verify_sparsity,
)
from .document import SystemDocument, load_document, save_document
from .errors import (
    DegenerateGeometryError,
    DocumentError,
    DomainError,
    EnumerationCapError,
    PrecisionError,
    SparseCurvesError,
)
from .homology import (
    DistinctnessCertificate,
    HomologyClass,
    certify_distinct,
    certify_generated,
    curve_class,
)
from .intersections import (
    AnnulusStrand,
    BoundaryPosition,
    annulus_family_crossings,
    necklace_family_crossings,
    oracle_crossings_pl,
    pair_intersection,
    strands_cross,
    total_crossings_analytic,
    total_crossings_explicit,
)
from .surfaces import (
    ARC_LABELS,
    CompositeSurface,
    NecklaceSurface,
    build_necklace,
    plan_composite,
)

__version__ = "0.1.0"
