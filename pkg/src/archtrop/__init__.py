"""Archimedean tropical varieties of sparse Laurent polynomials.

``ArchTrop(f)`` is the set of log-space points where the maximum of
``log|c_i| + a_i . v`` over the terms of ``f`` is attained at least twice.
It approximates the amoeba ``Log|Z(f)|`` within distances that depend only
on the number of terms.
"""

from .bounds import (
    AnnulusBound,
    GapCountReport,
    HausdorffBound,
    LogQuantity,
    annulus_certificate,
    cauchy_annulus,
    gap_counts,
    hausdorff_upper,
    hausdorff_upper_for,
    jensen_epsilon,
    montel_bound,
    montel_sharp_polynomial,
    smallest_root_bracket,
)
from .estimators import AmoebaSampler, ArchimedeanTropicalVariety
from .exceptions import (
    ArchTropError,
    ConvergenceFailure,
    DegenerateFiber,
    DimensionMismatch,
    EmptyPolynomial,
    EmptySet,
    EmptyTropicalSet,
    InvalidArity,
    ModelMismatch,
    NonIsolatedComponent,
    NonpositiveQuery,
    NotPlanar,
    NotUnivariate,
    PolynomialSyntaxError,
    PrecisionExhausted,
    SinglePoint,
    ZeroLeading,
    ZeroScale,
)
from .geometry import LiftedPolytope, LowerFace, arch_newton, lower_hull, newt_vertices
from .logvalue import ExactLogValue, argmax_set, working_precision
from .oracle import (
    AmoebaCloud,
    FiberGrid,
    RootSet,
    amoeba_1d,
    amoeba_point_near,
    directed_hausdorff,
    fiber_roots,
    hausdorff,
    roots_1d,
    sample_amoeba_2d,
)
from .parser import format_laurent, parse_laurent
from .polynomial import LaurentPoly, LogPolar, RationalComplex, reciprocal, rescale_transform
from .report import emit_plotdata
from .systems import (
    CandidatePoint,
    IsolationRegion,
    intersect_tropical,
    isolation_regions,
    isolation_report,
    region_contains,
    tropical_intersection,
)
from .tropical import (
    LogPoint,
    MembershipVerdict,
    TropicalCurve,
    UnivariateArchTrop,
    archtrop,
    archtrop_1d,
    archtrop_2d,
    distance_to,
    member,
    sample_points,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
