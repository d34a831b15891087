"""Exact divisor arithmetic and low-degree point interpolation bounds on
smooth complete toric surfaces."""

from .cohomology import (
    CohomologyProfile,
    DivisorPolytope,
    VanishingReport,
    cohomology,
    divisor_polytope,
    euler_characteristic,
    lattice_point_count,
    vanishing_predicates,
)
from .divisor import (
    Positivity,
    QToricDivisor,
    ToricDivisor,
    canonical_divisor,
    ceil_div,
    classes_equal,
    effective_representative,
    floor_div,
    intersection_number,
    positivity,
    principal_divisor,
)
from .fan import (
    LatticePoint,
    ToricSurfaceFan,
    build_fan,
    builtin_surface,
    hirzebruch,
    p1xp1,
    p2,
    prime_self_intersections,
)
from .lowdeg import (
    CurveOnSurface,
    HirzebruchExampleReport,
    InterpolationReport,
    LambdaResult,
    arithmetic_genus,
    blowup_self_intersection,
    hirzebruch_counterexample,
    interpolation_conditions,
    interpolation_divisor,
    lambda_invariant,
    mainprop_h0_bound,
    positive_curve_representation,
    seshadri_ample_check,
    toric_theorem_report,
)
from .plane import (
    PlaneCurveSpec,
    PlaneReport,
    decomposition_chain,
    find_m,
    gonality_floor,
    plane_degree_bound,
    plane_theorem_report,
    remark_inequality_check,
    sqrt_ceil_term,
)

__version__ = "0.1.0"
