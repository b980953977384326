"""Exact Tutte, coboundary, and characteristic polynomials of ideal
arrangements of root systems (families A, B, C, D at any rank; G2, F4, E6).

Classical types go through the finite field method: closed-form weighted
point counts at a plan of valid primes, then exact Lagrange interpolation.
Exceptional types go through the basis-activity formula.  A corank-nullity
brute-force oracle cross-validates both.
"""

from .errors import (
    ConstraintError,
    GuardExceeded,
    IdealTutteError,
    InconsistencyError,
    UnsupportedTypeError,
    VerificationMismatch,
)
from .exactpoly import (
    BivariatePolynomial,
    UnivariatePolynomial,
    coboundary_to_tutte,
    lagrange_interpolate,
    parse_polynomial,
    tutte_to_characteristic,
)
from .rootsystems import (
    Root,
    RootPoset,
    RootSystemType,
    hasse_covers,
    hyperplane_tuple,
    linear_order_key,
    positive_roots,
    root_leq,
    root_poset,
    root_system_type,
)
from .ideals import (
    Arrangement,
    BlockPartition,
    Ideal,
    IdealComplement,
    arrangement_of,
    complement,
    decompose_components,
    enumerate_ideals,
    generating_boxes,
    ideal_from_boxes,
    ideal_from_mask,
    ideal_from_root_coords,
    is_connected,
    is_full,
    iter_ideals,
    partition_in_accordance,
    signature,
    signature_table,
)
from .crapo import (
    BasisActivity,
    VectorConfig,
    activity,
    enumerate_bases,
    rank_of,
    tutte_corank_nullity,
    tutte_crapo,
)
from .ffmethod import (
    CountingModel,
    MinorProfile,
    PrimePlan,
    TProfile,
    coboundary_full,
    coboundary_full_at_prime,
    coboundary_ideal_at_prime,
    coboundary_polynomial,
    count_points_bruteforce,
    minor_set,
    prime_plan,
    tutte_via_ffmethod,
)
from .specialize import (
    FactorizationReport,
    IdealExponents,
    characteristic_polynomial,
    check_exponent_factorization,
    coboundary_of_ideal,
    ideal_exponents,
    region_count,
    tutte_of_ideal,
)

__version__ = "0.1.0"
