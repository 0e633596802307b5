"""Radii of uniform convexity of normalized Bessel functions of the first kind."""

from .bessel import (
    DEFAULT_CONFIG,
    ComplexPoint,
    EvalConfig,
    Order,
    ReducedBesselValue,
    bessel_i,
    bessel_j,
    bessel_j_any,
    bessel_j_prime,
    bessel_j_second,
    dini_alpha,
    dini_beta,
    gamma,
    reduced_i,
    reduced_j,
)
from .errors import (
    BracketScanExhausted,
    DomainError,
    InvariantViolation,
    NearPoleError,
    NoConvergence,
    NumericalFailure,
    PoleError,
    RootNotBracketed,
    UCRadiusError,
)
from .lemma import LemmaCase, lemma_i_sides, lemma_ii_sides, random_cases
from .oracle import (
    Certification,
    CertifyVerdict,
    OracleReport,
    Verdict,
    certify_radius,
    disk_min_margin,
    uc_margin,
)
from .radius import (
    Branch,
    FunctionKind,
    RadiusKind,
    RadiusReport,
    domain_hi,
    profile,
    profile_c_f,
    profile_f,
    profile_g,
    profile_h,
    radius_c_f,
    radius_uc,
    radius_uc_f,
    radius_uc_g,
    radius_uc_h,
)
from .thresholds import (
    Threshold,
    ThresholdReport,
    is_uniformly_convex_in_unit_disk,
    threshold,
    threshold_nu1,
    threshold_nu2,
    threshold_nu3,
    threshold_nu_double_star,
    threshold_nu_star,
)
from .zero_finder import (
    ImagZero,
    Zero,
    ZeroFamily,
    ZeroTable,
    imag_alpha,
    imag_beta,
    ml_extrapolate,
    ml_sum_alpha,
    ml_sum_beta,
    ml_tail_estimate,
    zeros,
)

__version__ = "0.1.0"
