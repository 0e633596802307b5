"""Disk-sampling check of the uniform-convexity margin Re Q - |Q - 1|.

Q(z) = 1 + zF''(z)/F'(z) is assembled from reduced Bessel series with
complex argument, so the oracle shares only the series kernel with the
profile solvers; the quotients themselves are built independently:

    F    Q - 1 = -1 - (z^2 - nu^2)/R + (1/nu - 1) R,   R = zJ'_nu(z)/J_nu(z)
    G    Q - 1 = z(zJ_{nu+2} - 3J_{nu+1})/(J_nu - zJ_{nu+1})
    H    Q - 1 = the G-type quotient in w = sqrt z, written in z directly
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .bessel import DEFAULT_CONFIG, ComplexPoint, EvalConfig, reduced_series
from .errors import DomainError, NearPoleError
from .radius import Branch, FunctionKind, branch_for, check_kind_order, domain_hi

DEFAULT_ANGULAR_SAMPLES = 720
MARGIN_GUARD = 1e-9
POLE_RTOL = 1e-12
INTERIOR_POINTS = 16


class Verdict(str, Enum):
    UNIFORMLY_CONVEX = "uniformly_convex"
    NOT_UNIFORMLY_CONVEX = "not_uniformly_convex"
    INCONCLUSIVE = "inconclusive"


class CertifyVerdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class OracleReport:
    kind: FunctionKind
    nu: float
    radius_tested: float
    angular_samples: int
    min_margin: float
    argmin_angle: float
    verdict: Verdict


@dataclass(frozen=True)
class Certification:
    verdict: CertifyVerdict
    kind: FunctionKind
    nu: float
    radius: float
    epsilon: float
    inner: OracleReport | None
    interior_min: float
    outer_point: complex
    outer_margin: float
    notes: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.verdict is CertifyVerdict.PASS


def _as_complex(z) -> complex:
    if isinstance(z, ComplexPoint):
        return complex(z)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"point must be finite, got {z}")
    return z


def _ratio(num, den):
    if abs(den) <= POLE_RTOL * abs(num):
        raise NearPoleError(f"denominator {abs(den):.3g} below {POLE_RTOL:g} x numerator {abs(num):.3g}")
    return num / den


def _q_minus_one(kind, nu, z, cfg):
    if z == 0:
        return 0j
    if kind is FunctionKind.F:
        z2 = z * z
        u = z2 / 4
        rj = reduced_series(nu, u, cfg)
        a1 = z2 * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1))
        R = nu - _ratio(a1, rj)
        return -1.0 - _ratio(z2 - nu * nu, R) + (1.0 / nu - 1.0) * R
    if kind is FunctionKind.G:
        z2 = z * z
        u = z2 / 4
        rj = reduced_series(nu, u, cfg)
        a1 = z2 * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1))
        a2 = z2 * z2 * reduced_series(nu + 2, u, cfg) / (4 * (nu + 1) * (nu + 2))
        return _ratio(a2 - 3 * a1, rj - a1)
    u = z / 4
    rj = reduced_series(nu, u, cfg)
    b1 = z * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1))
    b2 = z * z * reduced_series(nu + 2, u, cfg) / (4 * (nu + 1) * (nu + 2))
    return 0.5 * _ratio(b2 - 4 * b1, 2 * rj - b1)


def q_minus_one(kind, nu, z, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zF''(z)/F'(z) for the normalized function of the given kind."""
    kind = FunctionKind(kind)
    nu = check_kind_order(kind, nu)
    z = _as_complex(z)
    hi = domain_hi(kind, nu, cfg)
    if not abs(z) < hi:
        raise DomainError(f"|z|={abs(z):.15g} outside the singularity-free disk of radius {hi:.15g}")
    return complex(_q_minus_one(kind, nu, z, cfg))


def uc_margin(kind, nu, z, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Re Q(z) - |Q(z) - 1|; positive throughout a disk iff uniformly convex there."""
    q = q_minus_one(kind, nu, z, cfg)
    return 1.0 + q.real - abs(q)


def _margins_on_circle(kind, nu, r, thetas, cfg):
    out = np.empty(len(thetas))
    for i, t in enumerate(thetas):
        q = complex(_q_minus_one(kind, nu, r * complex(math.cos(t), math.sin(t)), cfg))
        out[i] = 1.0 + q.real - abs(q)
    return out


def _verdict(m, guard):
    if m > guard:
        return Verdict.UNIFORMLY_CONVEX
    if m < -guard:
        return Verdict.NOT_UNIFORMLY_CONVEX
    return Verdict.INCONCLUSIVE


def disk_min_margin(kind, nu, r, angular_samples: int = DEFAULT_ANGULAR_SAMPLES,
                    cfg: EvalConfig = DEFAULT_CONFIG, margin_guard: float = MARGIN_GUARD) -> OracleReport:
    """Minimum margin over |z| = r sampled at equispaced angles in [0, pi].

    ``angular_samples`` is the number of equal angular steps, so the grid has
    one more point and contains 0, pi/2 (for even counts) and pi. Ties
    (within rounding) go to the smallest angle, so even kinds, whose margins
    at 0 and pi coincide, report the positive real axis.
    """
    kind = FunctionKind(kind)
    nu = check_kind_order(kind, nu)
    r = float(r)
    if int(angular_samples) != angular_samples or angular_samples < 8:
        raise DomainError(f"angular_samples must be an integer >= 8, got {angular_samples}")
    hi = domain_hi(kind, nu, cfg)
    if not 0.0 <= r < hi:
        raise DomainError(f"r={r} outside [0, {hi:.15g}) for kind {kind.value}, nu={nu}")
    thetas = np.linspace(0.0, math.pi, int(angular_samples) + 1)
    m = _margins_on_circle(kind, nu, r, thetas, cfg)
    lo = float(m.min())
    k = int(np.flatnonzero(m <= lo + 1e-12 * max(1.0, abs(lo)))[0])
    return OracleReport(kind, nu, r, int(angular_samples), lo, float(thetas[k]), _verdict(lo, margin_guard))


def extremal_direction(kind, nu) -> complex:
    """Unit direction where the disk infimum is attained for this kind and branch."""
    kind = FunctionKind(kind)
    if branch_for(kind, nu) is Branch.MODIFIED_BESSEL:
        return 1j if kind is FunctionKind.G else -1.0 + 0j
    return 1.0 + 0j


def certify_radius(kind, nu, radius, epsilon: float = 1e-3, cfg: EvalConfig = DEFAULT_CONFIG,
                   angular_samples: int = DEFAULT_ANGULAR_SAMPLES, seed: int = 0) -> Certification:
    """PASS iff the margin is positive on |z| = radius(1-eps) (plus random interior
    points) and negative at the extremal point of modulus radius(1+eps)."""
    kind = FunctionKind(kind)
    nu = check_kind_order(kind, nu)
    radius = float(radius)
    if not 0.0 < epsilon <= 1e-2:
        raise DomainError(f"epsilon must lie in (0, 1e-2], got {epsilon}")
    if not radius > 0.0:
        raise DomainError(f"radius must be positive, got {radius}")
    hi = domain_hi(kind, nu, cfg)
    r_in, r_out = radius * (1 - epsilon), radius * (1 + epsilon)
    direction = extremal_direction(kind, nu)
    outer_point = r_out * direction
    notes = []

    if r_in >= hi:
        notes.append("inner circle reaches the first singularity")
        return Certification(CertifyVerdict.FAIL, kind, nu, radius, epsilon, None, math.nan,
                             outer_point, math.nan, tuple(notes))
    inner = disk_min_margin(kind, nu, r_in, angular_samples, cfg)
    inner_ok = inner.min_margin > 0.0

    rng = np.random.default_rng(seed)
    rho = r_in * np.sqrt(rng.random(INTERIOR_POINTS))
    ang = rng.uniform(-math.pi, math.pi, INTERIOR_POINTS)
    interior = [uc_margin(kind, nu, complex(p * math.cos(t), p * math.sin(t)), cfg) for p, t in zip(rho, ang)]
    interior_min = float(min(interior))
    interior_ok = interior_min > 0.0

    if r_out >= hi:
        # the first singularity lies inside the outer circle
        outer_margin = -math.inf
        notes.append("outer point beyond the first singularity")
    else:
        outer_margin = uc_margin(kind, nu, outer_point, cfg)
    outer_ok = outer_margin < 0.0

    if not inner_ok:
        notes.append("margin not positive on the inner circle")
    if not interior_ok:
        notes.append("margin not positive at an interior point")
    if not outer_ok:
        notes.append("margin not negative at the outer extremal point")
    verdict = CertifyVerdict.PASS if inner_ok and interior_ok and outer_ok else CertifyVerdict.FAIL
    return Certification(verdict, kind, nu, radius, epsilon, inner, interior_min,
                         outer_point, outer_margin, tuple(notes))
