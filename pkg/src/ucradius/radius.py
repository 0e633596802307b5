"""Radii of uniform convexity (and convexity for f) via monotone profile roots.

Each profile is the real-axis value of Re Q - |Q - 1| with Q = 1 + zF''/F'
at the point where the disk infimum is attained, written as a ratio of
reduced Bessel series so that no z^nu prefactor or branch choice enters:

    F   psi(r)   = -1 - 2(r^2 - nu^2)/R + 2(1/nu - 1) R,   R = rJ'_nu/J_nu
    G   phi(r)   = 1 + 2r((2nu-1)J_{nu+1} - rJ_nu)/(J_nu - rJ_{nu+1})
    G   Theta(r) = 1 + 2r(rI_nu - (2nu-1)I_{nu+1})/(I_nu + rI_{nu+1})          nu in (-2,-1)
    H   phi(r)   = 1 + s(2(nu-1)J_{nu+1}(s) - sJ_nu(s))/(2J_nu(s) - sJ_{nu+1}(s)),  s = sqrt r
    H   Phi(r)   = 1 + s(sI_nu(s) - 2(nu-1)I_{nu+1}(s))/(2I_nu(s) + sI_{nu+1}(s))  nu in (-2,-1)

Every profile decreases strictly from 1 (at r = 0+) to -inf at domain_hi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .bessel import DEFAULT_CONFIG, EvalConfig, as_nu, check_f_order, check_gh_order, reduced_series
from .errors import DomainError, RootNotBracketed
from .zero_finder import ZeroFamily, first_zero, imag_alpha, imag_beta, refine_root

BRACKET_RTOL = 1e-12


class FunctionKind(str, Enum):
    F = "f"
    G = "g"
    H = "h"


class RadiusKind(str, Enum):
    UNIFORM_CONVEXITY = "uniform_convexity"
    CONVEXITY = "convexity"


class Branch(str, Enum):
    REAL_ZEROS = "real_zeros"
    MODIFIED_BESSEL = "modified_bessel"


@dataclass(frozen=True)
class RadiusReport:
    kind: FunctionKind
    nu: float
    radius_kind: RadiusKind
    branch: Branch
    radius: float
    domain_hi: float
    residual: float
    iterations: int
    bracket: tuple = (math.nan, math.nan)


def check_kind_order(kind, nu) -> float:
    kind = FunctionKind(kind)
    nu = as_nu(nu)
    if kind is FunctionKind.F:
        check_f_order(nu)
    else:
        check_gh_order(nu)
    return nu


def branch_for(kind, nu) -> Branch:
    nu = check_kind_order(kind, nu)
    if FunctionKind(kind) is not FunctionKind.F and nu < -1:
        return Branch.MODIFIED_BESSEL
    return Branch.REAL_ZEROS


def domain_hi(kind, nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Right end of the interval holding the radius (first singularity of the profile)."""
    kind = FunctionKind(kind)
    nu = check_kind_order(kind, nu)
    modified = branch_for(kind, nu) is Branch.MODIFIED_BESSEL
    if kind is FunctionKind.F:
        return first_zero(ZeroFamily.JPRIME, nu, cfg)
    if kind is FunctionKind.G:
        return imag_alpha(nu, cfg).magnitude if modified else first_zero(ZeroFamily.DINI_ALPHA, nu, cfg)
    b = imag_beta(nu, cfg).magnitude if modified else first_zero(ZeroFamily.DINI_BETA, nu, cfg)
    return b * b


# ---------------------------------------------------------------------------
# raw profiles (no domain checks)


def _psi_raw(nu, r, cfg, factor=2.0):
    u = (r / 2) ** 2
    R = nu - r * r * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1) * reduced_series(nu, u, cfg))
    # Q - 1 = rJ''/J' + (1/nu - 1) rJ'/J
    q1 = -1.0 - (r * r - nu * nu) / R + (1.0 / nu - 1.0) * R
    return 1.0 + factor * q1


def _g_raw(nu, r, cfg):
    u = (r / 2) ** 2
    rj = reduced_series(nu, u, cfg)
    a1 = r * r * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1))
    return 1.0 + 2.0 * ((2 * nu - 1) * a1 - r * r * rj) / (rj - a1)


def _theta_raw(nu, r, cfg):
    u = -((r / 2) ** 2)
    ri = reduced_series(nu, u, cfg)
    b1 = r * r * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1))
    return 1.0 + 2.0 * (r * r * ri - (2 * nu - 1) * b1) / (ri + b1)


def _h_raw(nu, r, cfg):
    u = r / 4
    rj = reduced_series(nu, u, cfg)
    a1 = r * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1))
    return 1.0 + (2 * (nu - 1) * a1 - r * rj) / (2 * rj - a1)


def _phi_mod_raw(nu, r, cfg):
    u = -r / 4
    ri = reduced_series(nu, u, cfg)
    b1 = r * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1))
    return 1.0 + (r * ri - 2 * (nu - 1) * b1) / (2 * ri + b1)


def _profile_callable(kind, nu, cfg, radius_kind=RadiusKind.UNIFORM_CONVEXITY):
    kind = FunctionKind(kind)
    if kind is FunctionKind.F:
        factor = 2.0 if radius_kind is RadiusKind.UNIFORM_CONVEXITY else 1.0
        return lambda r: _psi_raw(nu, r, cfg, factor)
    if radius_kind is not RadiusKind.UNIFORM_CONVEXITY:
        raise DomainError("convexity radius is provided for kind f only")
    modified = branch_for(kind, nu) is Branch.MODIFIED_BESSEL
    if kind is FunctionKind.G:
        raw = _theta_raw if modified else _g_raw
    else:
        raw = _phi_mod_raw if modified else _h_raw
    return lambda r: raw(nu, r, cfg)


def _checked(kind, nu, r, cfg):
    nu = check_kind_order(kind, nu)
    hi = domain_hi(kind, nu, cfg)
    r = float(r)
    if not 0.0 < r < hi:
        raise DomainError(f"r={r} outside the profile domain (0, {hi:.15g}) for kind {FunctionKind(kind).value}, nu={nu}")
    return nu


def profile(kind, nu, r, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Uniform-convexity profile of the given kind, dispatching on the branch."""
    nu = _checked(kind, nu, r, cfg)
    return _profile_callable(kind, nu, cfg)(float(r))


def profile_f(nu, r, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    return profile(FunctionKind.F, nu, r, cfg)


def profile_f_printed(nu, r, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """The alternative closed form 1 + 2(r^2-nu^2)J/(rJ') + 2(1-1/nu) rJ'/J.

    It equals -profile_f, hence has the same zero.
    """
    nu = _checked(FunctionKind.F, nu, r, cfg)
    r = float(r)
    u = (r / 2) ** 2
    R = nu - r * r * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1) * reduced_series(nu, u, cfg))
    return 1.0 + 2.0 * (r * r - nu * nu) / R + 2.0 * (1.0 - 1.0 / nu) * R


def profile_c_f(nu, r, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Convexity profile 1 + rf''/f' of f on the real axis."""
    nu = _checked(FunctionKind.F, nu, r, cfg)
    return _psi_raw(nu, float(r), cfg, 1.0)


def profile_g(nu, r, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """phi on the real branch (nu > -1), Theta on the modified branch."""
    return profile(FunctionKind.G, nu, r, cfg)


def profile_g_series_form(nu, r, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """1 + 2 r (rJ_{nu+2} - 3J_{nu+1})/(J_nu - rJ_{nu+1}) on the real branch."""
    nu = _checked(FunctionKind.G, nu, r, cfg)
    if nu < -1:
        raise DomainError("series form is defined on the real branch nu > -1")
    r = float(r)
    u = (r / 2) ** 2
    rj = reduced_series(nu, u, cfg)
    a1 = r * r * reduced_series(nu + 1, u, cfg) / (2 * (nu + 1))
    a2 = r**4 * reduced_series(nu + 2, u, cfg) / (4 * (nu + 1) * (nu + 2))
    return 1.0 + 2.0 * (a2 - 3 * a1) / (rj - a1)


def profile_h(nu, r, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """phi (h case) on the real branch, Phi on the modified branch; r is the squared variable."""
    return profile(FunctionKind.H, nu, r, cfg)


def profile_theta(nu, r, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    if not -2 < as_nu(nu) < -1:
        raise DomainError("Theta is defined for nu in (-2, -1)")
    return profile_g(nu, r, cfg)


def profile_phi(nu, r, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    if not -2 < as_nu(nu) < -1:
        raise DomainError("Phi is defined for nu in (-2, -1)")
    return profile_h(nu, r, cfg)


# ---------------------------------------------------------------------------
# solvers


def _check_tol(tol):
    tol = float(tol)
    if not 0.0 < tol <= 1e-6:
        raise DomainError(f"tol must lie in (0, 1e-6], got {tol}")
    return tol


def _solve(kind, nu, cfg, radius_kind, tol=BRACKET_RTOL):
    tol = _check_tol(tol)
    nu = check_kind_order(kind, nu)
    branch = branch_for(kind, nu)
    hi = domain_hi(kind, nu, cfg)
    f = _profile_callable(kind, nu, cfg, radius_kind)
    lo_x, hi_x = 1e-6 * hi, (1 - 1e-6) * hi
    flo, fhi = f(lo_x), f(hi_x)
    if not (flo > 0 > fhi):
        raise RootNotBracketed(
            f"profile of kind {FunctionKind(kind).value} at nu={nu} has no sign change: "
            f"{flo:.3g} at {lo_x:.3g}, {fhi:.3g} at {hi_x:.3g}"
        )
    iterations = [0]

    def counted(x):
        iterations[0] += 1
        return f(x)

    def dnum(x):
        h = 1e-6 * hi
        h = min(h, 0.5 * (x - lo_x), 0.5 * (hi - x))
        return (f(x + h) - f(x - h)) / (2 * h)

    x, blo, bhi = refine_root(counted, dnum, lo_x, hi_x, flo, rtol=tol * hi / hi_x)
    return RadiusReport(
        kind=FunctionKind(kind), nu=nu, radius_kind=radius_kind, branch=branch,
        radius=x, domain_hi=hi, residual=abs(f(x)), iterations=iterations[0], bracket=(blo, bhi),
    )


def radius_uc(kind, nu, cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> RadiusReport:
    return _solve(kind, nu, cfg, RadiusKind.UNIFORM_CONVEXITY, tol)


def radius_uc_f(nu, cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> RadiusReport:
    return radius_uc(FunctionKind.F, nu, cfg, tol)


def radius_uc_g(nu, cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> RadiusReport:
    return radius_uc(FunctionKind.G, nu, cfg, tol)


def radius_uc_h(nu, cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> RadiusReport:
    return radius_uc(FunctionKind.H, nu, cfg, tol)


def radius_c_f(nu, cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> RadiusReport:
    return _solve(FunctionKind.F, nu, cfg, RadiusKind.CONVEXITY, tol)
