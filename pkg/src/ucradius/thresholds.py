"""Critical orders at which f, g, h become uniformly convex (or convex) on |z| < 1.

Each threshold solves a scalar equation in nu built from J_nu(1), J_{nu+1}(1)
and J_{nu-1}(1); the root is bracketed by a 0.05 scan on a fixed interval,
bisected, then polished by Newton on a numerical derivative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .bessel import DEFAULT_CONFIG, EvalConfig, bessel_j, bessel_j_prime, bessel_j_second
from .errors import BracketScanExhausted, DomainError
from .radius import check_kind_order, domain_hi, profile
from .zero_finder import refine_root

NU_SCAN_STEP = 0.05
MARGIN_GUARD = 1e-9
BRACKET_RTOL = 1e-12


class Threshold(str, Enum):
    NU1 = "nu1"
    NU2 = "nu2"
    NU3 = "nu3"
    NU_STAR = "nu_star"
    NU_DOUBLE_STAR = "nu_double_star"


@dataclass(frozen=True)
class ThresholdReport:
    which: Threshold
    value: float
    residual: float
    bracket: tuple


def _j(nu, cfg):
    return bessel_j(nu, 1.0, cfg)


def eq_nu_star(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """J'_nu(1)."""
    return bessel_j_prime(nu, 1.0, cfg)


def eq_nu1(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """nu(3nu-2)J_nu^2 + nu(4nu-5)J_nu J_{nu-1} + 2(1-nu)J_{nu-1}^2 at 1."""
    j, jm = _j(nu, cfg), _j(nu - 1, cfg)
    return nu * (3 * nu - 2) * j * j + nu * (4 * nu - 5) * j * jm + 2 * (1 - nu) * jm * jm


def eq_nu1_profile_form(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """1 + 2J''_nu(1)/J'_nu(1) + 2(1/nu - 1)J'_nu(1)/J_nu(1)."""
    j, jp, jpp = _j(nu, cfg), bessel_j_prime(nu, 1.0, cfg), bessel_j_second(nu, 1.0, cfg)
    return 1 + 2 * jpp / jp + 2 * (1 / nu - 1) * jp / j


def eq_nu2(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """(4nu-3)J_{nu+1}(1) - J_nu(1)."""
    return (4 * nu - 3) * _j(nu + 1, cfg) - _j(nu, cfg)


def eq_nu2_profile_form(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    j, j1 = _j(nu, cfg), _j(nu + 1, cfg)
    return 1 + 2 * ((2 * nu - 1) * j1 - j) / (j - j1)


def eq_nu3(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """(2nu-3)J_{nu+1}(1) + J_nu(1)."""
    return (2 * nu - 3) * _j(nu + 1, cfg) + _j(nu, cfg)


def eq_nu3_profile_form(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    j, j1 = _j(nu, cfg), _j(nu + 1, cfg)
    return 1 + (2 * (nu - 1) * j1 - j) / (2 * j - j1)


def eq_nu_double_star(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """(2nu-4)J_{nu+1}(1) + 3J_nu(1)."""
    return (2 * nu - 4) * _j(nu + 1, cfg) + 3 * _j(nu, cfg)


EQUATIONS = {
    Threshold.NU_STAR: eq_nu_star,
    Threshold.NU1: eq_nu1,
    Threshold.NU2: eq_nu2,
    Threshold.NU3: eq_nu3,
    Threshold.NU_DOUBLE_STAR: eq_nu_double_star,
}


def _scan_solve(which, f, lo, hi, include_lo, tol):
    tol = float(tol)
    if not 0.0 < tol <= 1e-6:
        raise DomainError(f"tol must lie in (0, 1e-6], got {tol}")
    k0 = 0 if include_lo else 1
    n = int(math.floor((hi - lo) / NU_SCAN_STEP + 1e-9))
    grid = [lo + k * NU_SCAN_STEP for k in range(k0, n + 1)]
    if grid[-1] < hi:
        grid.append(hi)
    prev_x, prev_f = grid[0], f(grid[0])
    for x in grid[1:]:
        fx = f(x)
        if prev_f == 0.0:
            return ThresholdReport(which, prev_x, 0.0, (prev_x, prev_x))
        if (prev_f < 0) != (fx < 0):
            break
        prev_x, prev_f = x, fx
    else:
        raise BracketScanExhausted(f"no sign change for {which.value} on [{lo}, {hi}]")

    def dnum(v):
        h = 1e-7
        return (f(v + h) - f(v - h)) / (2 * h)

    v, blo, bhi = refine_root(f, dnum, prev_x, x, prev_f, rtol=tol)
    return ThresholdReport(which, v, abs(f(v)), (blo, bhi))


def threshold_nu_star(cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> ThresholdReport:
    return _scan_solve(Threshold.NU_STAR, lambda v: eq_nu_star(v, cfg), 0.0, 1.0, False, tol)


def threshold_nu1(cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> ThresholdReport:
    lo = threshold_nu_star(cfg, tol).value
    return _scan_solve(Threshold.NU1, lambda v: eq_nu1(v, cfg), lo, 5.0, False, tol)


def threshold_nu2(cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> ThresholdReport:
    return _scan_solve(Threshold.NU2, lambda v: eq_nu2(v, cfg), 0.0, 5.0, True, tol)


def threshold_nu3(cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> ThresholdReport:
    return _scan_solve(Threshold.NU3, lambda v: eq_nu3(v, cfg), 0.0, 5.0, True, tol)


def threshold_nu_double_star(cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> ThresholdReport:
    return _scan_solve(Threshold.NU_DOUBLE_STAR, lambda v: eq_nu_double_star(v, cfg), -0.99, 1.0, True, tol)


SOLVERS = {
    Threshold.NU_STAR: threshold_nu_star,
    Threshold.NU1: threshold_nu1,
    Threshold.NU2: threshold_nu2,
    Threshold.NU3: threshold_nu3,
    Threshold.NU_DOUBLE_STAR: threshold_nu_double_star,
}


def threshold(which, cfg: EvalConfig = DEFAULT_CONFIG, tol: float = BRACKET_RTOL) -> ThresholdReport:
    return SOLVERS[Threshold(which)](cfg, tol)


def is_uniformly_convex_in_unit_disk(kind, nu, cfg: EvalConfig = DEFAULT_CONFIG,
                                     margin_guard: float = MARGIN_GUARD) -> bool:
    """True when the real-axis profile is still positive at r = 1.

    The profile at r = 1 is the infimum of the margin over the unit disk, so a
    value within ``margin_guard`` of zero (the threshold itself) counts as not
    uniformly convex.
    """
    nu = check_kind_order(kind, nu)
    if domain_hi(kind, nu, cfg) <= 1.0:
        return False
    return profile(kind, nu, 1.0, cfg) > margin_guard
