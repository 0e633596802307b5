"""Power-series evaluation of J_nu, I_nu and the Dini combinations.

Everything is built on the reduced (entire) function

    RJ_nu(z) = 2^nu Gamma(nu+1) z^(-nu) J_nu(z) = sum_n c_n u^n,   u = (z/2)^2,

with c_0 = 1 and c_{n+1} = -c_n / ((n+1)(n+nu+1)).  It has no branch cut, so
complex arguments (and the modified function, u < 0) need no special care.

The series is summed in floating point while the cancellation estimate
``eps * sum|t_n|`` stays below ``ROUNDING_BUDGET``; otherwise the same
recurrence is re-summed in exact fixed-point integer arithmetic with enough
guard bits, which keeps zeros up to x ~ 200 accurate without asymptotics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoConvergence, PoleError

EPS = np.finfo(float).eps
ROUNDING_BUDGET = 1e-14
SMALL_X = 1e-8

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


@dataclass(frozen=True)
class EvalConfig:
    """Series truncation policy.

    A series stops once its geometric tail bound is below
    ``abs_tol + rel_tol * |partial sum|``.
    """

    max_terms: int = 400
    abs_tol: float = 1e-16
    rel_tol: float = 1e-16

    def __post_init__(self):
        if int(self.max_terms) != self.max_terms or self.max_terms < 16:
            raise DomainError(f"max_terms must be an integer >= 16, got {self.max_terms}")
        for name in ("abs_tol", "rel_tol"):
            tol = getattr(self, name)
            if not (0.0 < tol <= 1e-6):
                raise DomainError(f"{name} must lie in (0, 1e-6], got {tol}")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class Order:
    """A Bessel order nu.  Range checks happen in the consuming operation."""

    nu: float

    def __post_init__(self):
        if not math.isfinite(self.nu):
            raise DomainError(f"order must be finite, got {self.nu}")

    def __float__(self):
        return float(self.nu)


@dataclass(frozen=True)
class ComplexPoint:
    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError(f"complex point must be finite, got ({self.re}, {self.im})")

    def __complex__(self):
        return complex(self.re, self.im)


@dataclass(frozen=True)
class ReducedBesselValue:
    value: complex
    terms_used: int
    tail_bound: float
    round_bound: float


def as_nu(nu) -> float:
    nu = float(nu)
    if not math.isfinite(nu):
        raise DomainError(f"order must be finite, got {nu}")
    return nu


def check_gh_order(nu: float) -> float:
    """Orders accepted by g/h (and the kernel): nu > -2, nu != -1."""
    nu = as_nu(nu)
    if nu <= -2.0 or nu == -1.0:
        raise DomainError(f"order must satisfy nu > -2 and nu != -1, got nu={nu}")
    return nu


def check_f_order(nu: float) -> float:
    nu = as_nu(nu)
    if not nu > 0.0:
        raise DomainError(f"f_nu requires nu > 0, got nu={nu}")
    return nu


# ---------------------------------------------------------------------------
# Gamma


def gamma(x: float) -> float:
    """Gamma(x) for x > -2, via Lanczos plus upward recurrence for x < 1/2."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"gamma argument must be finite, got {x}")
    if x <= -2.0:
        raise DomainError(f"gamma is only supported for x > -2, got {x}")
    if x == 0.0 or x == -1.0:
        raise PoleError(f"gamma has a pole at x={x}")
    if x < 0.5:
        # Gamma(x) = Gamma(x + k) / (x (x+1) ... (x+k-1))
        div = 1.0
        while x < 0.5:
            div *= x
            x += 1.0
        return _lanczos(x) / div
    return _lanczos(x)


def _lanczos(x: float) -> float:
    x -= 1.0
    acc = _LANCZOS_P[0]
    for i, p in enumerate(_LANCZOS_P[1:], start=1):
        acc += p / (x + i)
    t = x + _LANCZOS_G + 0.5
    # split the power to keep t**(x+0.5) from overflowing before exp(-t)
    half = t ** (0.5 * (x + 0.5))
    return math.sqrt(2.0 * math.pi) * half * (half * math.exp(-t)) * acc


# ---------------------------------------------------------------------------
# Reduced series


def _check_series_order(order: float) -> None:
    if order <= -3.0 or (order < 0 and order == math.floor(order)):
        raise DomainError(f"reduced series undefined for order {order}")


def _series_scalar(order, u, cfg):
    total = term = 1.0
    absum = 1.0
    au = abs(u)
    for m in range(1, cfg.max_terms):
        term = term * (-u / (m * (m + order)))
        total += term
        at = abs(term)
        absum += at
        if m >= 2:
            rho = au / ((m + 1) * (m + 1 + order))
            if rho < 0.5 and 2.0 * rho * at <= cfg.abs_tol + cfg.rel_tol * abs(total):
                return total, m + 1, 2.0 * rho * at, absum
    raise NoConvergence(
        f"reduced series (order {order}, |u|={au:.3g}) did not converge in {cfg.max_terms} terms"
    )


def _series_float(order, u, cfg):
    u = np.asarray(u)
    dtype = complex if np.iscomplexobj(u) else float
    total = np.ones(u.shape, dtype)
    term = np.ones(u.shape, dtype)
    absum = np.ones(u.shape)
    au = np.abs(u)
    for m in range(1, cfg.max_terms):
        term = term * (-u / (m * (m + order)))
        total = total + term
        absum = absum + np.abs(term)
        if m >= 2:
            rho = au / ((m + 1) * (m + 1 + order))
            if np.all(rho < 0.5):
                tail = 2.0 * rho * np.abs(term)
                if np.all(tail <= cfg.abs_tol + cfg.rel_tol * np.abs(total)):
                    return total, m + 1, tail, absum
    raise NoConvergence(
        f"reduced series (order {order}, |u| up to {float(np.max(au)):.3g}) "
        f"did not converge in {cfg.max_terms} terms"
    )


def _series_exact(order: float, u: complex, cfg, absum: float):
    """Same recurrence in fixed-point integers; exact up to floor rounding."""
    guard = 40 + max(0, math.ceil(math.log2(max(absum, 1.0))))
    prec = 53 + guard
    scale = 1 << prec
    a, b = float(order).as_integer_ratio()
    ur, ui = float(u.real), float(u.imag)
    pr, qr = ur.as_integer_ratio()
    pi_, qi = ui.as_integer_ratio()
    q = max(qr, qi)
    pr *= q // qr
    pi_ *= q // qi
    au = abs(u)
    # resolve the tail down to the working resolution: the caller's prefactor
    # (x/2)^nu / Gamma(nu+1) can amplify absolute error by orders of magnitude
    floor_tol = 2.0 ** (-prec + 8)
    if pi_ == 0:
        return _series_exact_real(order, a, b, pr, q, au, prec, floor_tol, cfg)
    tr, ti = scale, 0
    sr, si = scale, 0
    for m in range(1, cfg.max_terms):
        den = q * m * (m * b + a)
        nr = -(tr * pr - ti * pi_) * b
        ni = -(tr * pi_ + ti * pr) * b
        if den < 0:
            nr, ni, den = -nr, -ni, -den
        # round to nearest keeps the accumulated error symmetric
        tr = (2 * nr + den) // (2 * den)
        ti = (2 * ni + den) // (2 * den)
        sr += tr
        si += ti
        if m >= 2:
            rho = au / ((m + 1) * (m + 1 + order))
            if rho < 0.5:
                tmag = math.hypot(tr / scale, ti / scale)
                tail = 2.0 * rho * tmag
                smag = math.hypot(sr / scale, si / scale)
                if tail <= min(cfg.abs_tol + cfg.rel_tol * smag, floor_tol):
                    value = complex(sr / scale, si / scale)
                    rnd = EPS * abs(value) + (m + 1) * 2.0 ** (-prec + 1)
                    return value, m + 1, tail, rnd
    raise NoConvergence(
        f"reduced series (order {order}, |u|={au:.3g}) did not converge in {cfg.max_terms} terms"
    )


def _series_exact_real(order, a, b, pr, q, au, prec, floor_tol, cfg):
    scale = 1 << prec
    t = s = scale
    pb = -pr * b
    for m in range(1, cfg.max_terms):
        den = q * m * (m * b + a)
        num = t * pb
        if den < 0:
            num, den = -num, -den
        t = (2 * num + den) // (2 * den)
        s += t
        if m >= 2:
            rho = au / ((m + 1) * (m + 1 + order))
            if rho < 0.5:
                tail = 2.0 * rho * abs(t / scale)
                if tail <= min(cfg.abs_tol + cfg.rel_tol * abs(s / scale), floor_tol):
                    value = s / scale
                    rnd = EPS * abs(value) + (m + 1) * 2.0 ** (-prec + 1)
                    return complex(value), m + 1, tail, rnd
    raise NoConvergence(
        f"reduced series (order {order}, |u|={au:.3g}) did not converge in {cfg.max_terms} terms"
    )


def reduced_series(order, u, cfg: EvalConfig = DEFAULT_CONFIG, full: bool = False):
    """Evaluate RJ_order at ``u = (z/2)^2`` (scalar or array, real or complex).

    With ``full=True`` returns ``(value, terms_used, tail_bound, round_bound)``
    where the bounds are maxima over the array.
    """
    order = float(order)
    _check_series_order(order)
    if np.ndim(u) == 0:
        return _reduced_scalar(order, u, cfg, full)
    u_arr = np.asarray(u)
    total, terms, tail, absum = _series_float(order, u_arr, cfg)
    rnd = 2.0 * EPS * absum
    need = rnd > ROUNDING_BUDGET * np.maximum(1.0, np.abs(total))
    if np.any(need):
        total = np.array(total, copy=True)
        tail = np.array(tail, dtype=float, copy=True)
        rnd = np.array(rnd, dtype=float, copy=True)
        flat_u = u_arr.reshape(-1)
        for idx in np.flatnonzero(need.reshape(-1)):
            pos = np.unravel_index(idx, u_arr.shape)
            v, k, t, r = _series_exact(order, complex(flat_u[idx]), cfg, float(absum[pos]))
            total[pos] = v if np.iscomplexobj(total) else v.real
            tail[pos] = t
            rnd[pos] = r
            terms = max(terms, k)
    if full:
        return total, terms, float(np.max(tail)), float(np.max(rnd))
    return total


def _reduced_scalar(order, u, cfg, full):
    u = complex(u) if np.iscomplexobj(u) else float(u)
    total, terms, tail, absum = _series_scalar(order, u, cfg)
    rnd = 2.0 * EPS * absum
    if rnd > ROUNDING_BUDGET * max(1.0, abs(total)):
        value, terms, tail, rnd = _series_exact(order, complex(u), cfg, absum)
        total = value if isinstance(u, complex) else value.real
    if full:
        return total, terms, tail, rnd
    return total


def reduced_j(nu, z, cfg: EvalConfig = DEFAULT_CONFIG) -> ReducedBesselValue:
    """RJ_nu(z) = 2^nu Gamma(nu+1) z^-nu J_nu(z) for complex z."""
    nu = check_gh_order(nu)
    z = complex(z)
    value, terms, tail, rnd = reduced_series(nu, (z / 2) ** 2, cfg, full=True)
    return ReducedBesselValue(complex(value), terms, tail, rnd)


def reduced_i(nu, x, cfg: EvalConfig = DEFAULT_CONFIG):
    """Reduced modified function RI_nu(x) = RJ_nu(ix) (all terms after the first share a sign)."""
    x = np.asarray(x, dtype=float)
    return reduced_series(nu, -(x / 2) ** 2, cfg)


# ---------------------------------------------------------------------------
# Unreduced evaluators on the positive axis


def _check_x(x) -> float:
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"argument must be a finite real > 0, got x={x}")
    return x


def _j_any(order: float, x: float, cfg) -> float:
    """J_order(x) for any order > -3 including negative integers."""
    if order < 0 and order == math.floor(order):
        m = int(-order)
        return (-1) ** m * _j_any(float(m), x, cfg)
    pref = (x / 2) ** order / gamma(order + 1)
    return pref * reduced_series(order, (x / 2) ** 2, cfg)


def bessel_j_any(order, x, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """J_order(x) for any real order > -3, e.g. the neighbour nu - 1 in recurrences.

    Negative integer orders use J_{-m} = (-1)^m J_m.
    """
    order = as_nu(order)
    if order <= -3.0:
        raise DomainError(f"order must exceed -3, got {order}")
    return _j_any(order, _check_x(x), cfg)


def bessel_j(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    nu = check_gh_order(nu)
    x = _check_x(x)
    return _j_any(nu, x, cfg)


def bessel_j_prime(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """J'_nu(x) from x J'_nu = x J_{nu-1} - nu J_nu."""
    nu = check_gh_order(nu)
    x = _check_x(x)
    if x < SMALL_X:
        u = (x / 2) ** 2
        inner = nu * reduced_series(nu, u, cfg) - 2 * u / (nu + 1) * reduced_series(nu + 1, u, cfg)
        return (x / 2) ** (nu - 1) / (2 * gamma(nu + 1)) * inner
    return _j_any(nu - 1, x, cfg) - nu * _j_any(nu, x, cfg) / x


def bessel_j_second(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """J''_nu(x) from the Bessel equation x^2 J'' + x J' + (x^2 - nu^2) J = 0."""
    nu = check_gh_order(nu)
    x = _check_x(x)
    if x < SMALL_X:
        lead = (x / 2) ** nu / gamma(nu + 1)
        return lead * (nu * (nu - 1) / x**2 - (2 * nu + 1) / (2 * (nu + 1)))
    jp = bessel_j_prime(nu, x, cfg)
    j = _j_any(nu, x, cfg)
    return -jp / x - (1.0 - (nu / x) ** 2) * j


def bessel_i(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    nu = check_gh_order(nu)
    x = float(x)
    if not (math.isfinite(x) and x >= 0.0):
        raise DomainError(f"argument must be a finite real >= 0, got x={x}")
    if x == 0.0:
        if nu == 0.0:
            return 1.0
        if nu > 0.0:
            return 0.0
        raise DomainError(f"I_nu(0) is unbounded for nu={nu} < 0")
    pref = (x / 2) ** nu / gamma(nu + 1)
    return pref * reduced_series(nu, -(x / 2) ** 2, cfg)


def dini_alpha(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """(1 - nu) J_nu(x) + x J'_nu(x), computed as J_nu(x) - x J_{nu+1}(x)."""
    nu = check_gh_order(nu)
    x = _check_x(x)
    return _j_any(nu, x, cfg) - x * _j_any(nu + 1, x, cfg)


def dini_beta(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """(2 - nu) J_nu(x) + x J'_nu(x), computed as 2 J_nu(x) - x J_{nu+1}(x)."""
    nu = check_gh_order(nu)
    x = _check_x(x)
    return 2 * _j_any(nu, x, cfg) - x * _j_any(nu + 1, x, cfg)
