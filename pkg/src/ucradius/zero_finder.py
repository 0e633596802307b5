"""Positive zeros of J_nu, J'_nu and the two Dini functions, with brackets.

All families are located on their reduced forms (the factor x^nu and
Gamma(nu+1) stripped), which share the positive zeros of the originals:

    J        RJ_nu(x)
    JPrime   nu RJ_nu(x) - x^2/(2(nu+1)) RJ_{nu+1}(x)      (x J'_nu / prefactor)
    Alpha    RJ_nu(x) - x^2/(2(nu+1)) RJ_{nu+1}(x)         ((1-nu)J + xJ')
    Beta   2 RJ_nu(x) - x^2/(2(nu+1)) RJ_{nu+1}(x)         ((2-nu)J + xJ')

For nu in (-2, -1) the first alpha/beta zero is purely imaginary; its
magnitude solves the real modified-Bessel equation obtained from z = ia.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum

import mpmath
import numpy as np

from .bessel import DEFAULT_CONFIG, EvalConfig, as_nu, bessel_i, reduced_series
from .errors import BracketScanExhausted, DomainError

SCAN_STEP = math.pi / 8
MAX_COUNT = 64
BISECT_RTOL = 1e-12


class ZeroFamily(str, Enum):
    J = "j"
    JPRIME = "jprime"
    DINI_ALPHA = "alpha"
    DINI_BETA = "beta"


@dataclass(frozen=True)
class Zero:
    n: int
    value: float
    bracket_lo: float
    bracket_hi: float


@dataclass(frozen=True)
class ZeroTable:
    family: ZeroFamily
    nu: float
    zeros: tuple

    @property
    def values(self) -> np.ndarray:
        return np.array([z.value for z in self.zeros])

    def __getitem__(self, n: int) -> float:
        """1-based access to the n-th zero value."""
        return self.zeros[n - 1].value

    def __len__(self):
        return len(self.zeros)


@dataclass(frozen=True)
class ImagZero:
    which: str  # "alpha" (a) or "beta" (b)
    nu: float
    magnitude: float
    residual: float
    bracket: tuple


def _check_family_order(family: ZeroFamily, nu: float) -> None:
    if family is ZeroFamily.JPRIME:
        if not nu > 0:
            raise DomainError(f"JPrime zeros require nu > 0, got nu={nu}")
    elif not nu > -1:
        raise DomainError(f"{family.value} zeros require nu > -1, got nu={nu}")


def family_function(family, nu, cfg: EvalConfig = DEFAULT_CONFIG):
    """Return ``(f, df)`` for the reduced form of a zero family."""
    family = ZeroFamily(family)
    nu = as_nu(nu)
    k1 = 1.0 / (2 * (nu + 1))
    k2 = 1.0 / (4 * (nu + 1) * (nu + 2))

    if family is ZeroFamily.J:
        def f(x):
            return reduced_series(nu, (x / 2) ** 2, cfg)

        def df(x):
            return -x * k1 * reduced_series(nu + 1, (x / 2) ** 2, cfg)

        return f, df

    c = {ZeroFamily.JPRIME: nu, ZeroFamily.DINI_ALPHA: 1.0, ZeroFamily.DINI_BETA: 2.0}[family]

    def f(x):
        u = (x / 2) ** 2
        return c * reduced_series(nu, u, cfg) - x * x * k1 * reduced_series(nu + 1, u, cfg)

    def df(x):
        u = (x / 2) ** 2
        return (-x * (c + 2) * k1 * reduced_series(nu + 1, u, cfg)
                + x**3 * k2 * reduced_series(nu + 2, u, cfg))

    return f, df


def refine_root(f, df, lo, hi, flo=None, rtol=BISECT_RTOL, newton_steps=2):
    """Bisect a sign-change bracket to width ``rtol*|lo|``, then polish by Newton.

    Returns ``(root, lo, hi)``; the final bracket still carries the sign change
    and a Newton step that leaves it is discarded.
    """
    if flo is None:
        flo = f(lo)
    while hi - lo > rtol * max(abs(lo), abs(hi)):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid, lo, hi
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    if df is not None:
        for _ in range(newton_steps):
            d = df(x)
            if d == 0 or not math.isfinite(d):
                break
            xn = x - f(x) / d
            if not (lo <= xn <= hi):
                break
            x = xn
    return x, lo, hi


def _scan(f, start, stop, count, step=SCAN_STEP):
    brackets = []
    x0, f0 = start, f(start)
    k = 1
    while len(brackets) < count:
        x1 = start + k * step
        if x1 > stop:
            break
        f1 = f(x1)
        if f1 == 0.0:
            x1 = x1 + 1e-9 * step
            f1 = f(x1)
        if (f0 < 0) != (f1 < 0):
            brackets.append((x0, x1, f0))
        x0, f0 = x1, f1
        k += 1
    return brackets


def _compute_zeros(family, nu, count, cfg):
    f, df = family_function(family, nu, cfg)
    start = max(1e-3, 0.5 * nu) if family is ZeroFamily.JPRIME else 1e-3
    stop = (count + 2) * math.pi + abs(nu) + 10
    brackets = _scan(f, start, stop, count)
    if len(brackets) < count:
        raise BracketScanExhausted(
            f"found {len(brackets)} of {count} {family.value} zeros for nu={nu} on [{start}, {stop:.4g}]"
        )
    out = []
    for n, (lo, hi, flo) in enumerate(brackets, start=1):
        x, blo, bhi = refine_root(f, df, lo, hi, flo)
        out.append(Zero(n, x, blo, bhi))
    return ZeroTable(family, nu, tuple(out))


_memo: dict = {}
_memo_locks: dict = {}
_memo_guard = threading.Lock()


def _memo_key(family, nu):
    return family, float(f"{nu:.12g}")


def zeros(family, nu, count: int, cfg: EvalConfig = DEFAULT_CONFIG) -> ZeroTable:
    """First ``count`` positive zeros of the family at order ``nu``."""
    family = ZeroFamily(family)
    nu = as_nu(nu)
    _check_family_order(family, nu)
    if int(count) != count or not 1 <= count <= MAX_COUNT:
        raise DomainError(f"count must be an integer in [1, {MAX_COUNT}], got {count}")
    count = int(count)
    key = _memo_key(family, nu) + (cfg,)
    table = _memo.get(key)
    if table is not None and len(table) >= count:
        return _head(table, count)
    with _memo_guard:
        lock = _memo_locks.setdefault(key, threading.Lock())
    with lock:
        table = _memo.get(key)
        if table is None or len(table) < count:
            table = _compute_zeros(family, nu, count, cfg)
            _memo[key] = table
    return _head(table, count)


def _head(table: ZeroTable, count: int) -> ZeroTable:
    if len(table) == count:
        return table
    return ZeroTable(table.family, table.nu, table.zeros[:count])


def first_zero(family, nu, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    return zeros(family, nu, 1, cfg)[1]


# ---------------------------------------------------------------------------
# Purely imaginary first Dini zero for nu in (-2, -1)


def _imag_function(c, nu, cfg):
    k1 = 1.0 / (2 * (nu + 1))
    k2 = 1.0 / (4 * (nu + 1) * (nu + 2))

    def f(a):
        u = -((a / 2) ** 2)
        return c * reduced_series(nu, u, cfg) + a * a * k1 * reduced_series(nu + 1, u, cfg)

    def df(a):
        u = -((a / 2) ** 2)
        return (a * (c + 2) * k1 * reduced_series(nu + 1, u, cfg)
                + a**3 * k2 * reduced_series(nu + 2, u, cfg))

    return f, df


def _imag_zero(which, c, nu, cfg):
    nu = as_nu(nu)
    if not -2.0 < nu < -1.0:
        raise DomainError(f"imaginary Dini zeros exist only for nu in (-2, -1), got nu={nu}")
    f, df = _imag_function(c, nu, cfg)
    stop = 2 * math.pi + abs(nu) + 10
    grid = np.arange(0.0, stop + SCAN_STEP / 2, SCAN_STEP)
    vals = [f(x) for x in grid]
    changes = [i for i in range(len(grid) - 1) if (vals[i] < 0) != (vals[i + 1] < 0)]
    if len(changes) != 1:
        raise BracketScanExhausted(
            f"expected exactly one sign change for the imaginary {which} zero at nu={nu}, "
            f"found {len(changes)}"
        )
    i = changes[0]
    x, lo, hi = refine_root(f, df, float(grid[i]), float(grid[i + 1]), vals[i])
    if c == 1.0:
        res = bessel_i(nu, x, cfg) + x * bessel_i(nu + 1, x, cfg)
    else:
        res = 2 * bessel_i(nu, x, cfg) + x * bessel_i(nu + 1, x, cfg)
    return ImagZero(which, nu, x, abs(res), (lo, hi))


def imag_alpha(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> ImagZero:
    """a > 0 with alpha_{nu,1} = ia, i.e. I_nu(a) + a I_{nu+1}(a) = 0."""
    return _imag_zero("alpha", 1.0, nu, cfg)


def imag_beta(nu, cfg: EvalConfig = DEFAULT_CONFIG) -> ImagZero:
    """b > 0 with beta_{nu,1} = ib, i.e. 2 I_nu(b) + b I_{nu+1}(b) = 0."""
    return _imag_zero("beta", 2.0, nu, cfg)


# ---------------------------------------------------------------------------
# Mittag-Leffler sums  sum 1/alpha_n^2 = 3/(4(nu+1)),  sum 1/beta_n^2 = 1/(2(nu+1))

_ML_TARGET = {
    ZeroFamily.DINI_ALPHA: lambda nu: 3.0 / (4.0 * (nu + 1)),
    ZeroFamily.DINI_BETA: lambda nu: 1.0 / (2.0 * (nu + 1)),
}


def mcmahon_offset(family, nu) -> float:
    """delta with zero_n ~ (n + delta) pi for large n."""
    family = ZeroFamily(family)
    if family is ZeroFamily.J:
        return nu / 2 - 0.25
    return nu / 2 - 0.75


def _trigamma(x: float) -> float:
    return float(mpmath.psi(1, x))


def _ml_check(family, nu, n_terms):
    family = ZeroFamily(family)
    if family not in _ML_TARGET:
        raise DomainError(f"no Mittag-Leffler identity for family {family.value}")
    nu = as_nu(nu)
    if not nu > -1:
        raise DomainError(f"Mittag-Leffler sums need all zeros real: nu > -1, got nu={nu}")
    if int(n_terms) != n_terms or not 1 <= n_terms <= MAX_COUNT:
        raise DomainError(f"n_terms must be an integer in [1, {MAX_COUNT}], got {n_terms}")
    return family, nu, int(n_terms)


def ml_partial_sums(family, nu, n_terms, cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    family, nu, n_terms = _ml_check(family, nu, n_terms)
    vals = zeros(family, nu, n_terms, cfg).values
    return np.cumsum(1.0 / vals**2)


def ml_sum(family, nu, n_terms, cfg: EvalConfig = DEFAULT_CONFIG):
    family, nu, n_terms = _ml_check(family, nu, n_terms)
    partial = float(ml_partial_sums(family, nu, n_terms, cfg)[-1])
    return partial, _ML_TARGET[family](nu)


def ml_sum_alpha(nu, n_terms, cfg: EvalConfig = DEFAULT_CONFIG):
    return ml_sum(ZeroFamily.DINI_ALPHA, nu, n_terms, cfg)


def ml_sum_beta(nu, n_terms, cfg: EvalConfig = DEFAULT_CONFIG):
    return ml_sum(ZeroFamily.DINI_BETA, nu, n_terms, cfg)


def ml_tail_estimate(family, nu, n_terms, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Upper estimate of sum_{n>N} 1/zero_n^2 from McMahon spacing.

    Zeros beyond N are taken as (n + delta) pi with delta the smaller of the
    asymptotic offset and the offset observed at the N-th zero, since the
    observed offset approaches its limit monotonically.
    """
    family, nu, n_terms = _ml_check(family, nu, n_terms)
    last = zeros(family, nu, n_terms, cfg)[n_terms]
    delta = min(mcmahon_offset(family, nu), last / math.pi - n_terms)
    return _trigamma(n_terms + 1 + delta) / math.pi**2


def ml_extrapolate(family, nu, n_terms, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Richardson limit of the McMahon-corrected partial sums at N/8, N/4, N/2, N.

    The corrected sums S_N + trigamma(N+1+delta)/pi^2 have error
    a2/N^2 + a3/N^3 + ...; three Richardson levels remove those terms.
    """
    family, nu, n_terms = _ml_check(family, nu, n_terms)
    if n_terms % 8:
        raise DomainError(f"Richardson extrapolation needs n_terms divisible by 8, got {n_terms}")
    sums = ml_partial_sums(family, nu, n_terms, cfg)
    delta = mcmahon_offset(family, nu)
    levels = [n_terms // 8, n_terms // 4, n_terms // 2, n_terms]
    col = [sums[n - 1] + _trigamma(n + 1 + delta) / math.pi**2 for n in levels]
    for power in (2, 3, 4):
        f = 2.0**power
        col = [(f * col[i + 1] - col[i]) / (f - 1) for i in range(len(col) - 1)]
    return float(col[0])
