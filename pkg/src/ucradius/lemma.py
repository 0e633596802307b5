"""Numeric sides of two elementary modulus inequalities on |z| <= r.

Part i   (a > b > r, lambda in [0, 1]):
    |z/(b-z) - lambda z/(a-z)|  <=  r/(b-r) - lambda r/(a-r)
Part ii  (b > a > r):
    |1/((a+z)(b-z))|  <=  1/((a-r)(b+r))

Both sides of part i are evaluated in the combined form
z((a - lambda b) - (1 - lambda) z)/((b - z)(a - z)), which avoids the
cancellation between the two fractions when a and b are close.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolation

DEFAULT_SEED = 20240917
NEAR_SINGULAR = 1e-6


@dataclass(frozen=True)
class LemmaCase:
    a: float
    b: float
    r: float
    lam: float = 0.0
    theta: float = 0.0

    @property
    def z(self) -> complex:
        return complex(self.r * math.cos(self.theta), self.r * math.sin(self.theta))


def _check_i(c: LemmaCase):
    if not (c.a > c.b > c.r > 0):
        raise InvariantViolation(f"part i needs a > b > r > 0, got a={c.a}, b={c.b}, r={c.r}")
    if not 0.0 <= c.lam <= 1.0:
        raise InvariantViolation(f"part i needs lambda in [0, 1], got {c.lam}")


def _check_ii(c: LemmaCase):
    if not (c.b > c.a > c.r > 0):
        raise InvariantViolation(f"part ii needs b > a > r > 0, got a={c.a}, b={c.b}, r={c.r}")


def _part_i(a, b, lam, z):
    return z * ((a - lam * b) - (1 - lam) * z) / ((b - z) * (a - z))


def lemma_i_sides(case: LemmaCase) -> tuple:
    _check_i(case)
    lhs = abs(_part_i(case.a, case.b, case.lam, case.z))
    rhs = _part_i(case.a, case.b, case.lam, case.r)
    return float(lhs), float(rhs)


def lemma_ii_sides(case: LemmaCase) -> tuple:
    _check_ii(case)
    z = case.z
    lhs = 1.0 / abs((case.a + z) * (case.b - z))
    rhs = 1.0 / ((case.a - case.r) * (case.b + case.r))
    return float(lhs), float(rhs)


def lemma_i_gap(case: LemmaCase, lam: float) -> float:
    """rhs^2 - lhs^2 as a function of lambda at fixed (a, b, r, theta)."""
    lhs, rhs = lemma_i_sides(LemmaCase(case.a, case.b, case.r, lam, case.theta))
    return rhs * rhs - lhs * lhs


def random_cases(part: str, n: int, seed: int = DEFAULT_SEED, r_max: float = 5.0,
                 span: float = 10.0) -> list:
    """Sample n admissible cases; near-singular draws (gap to r < 1e-6) are redrawn.

    Part i: r in (0, r_max], a in (r, r + span], b in (r, a).
    Part ii: the same with the roles of a and b exchanged.
    """
    if part not in ("i", "ii"):
        raise ValueError(f"part must be 'i' or 'ii', got {part!r}")
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        r = r_max * (1.0 - rng.random())
        big = r + span * (1.0 - rng.random())
        small = r + (big - r) * rng.random()
        lam = rng.random()
        theta = 2 * math.pi * rng.random()
        if small - r < NEAR_SINGULAR or not (big > small > r):
            continue
        if part == "i":
            out.append(LemmaCase(big, small, r, lam, theta))
        else:
            out.append(LemmaCase(small, big, r, lam, theta))
    return out
