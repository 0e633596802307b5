import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import F_GRID, MOD_GH_GRID, REAL_GH_GRID
from ucradius.errors import DomainError
from ucradius.radius import (
    Branch,
    FunctionKind,
    RadiusKind,
    domain_hi,
    profile,
    profile_c_f,
    profile_f,
    profile_f_printed,
    profile_g,
    profile_g_series_form,
    profile_h,
    profile_phi,
    profile_theta,
    radius_c_f,
    radius_uc,
    radius_uc_f,
    radius_uc_g,
    radius_uc_h,
)
from ucradius.thresholds import threshold_nu1, threshold_nu2, threshold_nu3
from ucradius.oracle import certify_radius
from ucradius.zero_finder import ml_tail_estimate, zeros

CASES = (
    [("f", nu) for nu in F_GRID]
    + [("g", nu) for nu in REAL_GH_GRID + MOD_GH_GRID]
    + [("h", nu) for nu in REAL_GH_GRID + MOD_GH_GRID]
)

MP_PROFILES = {
    ("f", False): oracles.profile_psi,
    ("g", False): oracles.profile_g,
    ("g", True): oracles.profile_theta,
    ("h", False): oracles.profile_h,
    ("h", True): oracles.profile_phi,
}


def _mp_radius(kind, nu):
    fn = MP_PROFILES[(kind, nu < -1)]
    x0 = radius_uc(kind, nu).radius
    return float(mpmath.findroot(lambda r: fn(nu, r), mpmath.mpf(x0) * (1 + 1e-4)))


@pytest.mark.parametrize("kind, nu", CASES)
def test_radius_matches_mpmath_profile_root(kind, nu):
    rep = radius_uc(kind, nu)
    assert rep.radius == pytest.approx(_mp_radius(kind, nu), abs=1e-10)


# frozen values from the mpmath profile roots above
FROZEN = {
    ("f", 0.5): 0.46744487, ("f", 1.0): 0.75727075, ("f", 1.5): 1.03103622, ("f", 2.5): 1.56291189,
    ("g", -0.5): 0.37155605, ("g", 0.0): 0.53034650, ("g", 0.5): 0.65327119, ("g", 1.5): 0.84903464,
    ("g", -1.8): 0.40325202, ("g", -1.5): 0.34930494, ("g", -1.4): 0.31671914, ("g", -1.2): 0.22815972,
    ("h", -0.5): 0.35968977, ("h", 0.0): 0.75154479, ("h", 0.5): 1.15965758, ("h", 1.5): 2.00000000,
    ("h", -1.8): 0.34216220, ("h", -1.5): 0.28211748, ("h", -1.4): 0.23678628, ("h", -1.2): 0.12696682,
}


@pytest.mark.parametrize("kind, nu", CASES)
def test_radius_frozen_values(kind, nu):
    assert radius_uc(kind, nu).radius == pytest.approx(FROZEN[(kind, nu)], abs=1e-8)


@pytest.mark.parametrize("kind, nu", CASES)
def test_report_invariants(kind, nu):
    rep = radius_uc(kind, nu)
    assert 0 < rep.radius < rep.domain_hi
    assert rep.residual <= 1e-10
    assert abs(profile(kind, nu, rep.radius)) == pytest.approx(rep.residual, abs=1e-15)
    assert rep.branch is (Branch.MODIFIED_BESSEL if nu < -1 else Branch.REAL_ZEROS)
    assert rep.radius_kind is RadiusKind.UNIFORM_CONVEXITY
    lo, hi = rep.bracket
    assert lo <= rep.radius <= hi and hi - lo <= 1e-12 * rep.domain_hi * 1.01


@pytest.mark.parametrize("kind, nu", CASES)
def test_profile_strictly_decreasing_with_single_sign_change(kind, nu):
    hi = domain_hi(kind, nu)
    r = np.linspace(1e-4 * hi, 0.999 * hi, 50)
    v = np.array([profile(kind, nu, x) for x in r])
    assert np.all(np.diff(v) < 0)
    assert np.count_nonzero(np.diff(np.sign(v)) != 0) == 1


@pytest.mark.parametrize("kind, nu", CASES)
def test_profile_endpoints(kind, nu):
    hi = domain_hi(kind, nu)
    # h is linear at the origin, so go closer than 1e-4 * hi
    assert profile(kind, nu, 1e-4 * hi) == pytest.approx(1.0, abs=1e-3)
    assert profile(kind, nu, 1e-8 * hi) == pytest.approx(1.0, abs=1e-6)
    assert profile(kind, nu, 0.999 * hi) < -1


@pytest.mark.parametrize("kind, nu", CASES)
def test_profile_matches_mpmath(kind, nu):
    hi = domain_hi(kind, nu)
    fn = MP_PROFILES[(kind, nu < -1)]
    for x in np.linspace(0.05, 0.95, 7) * hi:
        ref = float(fn(nu, x))
        assert profile(kind, nu, x) == pytest.approx(ref, abs=1e-12 * max(1.0, abs(ref)))


@pytest.mark.parametrize("kind, nu", [("f", 0.5), ("g", 0.0), ("h", -1.5)])
def test_profile_domain_enforced(kind, nu):
    hi = domain_hi(kind, nu)
    for r in (0.0, -0.1, hi, 1.5 * hi):
        with pytest.raises(DomainError):
            profile(kind, nu, r)


def test_order_validation():
    with pytest.raises(DomainError):
        radius_uc_f(0.0)
    with pytest.raises(DomainError):
        radius_uc_f(-0.5)
    for nu in (-1.0, -2.0, -2.5):
        with pytest.raises(DomainError):
            radius_uc_g(nu)
        with pytest.raises(DomainError):
            radius_uc_h(nu)
    with pytest.raises(DomainError):
        radius_uc_g(0.5, tol=1e-3)


# -- alternative closed forms ------------------------------------------------------


@given(nu=st.floats(0.05, 5.0), t=st.floats(0.01, 0.99))
def test_alternative_f_form_is_the_negated_profile(nu, t):
    r = t * domain_hi("f", nu)
    assert profile_f_printed(nu, r) == pytest.approx(-profile_f(nu, r), abs=1e-9 * max(1.0, abs(profile_f(nu, r))))


@given(nu=st.floats(-0.95, 5.0), t=st.floats(0.01, 0.99))
def test_g_forms_agree(nu, t):
    r = t * domain_hi("g", nu)
    a, b = profile_g(nu, r), profile_g_series_form(nu, r)
    assert a == pytest.approx(b, abs=1e-9 * max(1.0, abs(a)))


def test_series_form_rejects_modified_branch():
    with pytest.raises(DomainError):
        profile_g_series_form(-1.5, 0.1)


def test_modified_names_require_modified_range():
    assert profile_theta(-1.5, 0.2) == profile_g(-1.5, 0.2)
    assert profile_phi(-1.5, 0.2) == profile_h(-1.5, 0.2)
    with pytest.raises(DomainError):
        profile_theta(0.5, 0.2)
    with pytest.raises(DomainError):
        profile_phi(0.5, 0.2)


# -- zero-sum cross-checks ---------------------------------------------------------


@pytest.mark.parametrize("nu", REAL_GH_GRID)
def test_g_profile_against_zero_sum(nu):
    a = zeros("alpha", nu, 64).values
    for r in (0.2, 0.5, 0.8):
        r = r * a[0]
        tail = 4 * r * r * ml_tail_estimate("alpha", nu, 64)
        s = 1 - np.sum(4 * r * r / (a**2 - r * r))
        assert profile_g(nu, r) == pytest.approx(s - tail, abs=0.05 * tail)


@pytest.mark.parametrize("nu", REAL_GH_GRID)
def test_h_profile_against_zero_sum(nu):
    b2 = zeros("beta", nu, 64).values ** 2
    for r in (0.2, 0.5, 0.8):
        r = r * b2[0]
        tail = 2 * r * ml_tail_estimate("beta", nu, 64)
        s = 1 - np.sum(2 * r / (b2 - r))
        assert profile_h(nu, r) == pytest.approx(s - tail, abs=0.05 * tail)


# -- threshold duality and plot windows -------------------------------------------


def test_f_radius_is_one_at_first_threshold():
    nu1 = threshold_nu1().value
    assert radius_uc_f(nu1).radius == pytest.approx(1.0, abs=1e-4)
    assert profile_f(nu1, 1.0) == pytest.approx(0.0, abs=1e-6)


def test_g_radius_is_one_at_second_threshold():
    nu2 = threshold_nu2().value
    assert radius_uc_g(nu2).radius == pytest.approx(1.0, abs=1e-4)
    assert profile_g(nu2, 1.0) == pytest.approx(0.0, abs=1e-6)


def test_h_radius_is_one_at_third_threshold():
    nu3 = threshold_nu3().value
    assert radius_uc_h(nu3).radius == pytest.approx(1.0, abs=1e-4)
    assert profile_h(nu3, 1.0) == pytest.approx(0.0, abs=1e-6)


def test_f_half_order_radius_below_one():
    assert 0 < radius_uc_f(0.5).radius < 1


def test_f_radius_exceeds_one_above_first_threshold():
    # nu = 2.5 lies above the f threshold, so the profile stays positive on (0, 1]
    r = np.linspace(1e-3, 1.0, 200)
    assert all(profile_f(2.5, x) > 0 for x in r)
    assert radius_uc_f(2.5).radius > 1


def test_f_radius_certified_for_larger_order():
    assert certify_radius("f", 2.5, radius_uc_f(2.5).radius).verdict.value == "PASS"


def test_g_plot_windows():
    assert 0 < radius_uc_g(-1.5).radius <= 0.5
    assert 0 < radius_uc_g(0.0).radius <= 0.86
    for nu in REAL_GH_GRID:
        assert profile_g(nu, 1e-3) > 0 > profile_g(nu, 0.86)


def test_h_plot_windows():
    for nu in (-0.5, 0.0):
        assert 0 < radius_uc_h(nu).radius <= 1
    assert 0 < radius_uc_h(-1.2).radius <= 0.35
    # orders above the h threshold have radius beyond the unit interval
    for nu in (0.5, 1.5):
        assert radius_uc_h(nu).radius > 1


# -- convexity radius of f -----------------------------------------------------------


@pytest.mark.parametrize("nu", F_GRID)
def test_convexity_radius_ordering(nu):
    rc = radius_c_f(nu)
    ruc = radius_uc_f(nu)
    jp1 = zeros("jprime", nu, 1)[1]
    j1 = zeros("j", nu, 1)[1]
    assert ruc.radius < rc.radius < jp1 < j1
    assert rc.radius_kind is RadiusKind.CONVEXITY
    assert abs(profile_c_f(nu, rc.radius)) <= 1e-10


def test_convexity_radius_at_order_one_is_one():
    # for nu = 1 the convexity profile is 1 + r J_1''/J_1'
    ref = float(mpmath.findroot(lambda r: 1 + r * mpmath.besselj(1, r, 2) / mpmath.besselj(1, r, 1), 1.0))
    assert radius_c_f(1.0).radius == pytest.approx(ref, abs=1e-10)


def test_convexity_only_for_f():
    from ucradius.bessel import DEFAULT_CONFIG
    from ucradius.radius import _solve

    with pytest.raises(DomainError):
        _solve(FunctionKind.G, 0.5, DEFAULT_CONFIG, RadiusKind.CONVEXITY)
