import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import NU_GRID
from ucradius.bessel import (
    ComplexPoint,
    EvalConfig,
    Order,
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
    reduced_series,
)
from ucradius.errors import DomainError, NoConvergence, PoleError

X_GRID = np.linspace(0.01, 10.0, 200)


# -- gamma ---------------------------------------------------------------


@pytest.mark.parametrize("x, expected", [(1.0, 1.0), (0.5, math.sqrt(math.pi)), (4.0, 6.0)])
def test_gamma_exact_values(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("x", np.concatenate([np.linspace(-1.99, 12, 701), [1e-9, -1e-9, -0.999999, -1.000001]]))
def test_gamma_relative_error(x):
    if x in (0.0, -1.0):
        return
    assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)


@pytest.mark.parametrize("x", [0.0, -1.0])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma(x)


@pytest.mark.parametrize("x", [-2.0, -2.5, -7.0])
def test_gamma_outside_domain(x):
    with pytest.raises(DomainError):
        gamma(x)


# -- reduced series ---------------------------------------------------------


def test_reduced_at_origin_is_one():
    v = reduced_j(0.0, 0.0)
    assert v.value == 1.0
    assert v.tail_bound <= 1e-16


def test_reduced_half_order_closed_form():
    assert reduced_j(0.5, 2.0).value.real == pytest.approx(math.sin(2) / 2, abs=1e-15)


def test_reduced_minus_three_halves_closed_form():
    # RJ_{-3/2}(z) = cos z + z sin z
    assert reduced_j(-1.5, 1.0).value.real == pytest.approx(math.cos(1) + math.sin(1), abs=1e-15)


def test_reduced_accepts_typed_inputs():
    a = reduced_j(Order(0.5), ComplexPoint(1.0, 0.5)).value
    b = reduced_j(0.5, 1.0 + 0.5j).value
    assert a == b


@given(
    nu=st.floats(-1.95, 4.0).filter(lambda v: abs(v + 1) > 1e-3),
    re=st.floats(-12, 12),
    im=st.floats(-12, 12),
)
def test_reduced_matches_hypergeometric_oracle(nu, re, im):
    z = complex(re, im)
    got = reduced_j(nu, z)
    ref = oracles.reduced(nu, z)
    assert abs(got.value - ref) <= 1e-13 * max(1.0, abs(ref)) + got.tail_bound


@given(
    nu=st.floats(-1.95, 4.0).filter(lambda v: abs(v + 1) > 1e-3),
    re=st.floats(-20, 20),
    im=st.floats(-20, 20),
)
def test_reduced_conjugation_symmetry(nu, re, im):
    z = complex(re, im)
    assert reduced_j(nu, z.conjugate()).value == reduced_j(nu, z).value.conjugate()


@given(nu=st.floats(-1.9, 3.0).filter(lambda v: abs(v + 1) > 1e-3), x=st.floats(0.0, 30.0))
def test_tail_bound_is_honest(nu, x):
    small = reduced_j(nu, x, EvalConfig(max_terms=400))
    big = reduced_j(nu, x, EvalConfig(max_terms=800))
    assert small.tail_bound <= 1e-16 + 1e-16 * abs(small.value)
    assert abs(small.value - big.value) <= small.tail_bound + small.round_bound + 1e-300


def test_no_convergence_when_terms_run_out():
    with pytest.raises(NoConvergence):
        reduced_series(0.0, 900.0, EvalConfig(max_terms=16))


def test_config_validation():
    with pytest.raises(DomainError):
        EvalConfig(max_terms=8)
    with pytest.raises(DomainError):
        EvalConfig(abs_tol=1e-3)
    with pytest.raises(DomainError):
        EvalConfig(rel_tol=0.0)


def test_reduced_i_is_reduced_j_on_imaginary_axis():
    for nu in (-1.5, 0.0, 2.5):
        assert float(reduced_i(nu, 3.0)) == pytest.approx(reduced_j(nu, 3.0j).value.real, rel=1e-15)


def test_array_evaluation_matches_scalar():
    u = np.linspace(-30, 400, 57)
    arr = reduced_series(0.7, u)
    assert np.array_equal(arr, np.array([reduced_series(0.7, float(v)) for v in u]))


# -- J, J', J'' ---------------------------------------------------------------


def test_bessel_j_half_order_value():
    assert bessel_j(0.5, 2.0) == pytest.approx(math.sqrt(2 / (2 * math.pi)) * math.sin(2), abs=1e-15)


def test_bessel_j_at_first_zero_of_j0():
    assert abs(bessel_j(0.0, 2.40482556)) < 1e-7


def test_bessel_j1_at_one():
    assert bessel_j(1.0, 1.0) == pytest.approx(0.4400505857449335, abs=1e-15)


@pytest.mark.parametrize("nu", NU_GRID)
def test_bessel_j_against_mpmath(nu):
    for x in X_GRID[::7]:
        ref = oracles.j(nu, x)
        assert bessel_j(nu, x) == pytest.approx(ref, abs=1e-14 * max(1.0, abs(ref)))


@given(nu=st.floats(-1.95, 5.0).filter(lambda v: abs(v + 1) > 1e-3), x=st.floats(1e-3, 60.0))
def test_bessel_j_large_arguments(nu, x):
    ref = oracles.j(nu, x)
    # envelope of J: prefactor near the origin, sqrt(2/(pi x)) further out
    envelope = abs(x / 2) ** nu / abs(math.gamma(nu + 1)) if x < 1 else math.sqrt(2 / (math.pi * x))
    assert bessel_j(nu, x) == pytest.approx(ref, abs=1e-13 * max(envelope, abs(ref)))


def test_bessel_j_prime_limit_at_origin():
    assert bessel_j_prime(1.0, 1e-12) == pytest.approx(0.5, rel=1e-12)


def test_bessel_j0_prime_is_minus_j1():
    assert bessel_j_prime(0.0, 1.3) + bessel_j(1.0, 1.3) == pytest.approx(0.0, abs=1e-15)


def test_bessel_j_prime_vanishes_near_critical_order():
    assert abs(bessel_j_prime(0.39001, 1.0)) < 1e-5


@pytest.mark.parametrize("nu", NU_GRID)
def test_bessel_j_prime_against_termwise_derivative(nu):
    for x in X_GRID[::9]:
        ref = oracles.jp(nu, x)
        assert bessel_j_prime(nu, x) == pytest.approx(ref, abs=1e-12 * max(1.0, abs(ref)))


def test_bessel_j_second_limit_at_origin():
    assert bessel_j_second(0.0, 1e-12) == pytest.approx(-0.5, rel=1e-12)


def test_ode_residual_single_point():
    nu, x = 1.5, 2.0
    res = x * x * bessel_j_second(nu, x) + x * bessel_j_prime(nu, x) + (x * x - nu * nu) * bessel_j(nu, x)
    assert abs(res) < 1e-10


def test_second_derivative_by_finite_difference():
    h = 1e-5
    fd = (bessel_j_prime(0.5, 1.0 + h) - bessel_j_prime(0.5, 1.0 - h)) / (2 * h)
    assert bessel_j_second(0.5, 1.0) == pytest.approx(fd, abs=1e-6)


@pytest.mark.parametrize("nu", NU_GRID)
def test_second_derivative_against_mpmath(nu):
    for x in X_GRID[::11]:
        ref = oracles.jpp(nu, x)
        assert bessel_j_second(nu, x) == pytest.approx(ref, abs=1e-11 * max(1.0, abs(ref)))


@pytest.mark.parametrize("nu", NU_GRID)
def test_ode_residual_on_grid(nu):
    for x in X_GRID:
        J = bessel_j(nu, x)
        res = x * x * bessel_j_second(nu, x) + x * bessel_j_prime(nu, x) + (x * x - nu * nu) * J
        assert abs(res) < 1e-10 * max(1.0, abs(J))


@pytest.mark.parametrize("nu", NU_GRID)
def test_three_term_recurrence_on_grid(nu):
    for x in X_GRID:
        res = 2 * nu * bessel_j(nu, x) - x * (bessel_j_any(nu - 1, x) + bessel_j_any(nu + 1, x))
        assert abs(res) < 1e-11


def test_negative_integer_order_reflection():
    assert bessel_j_any(-1.0, 2.0) == -bessel_j(1.0, 2.0)
    assert bessel_j_any(-2.0, 2.0) == bessel_j(2.0, 2.0)


@pytest.mark.parametrize("x", X_GRID)
def test_half_integer_closed_forms(x):
    c = math.sqrt(2 / (math.pi * x))
    for got, ref in (
        (bessel_j(0.5, x), c * math.sin(x)),
        (bessel_j(-0.5, x), c * math.cos(x)),
        (bessel_i(0.5, x), c * math.sinh(x)),
    ):
        assert got == pytest.approx(ref, abs=1e-12 * max(1.0, abs(ref)))


# -- I and Dini combinations ---------------------------------------------------


def test_bessel_i_values():
    assert bessel_i(0.0, 0.0) == 1.0
    assert bessel_i(0.5, 1.0) == pytest.approx(math.sqrt(2 / math.pi) * math.sinh(1), abs=1e-15)
    assert bessel_i(-1.5, 0.1) < 0


@pytest.mark.parametrize("nu", [-1.8, -1.5, -1.2, 0.0, 0.5, 2.5])
def test_bessel_i_against_mpmath(nu):
    for x in (0.05, 0.5, 1.0, 4.0, 9.0):
        ref = oracles.i(nu, x)
        assert bessel_i(nu, x) == pytest.approx(ref, rel=1e-13)


def test_dini_values_near_origin():
    assert dini_alpha(0.0, 1e-9) == pytest.approx(1.0, abs=1e-12)
    assert dini_beta(0.0, 1e-9) == pytest.approx(2.0, abs=1e-12)


def test_dini_alpha_matches_derivative_form():
    nu, x = 0.5, 1.2
    direct = (1 - nu) * bessel_j(nu, x) + x * bessel_j_prime(nu, x)
    assert dini_alpha(nu, x) == pytest.approx(direct, abs=1e-12)


def test_dini_beta_matches_derivative_form():
    nu, x = 1.5, 2.0
    direct = (2 - nu) * bessel_j(nu, x) + x * bessel_j_prime(nu, x)
    assert dini_beta(nu, x) == pytest.approx(direct, abs=1e-12)


@given(nu=st.floats(-1.9, 4.0).filter(lambda v: abs(v + 1) > 1e-3), x=st.floats(0.01, 10.0))
def test_dini_identities_property(nu, x):
    j, jp = bessel_j(nu, x), bessel_j_prime(nu, x)
    scale = max(1.0, abs(j), abs(x * jp))
    assert dini_alpha(nu, x) == pytest.approx((1 - nu) * j + x * jp, abs=1e-12 * scale)
    assert dini_beta(nu, x) == pytest.approx((2 - nu) * j + x * jp, abs=1e-12 * scale)


# -- argument validation -----------------------------------------------------------


@pytest.mark.parametrize("fn", [bessel_j, bessel_j_prime, bessel_j_second, dini_alpha, dini_beta])
def test_positive_argument_required(fn):
    with pytest.raises(DomainError):
        fn(0.5, 0.0)
    with pytest.raises(DomainError):
        fn(0.5, -1.0)


@pytest.mark.parametrize("nu", [-1.0, -2.0, -2.5, math.inf])
def test_order_range_enforced(nu):
    with pytest.raises(DomainError):
        bessel_j(nu, 1.0)
    with pytest.raises(DomainError):
        reduced_j(nu, 1.0)


def test_modified_order_at_origin():
    with pytest.raises(DomainError):
        bessel_i(-0.5, 0.0)
    assert bessel_i(1.5, 0.0) == 0.0
