import cmath
import math

import numpy as np
import pytest
import hypothesis.strategies as st
from hypothesis import given
from scipy import special

import specfun.kummer as kummer_module
from numerics.errors import DomainError, ParameterError
from numerics.series import TAIL_EXACT, PowerSeries, series_eval, series_eval_many
from specfun.bessel import bessel_j_eval
from specfun.identifiers import NORMALIZED, RAW, SpecialFunctionId
from specfun.kummer import (
    kummer_contiguous_check,
    kummer_eval,
    kummer_lambda_series,
    kummer_quadrature_oracle,
    kummer_residual,
    kummer_series,
    kummer_upsilon_series,
)
from specfun.lommel import lommel_alexander_series, lommel_m_n, lommel_residual, lommel_series
from specfun.residuals import polar_grid
from specfun.struve import (
    modified_struve_L_eval,
    struve_chi_series,
    struve_H_eval,
    struve_normalized_from_H,
    struve_normalized_series,
    struve_recursion_check,
    struve_u_residual,
    struve_u_series,
)

unit = st.floats(min_value=0.0, max_value=1.0)
angles = st.floats(min_value=0.0, max_value=2 * math.pi)


def disk_point(radius, t, theta):
    return cmath.rect(radius * math.sqrt(t), theta)


# kummer

@given(a=st.sampled_from([1, 2, 3.5, 2 + 1j, -0.5 + 3j]), t=unit, theta=angles)
def test_kummer_equal_parameters_is_exponential(a, t, theta):
    z = disk_point(0.999, t, theta)
    assert abs(kummer_eval(a, a, z) - cmath.exp(z)) <= 1e-12


@given(a=st.floats(min_value=-5.0, max_value=5.0), c=st.floats(min_value=0.5, max_value=8.0),
       x=st.floats(min_value=-0.99, max_value=0.99))
def test_kummer_matches_scipy(a, c, x):
    expected = float(special.hyp1f1(a, c, x))
    z = x
    assert abs(kummer_eval(a, c, z) - expected) <= 1e-9 * max(1.0, abs(expected))


@given(a=st.floats(min_value=0.2, max_value=6.0), gap=st.floats(min_value=0.2, max_value=6.0),
       t=unit, theta=angles)
def test_kummer_matches_euler_integral(a, gap, t, theta):
    c = a + gap
    z = disk_point(0.99, t, theta)
    expected = kummer_quadrature_oracle(a, c, z)
    assert abs(kummer_eval(a, c, z) - expected) <= 1e-10 * max(1.0, abs(expected))


def test_quadrature_oracle_domain():
    with pytest.raises(DomainError):
        kummer_quadrature_oracle(-1, 3, 0.5)
    with pytest.raises(DomainError):
        kummer_quadrature_oracle(2, 2, 0.5)


def test_kummer_terminates_for_nonpositive_integer_a():
    s = kummer_series(-3, 5)
    assert s.tail_kind == TAIL_EXACT
    assert s.degree == 3
    np.testing.assert_allclose(s.coeffs.real, [1, -3 / 5, 6 / 60, -6 / 1260])


@pytest.mark.parametrize('n', range(0, 101))
def test_kummer_polynomial_is_exact(n):
    s = kummer_series(-n, n + 2)
    assert len(s) == n + 1
    assert s.tail_kind == TAIL_EXACT and s.tail_bound == 0.0
    assert kummer_residual(-n, n + 2, 0.999).max_abs_residual <= 1e-10
    if n:
        assert len(kummer_lambda_series(-n, n + 2)) == n + 1


@pytest.mark.parametrize('c', [0, -2, -10.0])
def test_kummer_excludes_nonpositive_integer_c(c):
    with pytest.raises(ParameterError) as info:
        kummer_series(1, c)
    assert 'c not in' in info.value.exclusion


def test_kummer_rejects_non_finite():
    with pytest.raises(DomainError):
        kummer_series(float('nan'), 2)


def test_lambda_and_upsilon():
    lam = kummer_lambda_series(1, 2)
    assert lam[0] == 0 and lam[1] == 1
    for z in (0.3, -0.8j, 0.5 + 0.5j):
        assert abs(series_eval(lam, z) - 2 * (cmath.exp(z) - 1 - z) / z) < 1e-13
    upsilon = kummer_upsilon_series(2, 3)
    phi = kummer_series(2, 3)
    assert upsilon[0] == 0 and upsilon[1] == 1
    np.testing.assert_array_equal(upsilon.coeffs[1:], phi.coeffs)
    with pytest.raises(ParameterError):
        kummer_lambda_series(0, 2)


@pytest.mark.parametrize('a, c', [(-1, 3), (2, 0.5), (-4.5 + 1j, 3 - 2j), (5, 8)])
def test_kummer_ode_residual(a, c):
    report = kummer_residual(a, c, 0.99)
    assert report.max_abs_residual <= 1e-9
    assert report.sample_count == 32 * 32


def test_sign_flip_is_caught_by_residual(monkeypatch):
    original = kummer_module.kummer_series

    def flipped(a, c, *args, **kwargs):
        s = original(a, c, *args, **kwargs)
        coeffs = s.padded(len(s))
        coeffs[2] = -coeffs[2]
        return PowerSeries(coeffs, s.tail_bound, s.r_ref, s.tail_kind)

    monkeypatch.setattr(kummer_module, 'kummer_series', flipped)
    assert kummer_residual(2, 3, 0.99).max_abs_residual > 1e-3


@given(re_a=st.floats(min_value=-8.0, max_value=8.0), im_a=st.floats(min_value=-3.0, max_value=3.0),
       re_c=st.floats(min_value=1.0, max_value=8.0), t=unit, theta=angles)
def test_kummer_contiguous_relation(re_a, im_a, re_c, t, theta):
    assert kummer_contiguous_check(complex(re_a, im_a), re_c, disk_point(0.9, t, theta)) <= 1e-11


# lommel

@given(t=unit, theta=angles)
def test_lommel_one_zero_is_bessel(t, theta):
    z = disk_point(0.99, t, theta)
    expected = 4 - 4 * complex(special.jv(0, cmath.sqrt(z)))
    assert abs(series_eval(lommel_series(1, 0), z) - expected) <= 1e-10


@pytest.mark.parametrize('mu, nu', [(1, 0), (8, 3), (5, 4), (0.5, 0.25), (2 + 1j, 1)])
def test_lommel_ode_residual(mu, nu):
    assert lommel_residual(mu, nu, 0.99).max_abs_residual <= 1e-9


@pytest.mark.parametrize('mu, nu', [(0, 3), (-1, 2), (1, -4)])
def test_lommel_exclusion(mu, nu):
    with pytest.raises(ParameterError) as info:
        lommel_series(mu, nu)
    assert 'negative odd' in info.value.exclusion


def test_lommel_constants_and_alexander_transform():
    assert lommel_m_n(8, 3) == (160.0, 112.0)
    h = lommel_series(5, 4)
    f = lommel_alexander_series(5, 4)
    assert f[1] == 1
    k = np.arange(1, len(h))
    np.testing.assert_allclose(f.coeffs[1:] * k, h.coeffs[1:], rtol=1e-15)


# struve

@given(t=unit, theta=angles)
def test_struve_u_closed_form(t, theta):
    z = disk_point(0.99, t, theta)
    value = z * series_eval(struve_u_series(2, 1), z)
    assert abs(value - (2 - 2 * cmath.cos(cmath.sqrt(z)))) <= 1e-11


@pytest.mark.parametrize('nu', [0.5, 1.0, 2.0, 3.7])
@pytest.mark.parametrize('x', [0.1, 0.9, 2.5, 7.0])
def test_struve_h_and_l_match_scipy(nu, x):
    assert struve_H_eval(nu, x) == pytest.approx(special.struve(nu, x), rel=1e-10, abs=1e-14)
    if x < 5:
        assert modified_struve_L_eval(nu, x) == pytest.approx(special.modstruve(nu, x), rel=1e-10, abs=1e-14)


@pytest.mark.parametrize('nu', [0.5, 1.0, 2.0])
@pytest.mark.parametrize('z', [0, -0.5, complex(-2.0, -0.0)])
def test_struve_eval_refuses_the_cut(nu, z):
    with pytest.raises(DomainError):
        struve_H_eval(nu, z)
    with pytest.raises(DomainError):
        modified_struve_L_eval(nu, z)


@given(nu=st.sampled_from([0.5, 1.0, 2.0]), r=st.floats(min_value=0.05, max_value=2.0),
       theta=st.floats(min_value=-1.5, max_value=1.5))
def test_struve_l_from_h(nu, r, theta):
    z = cmath.rect(r, theta)
    rotated = -1j * cmath.exp(-0.5j * nu * math.pi) * struve_H_eval(nu, 1j * z)
    assert abs(modified_struve_L_eval(nu, z) - rotated) <= 1e-10


@pytest.mark.parametrize('nu', [0.5, 2.0, 14.5])
def test_normalized_struve_series_matches_h(nu):
    s = struve_normalized_series(nu, 1.0)
    for z in (0.2, 0.7, 0.95):
        assert series_eval(s, z) == pytest.approx(struve_normalized_from_H(nu, z), rel=1e-12)
    assert struve_normalized_from_H(nu, 0) == 1


@pytest.mark.parametrize('kappa, c', [(2, 1), (0.7, -3), (16, 1), (3 + 2j, 2 - 1j)])
def test_struve_residual_and_recursion(kappa, c):
    assert struve_u_residual(kappa, c, 0.99).max_abs_residual <= 1e-9
    for z in (0.5, -0.9j, 0.6 + 0.6j):
        assert struve_recursion_check(kappa, c, z) <= 1e-12


def test_struve_chi_and_exclusions():
    chi = struve_chi_series(16, 1)
    u = struve_u_series(16, 1)
    assert chi[1] == 1
    assert chi[3] == pytest.approx(-6 * 16 * u[3], rel=1e-14)
    with pytest.raises(ParameterError):
        struve_chi_series(16, 0)
    with pytest.raises(ParameterError):
        struve_u_series(-2, 1)


def test_struve_u_with_c_zero_is_constant():
    assert struve_u_series(3, 0).degree == 0


# bessel

@given(nu=st.sampled_from([0, 1, 2.5, 4]), r=st.floats(min_value=0.01, max_value=10.0),
       theta=st.floats(min_value=-1.5, max_value=1.5))
def test_bessel_matches_scipy(nu, r, theta):
    z = cmath.rect(r, theta)
    expected = complex(special.jv(nu, z))
    assert abs(bessel_j_eval(nu, z) - expected) <= 1e-10 * max(1.0, abs(expected))


def test_bessel_exclusion():
    with pytest.raises(ParameterError):
        bessel_j_eval(-1, 0.5)


# identifiers and residual grid

def test_special_function_id():
    fid = SpecialFunctionId.create('kummer', a=-1, c=3)
    assert fid.kind == RAW
    assert fid.values == (-1, 3)
    assert fid.evaluate(0.5) == pytest.approx(1 - 0.5 / 3)
    assert fid.to_dict() == {'family': 'kummer', 'params': {'a': {'re': -1.0, 'im': 0.0},
                                                           'c': {'re': 3.0, 'im': 0.0}}}
    assert SpecialFunctionId.create('lommel', mu=1, nu=0).kind == NORMALIZED
    h = SpecialFunctionId.create('struve-h', nu=0.5)
    assert h.evaluate(2.0) == pytest.approx(special.struve(0.5, 2.0), rel=1e-12)
    assert h.build_series()[0] == 1


@pytest.mark.parametrize('family, params', [
    ('kummer', {'a': 1, 'c': 0}),
    ('kummer', {'a': 1}),
    ('kummer', {'a': 1, 'c': 2, 'mu': 3}),
    ('nope', {}),
    ('struve-chi', {'kappa': 2, 'c': 0}),
])
def test_special_function_id_rejects(family, params):
    with pytest.raises(ParameterError):
        SpecialFunctionId.create(family, **params)


def test_bessel_id_has_no_series():
    fid = SpecialFunctionId.create('bessel-j', nu=0)
    assert not fid.has_series
    with pytest.raises(ParameterError):
        fid.build_series()


def test_polar_grid():
    zs = polar_grid(0.5)
    assert zs.shape == (1024,)
    assert np.max(np.abs(zs)) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        polar_grid(0.0)
    with pytest.raises(DomainError):
        polar_grid(1.5)


def test_series_respects_reference_radius():
    s = kummer_series(2, 3, r_ref=0.5)
    assert s.r_ref == 0.5
    np.testing.assert_allclose(series_eval_many(s, [0.5j]), [kummer_eval(2, 3, 0.5j)], rtol=1e-14)
