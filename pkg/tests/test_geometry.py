import cmath
import math

import numpy as np
import pytest
import hypothesis.strategies as st
from hypothesis import given

from geometry.certifier import (
    INCONCLUSIVE,
    KE,
    PE,
    REFUTED,
    SE_STAR,
    VERIFIED,
    SamplingPlan,
    boundary_curve,
    certify_subordination_to_exp,
    class_membership,
    class_quantity,
    image_curve,
    in_exp_disk,
)
from geometry.maps import (
    NORMALIZED,
    AnalyticMap,
    alexander,
    alexander_kernel,
    convex_quantity,
    hadamard,
    identity_kernel,
    libera,
    libera_kernel,
    starlike_quantity,
)
from numerics.errors import PreconditionError
from numerics.series import PowerSeries, series_eval
from specfun.kummer import kummer_series


def poly(*coeffs, kind=NORMALIZED):
    return AnalyticMap.polynomial(list(coeffs), kind)


# sampling plan

@pytest.mark.parametrize('kwargs', [
    {'radii': ()},
    {'radii': (0.5, 1.0)},
    {'radii': (0.9, 0.5)},
    {'radii': (0.5, 0.5)},
    {'angles': 100},
    {'angles': 512.5},
    {'refine_factor': 0},
])
def test_sampling_plan_validation(kwargs):
    with pytest.raises(PreconditionError):
        SamplingPlan(**kwargs)


def test_sampling_plan_defaults():
    plan = SamplingPlan()
    assert plan.radii == (0.9, 0.99, 0.999)
    assert plan.angles == 4096
    assert plan.with_angles(512).angles == 512
    assert plan.to_dict() == {'radii': [0.9, 0.99, 0.999], 'angles': 4096, 'refine_factor': 8}


# exp disk membership

def test_in_exp_disk():
    assert in_exp_disk(1) == (True, 0.0)
    inside, value = in_exp_disk(math.e)
    assert not inside and value == pytest.approx(1.0)
    assert in_exp_disk(0) == (False, math.inf)
    assert in_exp_disk(cmath.exp(0.5j))[0]


@given(rho=st.floats(min_value=0.0, max_value=0.999), phi=st.floats(min_value=-math.pi, max_value=math.pi))
def test_exp_of_unit_disk_is_inside(rho, phi):
    inside, value = in_exp_disk(cmath.exp(cmath.rect(rho, phi)))
    assert inside
    assert value == pytest.approx(rho, abs=1e-12)


@given(rho=st.floats(min_value=1.001, max_value=1.57), phi=st.floats(min_value=-math.pi, max_value=math.pi))
def test_exp_outside_unit_disk_is_outside(rho, phi):
    inside, _ = in_exp_disk(cmath.exp(cmath.rect(rho, phi)))
    assert not inside


# certificates

def test_constant_one_is_verified(fast_plan):
    cert = certify_subordination_to_exp(PowerSeries([1.0]), fast_plan)
    assert cert.status == VERIFIED
    assert cert.max_log_mod == 0.0
    assert cert.margin == 1.0
    assert len(cert.circle_max) == 3


def test_one_plus_two_z_is_refuted(fast_plan):
    cert = certify_subordination_to_exp(poly(1, 2, kind='raw'), fast_plan)
    assert cert.status == REFUTED
    # |Log(1 + 2z)| at z = 0.999 is log(2.998)
    assert cert.max_log_mod >= math.log(2.998) - 1e-9
    assert abs(cert.witness) == pytest.approx(0.999)


def test_p_at_origin_must_be_one(fast_plan):
    with pytest.raises(PreconditionError):
        certify_subordination_to_exp(poly(2, 1, kind='raw'), fast_plan)


def test_kummer_minus_one_three_margin(fast_plan):
    # Phi(-1; 3; z) = 1 - z/3, worst at z near 1 where |Log(2/3)| = 0.405...
    cert = certify_subordination_to_exp(AnalyticMap.raw(kummer_series(-1, 3)), fast_plan)
    assert cert.status == VERIFIED
    assert cert.max_log_mod == pytest.approx(abs(math.log(1 - 0.999 / 3)), abs=1e-6)
    assert cert.witness.real > 0.99


def test_boundary_case_is_inconclusive():
    # exp(z / 0.999) truncated: |Log p| = 1 up to rounding on |z| = 0.999
    coeffs = [(1 / 0.999) ** n / math.factorial(n) for n in range(40)]
    plan = SamplingPlan((0.999,), 256, 1)
    cert = certify_subordination_to_exp(PowerSeries(coeffs), plan)
    assert cert.status == INCONCLUSIVE


def test_refinement_never_lowers_the_maximum():
    p = poly(1, 0.3, 0.1j, kind='raw')
    coarse = certify_subordination_to_exp(p, SamplingPlan((0.99,), 256, 1))
    fine = certify_subordination_to_exp(p, SamplingPlan((0.99,), 256, 8))
    assert fine.max_log_mod >= coarse.max_log_mod


@pytest.mark.parametrize('p', [
    poly(1, 0.3, 0.1j, kind='raw'),
    AnalyticMap.raw(kummer_series(-1, 3)),
    AnalyticMap.raw(kummer_series(0.5 + 0.5j, 3)),
])
def test_circle_maximum_grows_with_radius(p):
    cert = certify_subordination_to_exp(p, SamplingPlan((0.5, 0.9, 0.99, 0.999), 512, 8))
    assert list(cert.circle_max) == sorted(cert.circle_max)


@pytest.mark.parametrize('p', [poly(1, 0.3, 0.1j, kind='raw'), AnalyticMap.raw(kummer_series(0.5 + 0.5j, 3))])
def test_doubling_the_angles_barely_moves_the_maximum(p):
    coarse = certify_subordination_to_exp(p, SamplingPlan(angles=1024))
    fine = certify_subordination_to_exp(p, SamplingPlan(angles=2048))
    assert abs(fine.max_log_mod - coarse.max_log_mod) < 1e-6


def test_certificate_to_dict(fast_plan):
    d = certify_subordination_to_exp(PowerSeries([1.0]), fast_plan).to_dict()
    assert d['status'] == VERIFIED
    assert d['angles'] == 512
    assert d['witness'] == {'re': 0.0, 'im': 0.0}
    assert set(d) >= {'max_log_mod', 'margin', 'radii', 'refine_factor', 'zero_encountered', 'circle_max'}


# quantities

def test_starlike_quantity_of_polynomial():
    # f = z + z^2/4: z f'/f = (1 + z/2) / (1 + z/4)
    q = starlike_quantity(poly(0, 1, 0.25))
    for z in (0.5, -0.7j, 0.3 + 0.6j):
        assert series_eval(q.series, z) == pytest.approx((1 + z / 2) / (1 + z / 4), abs=1e-13)


def test_convex_quantity_of_polynomial():
    # f = z + z^2/4: 1 + z f''/f' = 1 + (z/2) / (1 + z/2)
    q = convex_quantity(poly(0, 1, 0.25))
    for z in (0.5, -0.7j, 0.3 + 0.6j):
        assert series_eval(q.series, z) == pytest.approx(1 + (z / 2) / (1 + z / 2), abs=1e-13)


def test_quantities_need_normalized_maps():
    with pytest.raises(PreconditionError):
        starlike_quantity(poly(1, 1, kind='raw'))
    with pytest.raises(PreconditionError):
        AnalyticMap.polynomial([0, 2], NORMALIZED)
    with pytest.raises(PreconditionError):
        AnalyticMap(PowerSeries([1]), 'odd')


@given(st.lists(st.floats(min_value=-0.05, max_value=0.05), min_size=1, max_size=10))
def test_alexander_turns_starlike_into_convex(tail):
    f = poly(0, 1, *tail)
    star = starlike_quantity(f)
    convex = convex_quantity(alexander(f))
    for z in (0.4, -0.8j, 0.5 + 0.5j):
        assert abs(series_eval(star.series, z) - series_eval(convex.series, z)) <= 1e-12


def test_class_quantity_dispatch():
    f = poly(0, 1, 0.25)
    assert class_quantity(f, PE) is f
    assert class_quantity(f, SE_STAR).kind == 'raw'
    with pytest.raises(PreconditionError):
        class_quantity(f, 'Se')


def test_identity_is_starlike_and_convex(fast_plan):
    f = poly(0, 1)
    assert class_membership(f, SE_STAR, fast_plan).max_log_mod == pytest.approx(0.0, abs=1e-15)
    assert class_membership(f, KE, fast_plan).status == VERIFIED


# hadamard and kernels

def test_identity_kernel_is_neutral():
    f = poly(0, 1, 0.5, -0.25j, 0.1)
    product = hadamard(f, identity_kernel())
    np.testing.assert_array_equal(product.coeffs[:5], f.coeffs)
    assert product.series.is_exact


def test_kernels_match_operators():
    f = poly(0, 1, 0.5, 0.2, -0.1)
    np.testing.assert_allclose(hadamard(f, alexander_kernel()).coeffs, alexander(f).coeffs)
    np.testing.assert_allclose(hadamard(f, libera_kernel()).coeffs, libera(f).coeffs)
    assert libera(f).coeffs[2] == pytest.approx(2 * 0.5 / 3)


def test_kernel_degree_must_be_positive():
    with pytest.raises(PreconditionError):
        identity_kernel(0)


def test_hadamard_cuts_at_shorter_factor():
    f = poly(0, 1, 2, 3)
    g = identity_kernel(10)
    assert len(hadamard(f, g).series) == 4
    assert len(hadamard(g, f).series) == 4


def test_starlike_quantity_of_identity():
    f = AnalyticMap(PowerSeries([0, 1]), NORMALIZED)
    assert starlike_quantity(f).series[0] == 1
    with pytest.raises(PreconditionError):
        starlike_quantity(AnalyticMap.raw(PowerSeries([0, 0, 1])))


# curves

def test_curves_are_closed():
    thetas, values = boundary_curve(256)
    assert len(thetas) == 257
    assert thetas[-1] == pytest.approx(2 * math.pi)
    assert values[0] == values[-1] == pytest.approx(math.e)
    thetas, values = image_curve(poly(1, 0.5, kind='raw'), 0.9, 256)
    assert values[0] == values[-1]
    assert values[128] == pytest.approx(1 - 0.45)
