import math

import mpmath
import numpy as np
import pytest
from pydantic import ValidationError

from algebra.errors import NumericParamsError
from numeric import orthogonality
from numeric.orthogonality import askey_wilson_check, askey_wilson_mod_check, cmn_bridge, cmn_norm, gram_matrix
from numeric.products import pochhammer_inf_num, qq_inf, specialize, weight_eval, weight_mean
from numeric.quadrature import integrate_1d
from numeric.schemas import NumericParams, QuadRule
from hermite.bivariate import bihermite_rec


def test_qq_infinity_at_one_half(params):
    assert qq_inf(params) == pytest.approx(0.2887880950866024, rel=1e-12)
    assert qq_inf(params) == pytest.approx(float(mpmath.qp(0.5, 0.5)), rel=1e-12)


@pytest.mark.parametrize('a', [0.3, -0.7, 0.2 + 0.4j])
def test_pochhammer_functional_equation(a):
    q = 0.6
    assert pochhammer_inf_num(a, q) == pytest.approx((1 - a) * pochhammer_inf_num(a * q, q), rel=1e-12)


def test_pochhammer_agrees_with_mpmath():
    assert pochhammer_inf_num(0.25, 0.4).real == pytest.approx(float(mpmath.qp(0.25, 0.4)), rel=1e-12)


def test_pochhammer_keeps_array_shape():
    values = pochhammer_inf_num(np.array([[0.1, 0.2], [0.3, 0.0]]), 0.5)
    assert values.shape == (2, 2)
    assert values[1, 1] == 1


def test_pochhammer_rejects_unit_base():
    with pytest.raises(NumericParamsError):
        pochhammer_inf_num(0.5, 1.0)


def test_weight_is_even_and_pi_periodic(params):
    theta = np.linspace(0.1, 3.0, 7)
    assert np.allclose(weight_eval(theta, params), weight_eval(-theta, params))
    assert np.allclose(weight_eval(theta, params), weight_eval(theta + math.pi, params))


def test_weight_mean_is_the_period_average(params):
    average = integrate_1d(lambda t: weight_eval(t, params), 0.0, math.pi, params.grid, params.quad_rule) / math.pi
    assert average == pytest.approx(weight_mean(params), rel=1e-10)


@pytest.mark.parametrize('rule', list(QuadRule))
def test_integrate_1d(rule):
    assert integrate_1d(lambda t: np.cos(t) ** 2, 0.0, math.pi, 128, rule) == pytest.approx(math.pi / 2, rel=1e-8)


def test_specialize_first_mixed_polynomial(params):
    coeffs = specialize(bihermite_rec(1, 1), params)
    assert coeffs[1, 1] == pytest.approx(4)
    assert coeffs[0, 0] == pytest.approx(params.r * (params.q - 1))


def test_constant_gram_entry(params):
    report = gram_matrix(0, params)
    assert report.indices == [(0, 0)]
    assert report.entries[0][0] == pytest.approx(math.pi ** 2 * weight_mean(params), rel=1e-10)
    assert report.converged


def test_gram_report_shape(params):
    report = gram_matrix(1, params)
    assert len(report.indices) == 4
    assert len(report.entries) == len(report.diag) == len(report.predicted) == 4
    assert report.converged
    assert report.tolerance == orthogonality.GRAM_TOLERANCE


def test_gram_degree_bound(params):
    with pytest.raises(NumericParamsError):
        gram_matrix(orthogonality.MAX_GRAM_DEGREE + 1, params)


def test_norm_of_constant(params):
    assert cmn_norm(0, 0, params) == pytest.approx(2 * math.pi ** 2 / qq_inf(params))


@pytest.mark.parametrize('m, n', [(m, n) for m in range(4) for n in range(4)])
def test_exact_norm_bridge(params, m, n):
    assert cmn_bridge(m, n, params) == pytest.approx(cmn_norm(m, n, params), rel=1e-12)


@pytest.mark.parametrize('q, r', [(0.5, 2.0), (0.3, 1.5), (0.8, 3.0)])
def test_norms_are_positive(q, r):
    assert orthogonality.positivity_check(4, NumericParams(q=q, r=r))


def test_askey_wilson_integral(params):
    report = askey_wilson_check(0.1, 0.2, 0.0, 0.0, params)
    assert report.holds
    assert report.r is None
    assert report.rel_err < 1e-7


def test_askey_wilson_all_parameters(params):
    assert askey_wilson_check(0.1, -0.2, 0.3, 0.15, params).holds


def test_modified_integral_depends_on_r():
    low = askey_wilson_mod_check(0.1, 0.2, 0.0, 0.0, NumericParams(r=2.0, grid=128))
    high = askey_wilson_mod_check(0.1, 0.2, 0.0, 0.0, NumericParams(r=3.0, grid=128))
    assert low.r == 2.0
    assert low.quadrature != pytest.approx(high.quadrature, rel=1e-6)


def test_askey_wilson_rejects_complex_parameters(params):
    with pytest.raises(NumericParamsError, match='must be real'):
        askey_wilson_check(0.1 + 0.1j, 0.2, 0.0, 0.0, params)


def test_askey_wilson_rejects_parameters_outside_the_disc(params):
    with pytest.raises(NumericParamsError, match='unit disc'):
        askey_wilson_check(1.2, 0.2, 0.0, 0.0, params)


@pytest.mark.parametrize('fields', [{'q': 1.5}, {'q': 0.0}, {'r': 1.0}, {'r': 0.5}, {'grid': 32}, {'product_tol': 0}])
def test_invalid_params(fields):
    with pytest.raises(ValidationError):
        NumericParams(**fields)
