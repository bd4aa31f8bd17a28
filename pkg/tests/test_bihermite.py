import pytest

from algebra.polynomials import XYPoly
from algebra.scalars import vpow
from hermite import bivariate
from hermite.bivariate import R, bihermite_expand, bihermite_rec, dq_partial_power, serre_wv_sum
from hermite.schemas import Axis, ExponentVariant

DEGREES = [(m, n) for total in range(6) for m in range(total + 1) for n in [total - m]]


def test_first_mixed_polynomial():
    assert bihermite_rec(0, 0) == XYPoly.constant(1)
    assert bihermite_rec(1, 0) == XYPoly.x() * 2
    assert bihermite_rec(0, 1) == XYPoly.y() * 2
    assert bihermite_rec(1, 1) == XYPoly.x() * XYPoly.y() * 4 + R * (vpow(2) - 1)


@pytest.mark.parametrize('m, n', DEGREES)
def test_recursion_matches_expansion(m, n):
    assert bihermite_rec(m, n) == bihermite_expand(m, n)


@pytest.mark.parametrize('m, n', DEGREES)
def test_structure(m, n):
    assert bivariate.symmetry_check(m, n)
    assert bivariate.bihermite_shape_check(m, n)
    assert bivariate.r_zero_check(m, n)
    assert bivariate.y_recursion_check(m, n)


def test_path_independence():
    assert bivariate.path_independence_check(6, seed=3)


def test_generating_function():
    assert bivariate.genfun_check_biv(5)


@pytest.mark.parametrize('m, n', [(m, n) for m in range(4) for n in range(4)])
def test_operator_formulation(m, n):
    assert bivariate.operator_formulation_check(m, n)


def test_dq_relation_needs_half_exponent():
    report = bivariate.dq_relation_check(2, 1, Axis.x)
    assert report.variant is ExponentVariant.half
    assert report.holds


def test_dq_relation_both_exponents_agree_in_degree_one():
    assert bivariate.dq_relation_check(1, 2, Axis.x).variant is ExponentVariant.both


@pytest.mark.parametrize('m, n', [(3, 2), (2, 3)])
def test_dq_relation_along_y(m, n):
    assert bivariate.dq_relation_check(m, n, 'y').half_exponent_holds


def test_dq_partial_power_exhausts_degree():
    p = bihermite_rec(2, 3)
    assert not dq_partial_power(p, 2, 'x').is_zero
    assert dq_partial_power(p, 3, 'x').is_zero
    assert dq_partial_power(p, 4, 'y').is_zero


@pytest.mark.parametrize('d', [1, 2])
@pytest.mark.parametrize('m, n', [(m, n) for m in range(4) for n in range(4)])
def test_wmn_identities(m, n, d, a_ij):
    assert bivariate.wmn_recursions_check(m, n, d, a_ij)
    assert bivariate.wmn_mixed_expansion_check(m, n, d, a_ij)
    assert bivariate.wmn_hermite_check(m, n, d, a_ij)


@pytest.mark.parametrize('d', [1, 2])
def test_resummation(a_ij, d):
    assert bivariate.resummation_check(a_ij, d)


def test_vw_order_is_the_mirror_image(a_ij):
    sign = (-1) ** (1 - a_ij)
    assert serre_wv_sum(1, a_ij, order='vw') == serre_wv_sum(1, a_ij, order='wv').swap() * sign
