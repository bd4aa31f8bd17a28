import pytest

from algebra.polynomials import XPoly
from algebra.scalars import ParamScalar, vpow
from hermite import univariate
from hermite.univariate import C, hermite_explicit, hermite_rec, vm_poly, wm_poly

X = XPoly.x()


def test_low_degrees():
    assert hermite_rec(0) == XPoly.constant(1)
    assert hermite_rec(1) == X * 2
    assert hermite_rec(2) == X ** 2 * 4 + (vpow(2) - 1)
    assert hermite_rec(2).to_text() == '4*x^2 + (v^2 - 1)'


@pytest.mark.parametrize('n', range(13))
def test_recursion_matches_explicit_expansion(n):
    assert hermite_rec(n) == hermite_explicit(n)


@pytest.mark.parametrize('n', range(13))
def test_forward_difference(n):
    assert univariate.dq_forward_check(n)


@pytest.mark.parametrize('n', range(9))
def test_degree_leading_coefficient_and_parity(n):
    assert univariate.hermite_parity_check(n)


def test_dq_of_constant_vanishes():
    assert univariate.dq_apply(XPoly.constant(5)).is_zero


def test_dq_lowers_degree_by_one():
    assert univariate.dq_apply(X ** 3).degree == 2


def test_generating_function():
    assert univariate.genfun_check_uni(7)


@pytest.mark.parametrize('m, k', [(m, k) for m in range(6) for k in range(m + 1)])
def test_powers_of_dq(m, k):
    assert univariate.dq_power_on_hermite_check(m, k)


def test_w_low_degrees():
    assert wm_poly(2) == X ** 2 - C
    assert wm_poly(2).to_text() == 'x^2 - c'
    assert wm_poly(3) == X ** 3 - X * (C * (2 + vpow(4)))


def test_v_low_degrees():
    assert vm_poly(2) == X ** 2 + C * vpow(-4)


@pytest.mark.parametrize('d', [1, 2])
@pytest.mark.parametrize('m', range(7))
def test_w_and_v_families(m, d):
    assert univariate.vm_defsum_check(m, d)
    assert univariate.wm_divided_check(m, d)
    assert univariate.wm_is_rescaled_hermite_check(m, d)
    assert univariate.vm_is_rescaled_hermite_check(m, d)
    assert univariate.vmwm_check(m, d)


def test_rescale_constant_is_positive_in_c_i():
    kappa = univariate.rescale_constant_in_ci(1, 'c_i')
    assert kappa == ParamScalar.symbol('c_i') * vpow(2) / (vpow(2) - vpow(-2)) ** 2

