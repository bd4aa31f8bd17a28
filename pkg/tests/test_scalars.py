from fractions import Fraction

import pytest

from algebra.errors import NonExactDivisionError, ParameterError
from algebra.qnumbers import (
    combined_c,
    qbinom_alternating_sum,
    qbinomial,
    qfactorial,
    qnum_nonsym,
    qnum_symmetric,
    qpoch_q,
    qpochhammer_finite,
    qpower,
    series_reciprocal,
    substitute_combined_c,
    truncated_product_check,
)
from algebra.scalars import LaurentV, ParamScalar, RatFuncV, vpow

V = vpow(1)
C = ParamScalar.symbol('c')


def test_laurent_rendering():
    assert str(LaurentV.from_terms({2: 1, -2: 1})) == 'v^2 + v^-2'
    assert str(LaurentV.monomial(3, 2)) == '2*v^3'
    assert str(LaurentV()) == '0'


def test_laurent_arithmetic():
    assert (V + 1) * (V - 1) == V ** 2 - 1
    assert vpow(3) * vpow(-3) == LaurentV.constant(1)
    assert (V ** 2 + vpow(-1)).bar() == vpow(-2) + V
    assert (V + 2).dilate(3) == vpow(3) + 2


def test_ratfunc_is_reduced():
    assert RatFuncV(1 - vpow(2), 1 - vpow(4)) == RatFuncV(1, 1 + vpow(2))
    assert RatFuncV(vpow(4) - 1, V ** 2 - 1).as_laurent() == vpow(2) + 1


def test_ratfunc_non_exact_division():
    with pytest.raises(NonExactDivisionError):
        RatFuncV(1, 1 + vpow(2)).as_laurent()


def test_ratfunc_inverse_and_evaluate():
    x = RatFuncV(V + 1, V - 1)
    assert x * x.inverse() == RatFuncV.coerce(1)
    assert x.evaluate(3.0) == pytest.approx(2.0)


def test_param_scalar_arithmetic():
    assert (C + 1) * (C - 1) == C ** 2 - 1
    assert (C ** 2 - 1).substitute('c', 2) == ParamScalar.constant(3)
    assert (C * 2).symbols == {'c'}
    assert (C * V).evaluate(2.0, {'c': 3.0}) == pytest.approx(6.0)


def test_param_scalar_division_by_parameter_is_rejected():
    with pytest.raises(ParameterError):
        ParamScalar.one() / C


def test_param_scalar_evaluate_needs_every_parameter():
    with pytest.raises(ParameterError):
        C.evaluate(1.0)


@pytest.mark.parametrize('d', [1, 2])
def test_qpower(d):
    assert qpower(3, d) == vpow(6 * d)


def test_symmetric_integers():
    assert qnum_symmetric(2) == RatFuncV(vpow(2) + vpow(-2))
    assert qnum_symmetric(3) == RatFuncV(vpow(4) + 1 + vpow(-4))
    assert qnum_symmetric(-2) == -qnum_symmetric(2)
    assert qnum_symmetric(0).is_zero


def test_symmetric_integer_with_symmetrizer():
    assert qnum_symmetric(2, 2) == RatFuncV(vpow(4) + vpow(-4))


def test_nonsymmetric_integers():
    p = ParamScalar.coerce(vpow(2))
    assert qnum_nonsym(3, p) == ParamScalar.coerce(1 + vpow(2) + vpow(4))
    assert qnum_nonsym(0, p).is_zero


def test_qbinomial():
    expected = vpow(8) + vpow(4) + 2 + vpow(-4) + vpow(-8)
    assert qbinomial(4, 2) == RatFuncV(expected)
    assert qbinomial(5, 0) == RatFuncV.coerce(1)
    assert qbinomial(5, 5) == RatFuncV.coerce(1)


@pytest.mark.parametrize('n, m', [(2, 3), (3, -1)])
def test_qbinomial_out_of_range(n, m):
    with pytest.raises(ParameterError):
        qbinomial(n, m)


def test_qfactorial():
    assert qfactorial(3) == qnum_symmetric(2) * qnum_symmetric(3)
    with pytest.raises(ParameterError):
        qfactorial(-1)


def test_qpoch_q():
    assert qpoch_q(0) == LaurentV.constant(1)
    assert qpoch_q(2) == (1 - vpow(2)) * (1 - vpow(4))


def test_series_reciprocal():
    inverse = series_reciprocal([Fraction(1), Fraction(-1)], 4)
    assert inverse == [1, 1, 1, 1, 1]
    with pytest.raises(ParameterError):
        series_reciprocal([Fraction(2)], 3)


@pytest.mark.parametrize('n_factors', [3, 6])
def test_truncated_product(n_factors):
    assert truncated_product_check(n_factors, 4)


@pytest.mark.parametrize('ell', range(11))
def test_qbinom_alternating_sum(ell):
    assert qbinom_alternating_sum(ell)


@pytest.mark.parametrize('ell', range(5))
def test_qbinom_alternating_sum_with_symmetrizer(ell):
    assert qbinom_alternating_sum(ell, 2)


def test_combined_c():
    value = combined_c(1, 'c_i')
    assert value == ParamScalar.symbol('c_i') * RatFuncV(-vpow(4), vpow(2) - vpow(-2))
    assert substitute_combined_c(C * 2, 1, 'c_i') == value * 2


@pytest.mark.parametrize('n', range(5))
def test_finite_pochhammer_step(n):
    a = ParamScalar.symbol('c')
    assert qpochhammer_finite(a, n) * (1 - a * vpow(2 * n)) == qpochhammer_finite(a, n + 1)


@pytest.mark.parametrize('n', range(5))
def test_finite_pochhammer_at_q(n):
    assert qpochhammer_finite(vpow(2), n) == ParamScalar.coerce(qpoch_q(n))
