"""q-combinatorics over `v = q^{1/2}`.

`d` is a symmetrizer: `q_i = q^d = v^{2d}`. A `base` argument is the
`v`-exponent of the deformation parameter itself, so `base=2` means `q` and
`base=4*d` means `q_i^2`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce

from .errors import NonExactDivisionError, ParameterError
from .scalars import LaurentV, ParamScalar, RatFuncV, vpow


def qpower(k: int, d: int = 1) -> LaurentV:
    """`q_i^k` as a monomial in `v`."""

    return vpow(2 * d * k)


@lru_cache(maxsize=None)
def qnum_symmetric(n: int, d: int = 1) -> RatFuncV:
    """The symmetric integer `[n]_{q_i} = (q_i^n - q_i^{-n}) / (q_i - q_i^{-1})`.

    Args:
        `n` (int): Any integer; `[-n] = -[n]`.
        `d` (int, optional): Symmetrizer of `q_i`. Defaults to 1.

    Raises:
        `NonExactDivisionError`: Never for valid input; the quotient is always a Laurent polynomial.

    Returns:
        `RatFuncV`: A Laurent polynomial in `v`.
    """

    if n == 0:
        return RatFuncV()
    quotient = RatFuncV(qpower(n, d) - qpower(-n, d), qpower(1, d) - qpower(-1, d))
    quotient.as_laurent()
    return quotient


def qnum_nonsym(n: int, p):
    """`(n)_p = 1 + p + ... + p^{n-1}`, with `(0)_p = 0`."""

    p = ParamScalar.coerce(p)
    return reduce(lambda acc, k: acc + p ** k, range(n), ParamScalar())


@lru_cache(maxsize=None)
def qfactorial(n: int, d: int = 1) -> RatFuncV:
    if n < 0:
        raise ParameterError(f'q-factorial of negative integer {n}')
    return reduce(lambda acc, k: acc * qnum_symmetric(k, d), range(1, n + 1), RatFuncV.coerce(1))


@lru_cache(maxsize=None)
def qbinomial(n: int, m: int, d: int = 1) -> RatFuncV:
    """The symmetric q-binomial `[n choose m]_{q_i}`.

    Raises:
        `ParameterError`: If not `0 <= m <= n`.
        `NonExactDivisionError`: If the factorial quotient were not a Laurent polynomial.
    """

    if not 0 <= m <= n:
        raise ParameterError(f'q-binomial needs 0 <= m <= n, got n={n}, m={m}')
    quotient = qfactorial(n, d) / (qfactorial(m, d) * qfactorial(n - m, d))
    quotient.as_laurent()
    return quotient


def qpochhammer_finite(a, n: int, base: int = 2) -> ParamScalar:
    """`(a; q)_n` with `q = v^base`."""

    a = ParamScalar.coerce(a)
    result = ParamScalar.one()
    for k in range(n):
        result = result * (1 - a * vpow(base * k))
    return result


@lru_cache(maxsize=None)
def qpoch_q(n: int, base: int = 2) -> LaurentV:
    """`(q; q)_n` with `q = v^base`."""

    result = LaurentV.constant(1)
    for k in range(1, n + 1):
        result = result * (1 - vpow(base * k))
    return result


def qpochhammer_series(n_max: int, base: int = 2) -> list[ParamScalar]:
    """Coefficients of `a^0 .. a^{n_max}` in the expansion of `(a; q)_inf`."""

    if n_max < 0:
        raise ParameterError('n_max must be nonnegative')
    return [
        ParamScalar.constant(RatFuncV(vpow(base * (n * (n - 1) // 2)) * (-1) ** n, qpoch_q(n, base)))
        for n in range(n_max + 1)
    ]


def truncated_product_check(n_factors: int, n_max: int, base: int = 2) -> bool:
    """Compares `prod_{k<N}(1 - a q^k)` with the series coefficients up to `min(N, n_max)`.

    The finite product and the infinite product agree as power series in `q`
    only up to `q^N`, so each coefficient is compared as a power series in `q`
    truncated at that order.
    """

    series = qpochhammer_series(n_max, base)
    product = [LaurentV.constant(1)]
    for k in range(n_factors):
        factor = vpow(base * k)
        shifted = [LaurentV()] + [-c * factor for c in product]
        product = [a + b for a, b in zip(product + [LaurentV()], shifted)]
    order = base * n_factors
    for n in range(min(n_factors, n_max) + 1):
        expected = series[n].as_ratfunc()
        expansion = power_series_of(expected, order)
        actual = product[n] if n < len(product) else LaurentV()
        truncated = LaurentV.from_terms({e: c for e, c in actual.terms() if e < order})
        if truncated != expansion:
            return False
    return True


def series_reciprocal(coeffs: list, n_max: int) -> list:
    """Inverts a power series with unit constant term up to degree `n_max`.

    Args:
        `coeffs` (list): Coefficients `a_0 .. a_k` of the series; `a_0` must be 1.
        `n_max` (int): Last degree of the result.

    Raises:
        `ParameterError`: If the constant term is not 1.

    Returns:
        `list`: Coefficients `b_0 .. b_{n_max}` with `(sum a_k t^k)(sum b_k t^k) = 1 + O(t^{n_max+1})`.
    """

    if not coeffs or coeffs[0] != 1:
        raise ParameterError('series_reciprocal needs constant term 1')
    result = [coeffs[0] * 0 + 1]
    for n in range(1, n_max + 1):
        acc = coeffs[0] * 0
        for k in range(1, min(n, len(coeffs) - 1) + 1):
            acc = acc + coeffs[k] * result[n - k]
        result.append(-acc)
    return result


def power_series_of(value: RatFuncV, order: int) -> LaurentV:
    """Expands `value` as a power series in `v`, dropping exponents `>= order`.

    Raises:
        `NonExactDivisionError`: If the denominator vanishes at `v = 0`.
    """

    den = value.denominator
    if den.constant_term() == 0:
        raise NonExactDivisionError(f'{value} has a pole at v = 0')
    size = order - min(value.num.min_exp, 0) + 1
    den_coeffs = [den.coefficient(k) / den.constant_term() for k in range(size)]
    inverse = series_reciprocal(den_coeffs, size)
    out: dict[int, Fraction] = {}
    for exp, coeff in value.num.terms():
        for k, b in enumerate(inverse):
            if exp + k >= order:
                break
            out[exp + k] = out.get(exp + k, Fraction(0)) + coeff * b / den.constant_term()
    return LaurentV.from_terms(out)


def qbinom_alternating_sum(ell: int, d: int = 1) -> bool:
    """Checks `sum_n (-1)^n [l choose n]_q q^{n(l+1)} = (q^2; q^2)_l` exactly."""

    lhs = RatFuncV()
    for n in range(ell + 1):
        lhs = lhs + qbinomial(ell, n, d) * qpower(n * (ell + 1), d) * (-1) ** n
    return lhs == RatFuncV(qpoch_q(ell, base=4 * d))


def combined_c(d: int, c_i: str) -> ParamScalar:
    """`-c_i q_i^2 / (q_i - q_i^{-1})`."""

    return ParamScalar.symbol(c_i) * RatFuncV(-qpower(2, d), qpower(1, d) - qpower(-1, d))


def substitute_combined_c(expr, d: int, c_i: str, symbol: str = 'c'):
    """Replaces the combined constant `c` by its expression in `c_i` throughout `expr`.

    `expr` is a `ParamScalar` or any carrier exposing `map_coefficients`.
    """

    value = combined_c(d, c_i)
    if isinstance(expr, ParamScalar):
        return expr.substitute(symbol, value)
    return expr.map_coefficients(lambda coeff: coeff.substitute(symbol, value))
