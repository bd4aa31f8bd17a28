"""Continuous q-Hermite polynomials `H_n(x; q)`, the operator `D_q` and the families `w_m`, `v_m`.

`base` is the `v`-exponent of the deformation parameter: `base=2` is `q`,
`base=4*d` is `q_i^2`. `d` is the symmetrizer of the index `i`, so
`q_i = v^{2d}`; a negative `d` stands for `q_i^{-1}`.
"""
from __future__ import annotations

import logging
from functools import lru_cache

from algebra.polynomials import SymLaurent, XPoly, x_to_z, z_to_x
from algebra.qnumbers import (
    combined_c,
    qbinomial,
    qfactorial,
    qnum_nonsym,
    qnum_symmetric,
    qpoch_q,
    qpochhammer_series,
    qpower,
    series_reciprocal,
)
from algebra.scalars import ParamScalar, RatFuncV, vpow

logger = logging.getLogger(__name__)

C = ParamScalar.symbol('c')


@lru_cache(maxsize=None)
def hermite_rec(n: int, base: int = 2) -> XPoly:
    """`H_n(x; q)` from `H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}`, `H_{-1} = 0`, `H_0 = 1`."""

    prev, cur = XPoly(), XPoly.constant(1)
    two_x = XPoly.x() * 2
    for k in range(n):
        prev, cur = cur, two_x * cur - prev * (1 - vpow(base * k))
    return cur


def hermite_explicit(n: int, base: int = 2) -> XPoly:
    """`H_n` from its expansion `sum_k (q;q)_n / ((q;q)_k (q;q)_{n-k}) z^{n-2k}`.

    Raises:
        `AsymmetricLaurentError`: If the `z`-expansion were not symmetric.
    """

    top = qpoch_q(n, base)
    s = SymLaurent({
        n - 2 * k: RatFuncV(top, qpoch_q(k, base) * qpoch_q(n - k, base))
        for k in range(n + 1)
    })
    return z_to_x(s)


def dq_apply(p: XPoly) -> XPoly:
    """Applies `D_q = delta_q / delta_q x` with `delta_q f(z) = f(v z) - f(z / v)`.

    The lifted numerator is divided exactly by `z - 1/z`, then by `(v - 1/v) / 2`.

    Raises:
        `NonExactDivisionError`: If a division is not exact.
    """

    numerator = x_to_z(p).dilate(lambda k: ParamScalar.coerce(vpow(k) - vpow(-k)))
    quotient = z_to_x(numerator.divide_by_z_minus_zinv())
    half_gap = RatFuncV(vpow(1) - vpow(-1), 2)
    return quotient.map_coefficients(lambda coeff: coeff / half_gap)


def dq_forward_factor(n: int) -> RatFuncV:
    """`2 q^{-(n-1)/2} (1 - q^n) / (1 - q)`."""

    return RatFuncV(vpow(-(n - 1)) * (1 - vpow(2 * n)) * 2, 1 - vpow(2))


def dq_forward_check(n: int) -> bool:
    if n == 0:
        return dq_apply(hermite_rec(0)).is_zero
    return dq_apply(hermite_rec(n)) == hermite_rec(n - 1) * dq_forward_factor(n)


def hermite_parity_check(n: int, base: int = 2) -> bool:
    """Degree `n`, leading coefficient `2^n`, only exponents of the parity of `n`."""

    h = hermite_rec(n, base)
    return h.degree == n and h.leading_coefficient() == 2 ** n and h.has_parity(n)


def inverse_pochhammer_series(n_max: int, base: int = 2) -> list[ParamScalar]:
    """Coefficients of `1 / (a; q)_inf` in `a`, by inverting the `(a; q)_inf` series."""

    return series_reciprocal(qpochhammer_series(n_max, base), n_max)


def genfun_coefficients(n_max: int, base: int = 2) -> list[XPoly]:
    """Coefficients of `s^n` in `1 / ((s z; q)_inf (s/z; q)_inf)`, converted to `x`."""

    inverse = inverse_pochhammer_series(n_max, base)
    out = []
    for n in range(n_max + 1):
        s = SymLaurent()
        for k in range(n + 1):
            s = s + SymLaurent.monomial(2 * k - n, inverse[k] * inverse[n - k])
        out.append(z_to_x(s))
    return out


def genfun_check_uni(n_max: int) -> bool:
    """Compares the generating function with `H_n / (q; q)_n` for all `n <= n_max`."""

    coefficients = genfun_coefficients(n_max)
    return all(
        coefficients[n] == hermite_rec(n).map_coefficients(lambda c, n=n: c / RatFuncV(qpoch_q(n)))
        for n in range(n_max + 1)
    )


def dq_power(p: XPoly, k: int) -> XPoly:
    for _ in range(k):
        p = dq_apply(p)
    return p


def dq_power_on_hermite_check(m: int, k: int) -> bool:
    """`D_q^k H_m = 2^k (1-q)^{-k} q^{-(mk - C(k,2) - k)/2} (q;q)_m / (q;q)_{m-k} H_{m-k}`."""

    factor = RatFuncV(
        vpow(-(m * k - k * (k - 1) // 2 - k)) * qpoch_q(m) * 2 ** k,
        (1 - vpow(2)) ** k * qpoch_q(m - k),
    )
    return dq_power(hermite_rec(m), k) == hermite_rec(m - k) * factor


@lru_cache(maxsize=None)
def wm_poly(m: int, d: int = 1, c: ParamScalar = C) -> XPoly:
    """`w_m(x; q_i, c)` from `w_{m+1} = x w_m - c (m)_{q_i^2} w_{m-1}`.

    Args:
        `m` (int): Degree.
        `d` (int, optional): Symmetrizer, `q_i = v^{2d}`. Defaults to 1.
        `c` (ParamScalar, optional): The combined constant. Defaults to the symbol `c`.

    Returns:
        `XPoly`: Monic of degree `m`, polynomial in `c`.
    """

    prev, cur = XPoly(), XPoly.constant(1)
    qi_squared = qpower(2, d)
    for k in range(m):
        prev, cur = cur, XPoly.x() * cur - prev * (c * qnum_nonsym(k, qi_squared))
    return cur


@lru_cache(maxsize=None)
def vm_poly(m: int, d: int = 1, c: ParamScalar = C) -> XPoly:
    """`v_m(x; q_i, c)` from `v_{m+1} = x v_m + c q_i^{-2} (m)_{q_i^{-2}} v_{m-1}`."""

    prev, cur = XPoly(), XPoly.constant(1)
    qi_minus_two = qpower(-2, d)
    for k in range(m):
        prev, cur = cur, XPoly.x() * cur + prev * (c * qi_minus_two * qnum_nonsym(k, qi_minus_two))
    return cur


def vm_defsum(n: int, d: int = 1, c: ParamScalar = C) -> XPoly:
    """`sum_k c^k q_i^{-k(k+1)/2} [n choose 2k] [2k]! / [k]! w_{n-2k}`."""

    total = XPoly()
    for k in range(n // 2 + 1):
        weight = qbinomial(n, 2 * k, d) * qfactorial(2 * k, d) / qfactorial(k, d) * qpower(-(k * (k + 1) // 2), d)
        total = total + wm_poly(n - 2 * k, d, c) * (c ** k * weight)
    return total


def vm_defsum_check(n: int, d: int = 1) -> bool:
    return vm_defsum(n, d) == vm_poly(n, d)


def divided_power(m: int, d: int = 1, c: ParamScalar = C) -> XPoly:
    """`w^{(m)} = w_m / [m]_{q_i}!`, zero for negative `m`."""

    if m < 0:
        return XPoly()
    return wm_poly(m, d, c).map_coefficients(lambda coeff: coeff / qfactorial(m, d))


def wm_divided_check(m: int, d: int = 1) -> bool:
    """`[m] w^{(m)} = x w^{(m-1)} - c q_i^{m-2} w^{(m-2)}`."""

    lhs = divided_power(m, d) * qnum_symmetric(m, d)
    rhs = XPoly.x() * divided_power(m - 1, d) - divided_power(m - 2, d) * (C * qpower(m - 2, d))
    return lhs == rhs


def rescale_hermite(p, kappa: ParamScalar, degree: int):
    """The `b`-free form of `(2b)^{-degree} p(b x)`.

    A monomial of total degree `degree - 2k` is multiplied by
    `2^{2k - degree} kappa^k`, where `kappa` plays the role of `(4 b^2)^{-1}`.
    Works for `XPoly` and `XYPoly`.
    """

    terms = {}
    for key, coeff in p.terms.items():
        total = key if isinstance(key, int) else sum(key)
        k = (degree - total) // 2
        terms[key] = coeff * kappa ** k * RatFuncV.coerce(2) ** (2 * k - degree)
    return type(p)(terms)


def rescale_constant(d: int = 1, c: ParamScalar = C) -> ParamScalar:
    """`c / (1 - q_i^2)`, the value of `(4 b_i^2)^{-1}`."""

    return c / RatFuncV(1 - qpower(2, d))


def rescale_constant_in_ci(d: int, c_i: str) -> ParamScalar:
    """`c_i q_i / (q_i - q_i^{-1})^2`."""

    return ParamScalar.symbol(c_i) * RatFuncV(qpower(1, d), (qpower(1, d) - qpower(-1, d)) ** 2)


def wm_is_rescaled_hermite_check(m: int, d: int = 1, c_i: str = 'c_i') -> bool:
    """Checks `w_m = (2b_i)^{-m} H_m(b_i x; q_i^2)` without forming `b_i`.

    Three facts are compared exactly: `(m)_{q_i^2} (1 - q_i^2) = 1 - q_i^{2m}`;
    `w_m` equals the rescaled `H_m(x; q_i^2)` with `kappa = c / (1 - q_i^2)`;
    and `kappa` becomes `c_i q_i / (q_i - q_i^{-1})^2` once `c` is written in `c_i`.
    """

    qi_squared = qpower(2, d)
    geometric = qnum_nonsym(m, qi_squared) * (1 - qi_squared) == ParamScalar.coerce(1 - qpower(2 * m, d))
    kappa = rescale_constant(d)
    rescaled = rescale_hermite(hermite_rec(m, base=4 * d), kappa, m) == wm_poly(m, d)
    in_ci = kappa.substitute('c', combined_c(d, c_i)) == rescale_constant_in_ci(d, c_i)
    if not (geometric and rescaled and in_ci):
        logger.debug('rescaled Hermite check failed at m=%d d=%d: %s %s %s', m, d, geometric, rescaled, in_ci)
    return geometric and rescaled and in_ci


def vm_is_rescaled_hermite_check(m: int, d: int = 1) -> bool:
    """`v_m = (2b_i)^{-m} H_m(b_i x; q_i^{-2})` in `b`-free form, same `kappa` as for `w_m`."""

    return rescale_hermite(hermite_rec(m, base=-4 * d), rescale_constant(d), m) == vm_poly(m, d)


def vmwm_check(m: int, d: int = 1) -> bool:
    """`v_m(x; q_i, c) = w_m(x; q_i^{-1}, -q_i^{-2} c)`."""

    return vm_poly(m, d) == wm_poly(m, -d, C * (-qpower(-2, d)))
