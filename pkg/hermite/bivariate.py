"""Bivariate continuous q-Hermite polynomials `H_{m,n}(x, y; q, r)` and the family `w_{m,n}`.

Negative indices give the zero polynomial. `H_{m,n}` is built by raising `n`
along `m = 0` with the y-recursion, then raising `m` with the x-recursion.
"""
from __future__ import annotations

import logging
import random
from functools import lru_cache
from typing import Callable

from algebra.polynomials import XYPoly
from algebra.qnumbers import qbinomial, qfactorial, qnum_nonsym, qpoch_q, qpochhammer_series, qpower
from algebra.scalars import ParamScalar, RatFuncV, vpow

from .schemas import Axis, DqRelationReport
from .univariate import (
    C,
    dq_apply,
    dq_forward_factor,
    dq_power,
    genfun_coefficients,
    hermite_rec,
    rescale_constant,
    rescale_hermite,
    vm_defsum,
    vm_poly,
    wm_poly,
)

logger = logging.getLogger(__name__)

R = ParamScalar.symbol('r')

Cell = tuple[int, int]


def _x_step(table: Callable[[int, int], XYPoly], m: int, n: int, base: int, r: ParamScalar) -> XYPoly:
    """`H_{m,n}` from the x-recursion at `m - 1`."""

    k = m - 1
    return (
        XYPoly.x() * 2 * table(k, n)
        - table(k - 1, n) * (1 - vpow(base * k))
        - table(k, n - 1) * (r * vpow(base * k) * (1 - vpow(base * n)))
    )


def _y_step(table: Callable[[int, int], XYPoly], m: int, n: int, base: int, r: ParamScalar) -> XYPoly:
    """`H_{m,n}` from the y-recursion at `n - 1`."""

    k = n - 1
    return (
        XYPoly.y() * 2 * table(m, k)
        - table(m, k - 1) * (1 - vpow(base * k))
        - table(m - 1, k) * (r * vpow(base * k) * (1 - vpow(base * m)))
    )


@lru_cache(maxsize=None)
def bihermite_rec(m: int, n: int, base: int = 2, r: ParamScalar = R) -> XYPoly:
    """`H_{m,n}(x, y; q, r)` with `q = v^base`.

    Args:
        `m` (int): Degree in `x`.
        `n` (int): Degree in `y`.
        `base` (int, optional): `v`-exponent of `q`. Defaults to 2.
        `r` (ParamScalar, optional): Deformation parameter. Defaults to the symbol `r`.

    Returns:
        `XYPoly`: A polynomial of bidegree `(m, n)`.
    """

    if m < 0 or n < 0:
        return XYPoly()
    if m == 0 and n == 0:
        return XYPoly.constant(1)

    def table(a: int, b: int) -> XYPoly:
        return bihermite_rec(a, b, base, r)

    if m == 0:
        return _y_step(table, m, n, base, r)
    return _x_step(table, m, n, base, r)


def bihermite_table(
        max_total: int,
        chooser: Callable[[int, int], str],
        base: int = 2,
        r: ParamScalar = R,
) -> dict[Cell, XYPoly]:
    """Fills every cell of total degree `<= max_total`, taking the recursion named by `chooser(m, n)`.

    Cells on the axes use the only recursion available there.
    """

    cells: dict[Cell, XYPoly] = {}

    def table(a: int, b: int) -> XYPoly:
        return cells.get((a, b), XYPoly()) if a >= 0 and b >= 0 else XYPoly()

    for total in range(max_total + 1):
        for m in range(total + 1):
            n = total - m
            if total == 0:
                cells[(0, 0)] = XYPoly.constant(1)
            elif m == 0 or (n > 0 and chooser(m, n) == 'y'):
                cells[(m, n)] = _y_step(table, m, n, base, r)
            else:
                cells[(m, n)] = _x_step(table, m, n, base, r)
    return cells


def path_independence_check(max_total: int, seed: int = 0) -> bool:
    """Fills the table along a random choice of recursions and compares with `bihermite_rec`."""

    rng = random.Random(seed)
    cells = bihermite_table(max_total, lambda m, n: rng.choice('xy'))
    return all(poly == bihermite_rec(m, n) for (m, n), poly in cells.items())


def y_recursion_check(m: int, n: int) -> bool:
    """`H_{m,n+1}` from the y-recursion equals the canonical value."""

    def table(a: int, b: int) -> XYPoly:
        return bihermite_rec(a, b)

    return _y_step(table, m, n + 1, 2, R) == bihermite_rec(m, n + 1)


def bihermite_expand(m: int, n: int, base: int = 2, r: ParamScalar = R) -> XYPoly:
    """`sum_k (-1)^k q^{C(k,2)} (q;q)_m (q;q)_n r^k / ((q;q)_{m-k} (q;q)_{n-k} (q;q)_k) H_{m-k}(x) H_{n-k}(y)`."""

    total = XYPoly()
    for k in range(min(m, n) + 1):
        weight = RatFuncV(
            vpow(base * (k * (k - 1) // 2)) * qpoch_q(m, base) * qpoch_q(n, base) * (-1) ** k,
            qpoch_q(m - k, base) * qpoch_q(n - k, base) * qpoch_q(k, base),
        )
        total = total + XYPoly.product(hermite_rec(m - k, base), hermite_rec(n - k, base)) * (r ** k * weight)
    return total


def symmetry_check(m: int, n: int) -> bool:
    """`H_{m,n}(x, y) = H_{n,m}(y, x)`."""

    return bihermite_rec(m, n).swap() == bihermite_rec(n, m)


def bihermite_shape_check(m: int, n: int) -> bool:
    """Bidegree exactly `(m, n)` and every monomial `x^i y^j` with `i + j = m + n (mod 2)`."""

    h = bihermite_rec(m, n)
    if h.is_zero:
        return False
    max_x = max(ex for ex, _ in h.terms)
    max_y = max(ey for _, ey in h.terms)
    parity = all((ex + ey - m - n) % 2 == 0 for ex, ey in h.terms)
    return max_x == m and max_y == n and parity


def r_zero_check(m: int, n: int) -> bool:
    """`H_{m,n}(x, y; q, 0) = H_m(x) H_n(y)`."""

    return bihermite_rec(m, n).substitute('r', 0) == XYPoly.product(hermite_rec(m), hermite_rec(n))


def genfun_check_biv(n_max: int) -> bool:
    """Compares `(rst; q)_inf / |(s e^{i theta}, t e^{i phi}; q)_inf|^2` with `H_{m,n} / ((q;q)_m (q;q)_n)`."""

    univariate = genfun_coefficients(n_max)
    composite = qpochhammer_series(n_max)
    for m in range(n_max + 1):
        for n in range(n_max + 1 - m):
            series = XYPoly()
            for k in range(min(m, n) + 1):
                series = series + XYPoly.product(univariate[m - k], univariate[n - k]) * (composite[k] * R ** k)
            expected = bihermite_rec(m, n).map_coefficients(
                lambda c: c / RatFuncV(qpoch_q(m) * qpoch_q(n))
            )
            if series != expected:
                logger.debug('bivariate generating function differs at (%d, %d)', m, n)
                return False
    return True


def dq_partial(p: XYPoly, axis: Axis | str = Axis.x) -> XYPoly:
    """`D_q` in one variable, the other one treated as a scalar."""

    axis = Axis(axis).value
    return XYPoly.from_slices({other: dq_apply(s) for other, s in p.slices(axis).items()}, axis)


def dq_partial_power(p: XYPoly, k: int, axis: Axis | str = Axis.x) -> XYPoly:
    for _ in range(k):
        p = dq_partial(p, axis)
    return p


def dq_relation_check(m: int, n: int, axis: Axis | str = Axis.x) -> DqRelationReport:
    """Applies `D_{q,axis}` to `H_{m,n}` and tests both normalisations of the lowered polynomial.

    The right side is `2 q^{-e} (1 - q^k) / (1 - q) H(..., q^{1/2} r)` with `k` the
    degree along `axis` and `e = (k - 1) / 2` (half) or `e = k - 1` (integer);
    `q^{1/2} r` is `v r`.
    """

    axis = Axis(axis)
    k = m if axis is Axis.x else n
    lhs = dq_partial(bihermite_rec(m, n), axis)
    lowered = bihermite_rec(m - 1, n) if axis is Axis.x else bihermite_rec(m, n - 1)
    lowered = lowered.substitute('r', R * vpow(1))
    half = lowered * dq_forward_factor(k)
    integer = lowered * (dq_forward_factor(k) * vpow(-(k - 1)))
    return DqRelationReport(
        m=m, n=n, axis=axis,
        half_exponent_holds=lhs == half,
        integer_exponent_holds=lhs == integer,
    )


def operator_formulation_check(m: int, n: int) -> bool:
    """`H_{m,n} = sum_k (-q^{(m+n)/2-1} ((1-q)/2)^2 r)^k / (q;q)_k D_x^k D_y^k H_m(x) H_n(y)`.

    Also checks that the first term past `min(m, n)` vanishes.
    """

    step = R * RatFuncV(-vpow(m + n - 2) * (1 - vpow(2)) ** 2, 4)
    total = XYPoly()
    for k in range(min(m, n) + 1):
        term = XYPoly.product(dq_power(hermite_rec(m), k), dq_power(hermite_rec(n), k))
        total = total + term * (step ** k / RatFuncV(qpoch_q(k)))
    beyond = min(m, n) + 1
    vanishes = XYPoly.product(dq_power(hermite_rec(m), beyond), dq_power(hermite_rec(n), beyond)).is_zero
    return vanishes and total == bihermite_rec(m, n)


@lru_cache(maxsize=None)
def wmn_poly(m: int, n: int, d: int = 1, a_ij: int = 0, c: ParamScalar = C) -> XYPoly:
    """`w_{m,n}(x, y)` for a pair with `tau(i) = i != j`.

    The x-recursion is
    `w_{m+1,n} = x w_{m,n} - c (m)_{q_i^2} w_{m-1,n} - c q_i^{2m + a_ij} (n)_{q_i^2} w_{m,n-1}`
    and the y-recursion is its mirror image.
    """

    if m < 0 or n < 0:
        return XYPoly()
    if m == 0 and n == 0:
        return XYPoly.constant(1)
    if m == 0:
        return _wmn_y_step(m, n, d, a_ij, c)
    return _wmn_x_step(m, n, d, a_ij, c)


def _wmn_x_step(m: int, n: int, d: int, a_ij: int, c: ParamScalar) -> XYPoly:
    k = m - 1
    qi_squared = qpower(2, d)
    return (
        XYPoly.x() * wmn_poly(k, n, d, a_ij, c)
        - wmn_poly(k - 1, n, d, a_ij, c) * (c * qnum_nonsym(k, qi_squared))
        - wmn_poly(k, n - 1, d, a_ij, c) * (c * qpower(2 * k + a_ij, d) * qnum_nonsym(n, qi_squared))
    )


def _wmn_y_step(m: int, n: int, d: int, a_ij: int, c: ParamScalar) -> XYPoly:
    k = n - 1
    qi_squared = qpower(2, d)
    return (
        XYPoly.y() * wmn_poly(m, k, d, a_ij, c)
        - wmn_poly(m, k - 1, d, a_ij, c) * (c * qnum_nonsym(k, qi_squared))
        - wmn_poly(m - 1, k, d, a_ij, c) * (c * qpower(2 * k + a_ij, d) * qnum_nonsym(m, qi_squared))
    )


def wmn_recursions_check(m: int, n: int, d: int = 1, a_ij: int = 0) -> bool:
    """Both recursions at `(m, n)` and the symmetry `w_{m,n}(x, y) = w_{n,m}(y, x)`."""

    x_ok = _wmn_x_step(m + 1, n, d, a_ij, C) == wmn_poly(m + 1, n, d, a_ij)
    y_ok = _wmn_y_step(m, n + 1, d, a_ij, C) == wmn_poly(m, n + 1, d, a_ij)
    symmetric = wmn_poly(m, n, d, a_ij).swap() == wmn_poly(n, m, d, a_ij)
    boundary = m > 0 or wmn_poly(0, n, d, a_ij) == XYPoly.from_xpoly(wm_poly(n, d), 'y')
    return x_ok and y_ok and symmetric and boundary


def wmn_mixed_expansion(m: int, n: int, d: int = 1, a_ij: int = 0, c: ParamScalar = C) -> XYPoly:
    """`sum_k (-1)^k c^k q_i^{k(m+n+a_ij-1) - k(k+1)/2} [m, k] [n, k] [k]! w_{m-k}(x) w_{n-k}(y)`."""

    total = XYPoly()
    for k in range(min(m, n) + 1):
        weight = (
            qbinomial(m, k, d) * qbinomial(n, k, d) * qfactorial(k, d)
            * qpower(k * (m + n + a_ij - 1) - k * (k + 1) // 2, d) * (-1) ** k
        )
        total = total + XYPoly.product(wm_poly(m - k, d, c), wm_poly(n - k, d, c)) * (c ** k * weight)
    return total


def wmn_mixed_expansion_check(m: int, n: int, d: int = 1, a_ij: int = 0) -> bool:
    return wmn_mixed_expansion(m, n, d, a_ij) == wmn_poly(m, n, d, a_ij)


def wmn_hermite_check(m: int, n: int, d: int = 1, a_ij: int = 0) -> bool:
    """`w_{m,n} = (2b_i)^{-m-n} H_{m,n}(b_i x, b_i y; q_i^2, q_i^{a_ij})` in `b`-free form."""

    h = bihermite_rec(m, n, base=4 * d, r=ParamScalar.coerce(qpower(a_ij, d)))
    return rescale_hermite(h, rescale_constant(d), m + n) == wmn_poly(m, n, d, a_ij)


def serre_wmn_sum(d: int, a_ij: int, c: ParamScalar = C) -> XYPoly:
    """`sum_n (-1)^n [1 - a_ij, n] w_{1-a_ij-n, n}(x, y)`."""

    top = 1 - a_ij
    total = XYPoly()
    for n in range(top + 1):
        total = total + wmn_poly(top - n, n, d, a_ij, c) * (qbinomial(top, n, d) * (-1) ** n)
    return total


def serre_wv_sum(d: int, a_ij: int, c: ParamScalar = C, order: str = 'wv') -> XYPoly:
    """`sum_l (-1)^l [1 - a_ij, l] w_{1-a_ij-l}(x) v_l(y)`, or with `v` and `w` exchanged for `order='vw'`."""

    top = 1 - a_ij
    left, right = (wm_poly, vm_poly) if order == 'wv' else (vm_poly, wm_poly)
    total = XYPoly()
    for ell in range(top + 1):
        total = total + XYPoly.product(left(top - ell, d, c), right(ell, d, c)) * (qbinomial(top, ell, d) * (-1) ** ell)
    return total


def resummation_check(a_ij: int, d: int = 1) -> bool:
    """The bivariate Serre sum equals its univariate resummation in `w` and `v`.

    `v_l` is taken both from its recursion and from its defining sum in `w`.
    """

    top = 1 - a_ij
    lhs = serre_wmn_sum(d, a_ij)
    rhs = serre_wv_sum(d, a_ij)
    by_defsum = XYPoly()
    for ell in range(top + 1):
        by_defsum = by_defsum + XYPoly.product(wm_poly(top - ell, d), vm_defsum(ell, d)) * (
            qbinomial(top, ell, d) * (-1) ** ell
        )
    return lhs == rhs == by_defsum
