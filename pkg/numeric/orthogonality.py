"""Numeric checks of the orthogonality measure of the bivariate q-Hermite polynomials.

Integrals run in the `(theta, phi)` chart with `u = cos(theta + phi)`,
`v = cos(theta - phi)`, where the measure is `|(e^{2 i theta} / r; q)_inf|^2 dtheta dphi`.
"""
from __future__ import annotations

import logging
import math
from itertools import product

import numpy as np
from numpy.polynomial.polynomial import polyval2d

from algebra.errors import NumericParamsError
from algebra.qnumbers import qpoch_q
from algebra.scalars import ParamScalar, RatFuncV, vpow
from hermite.bivariate import R, bihermite_rec

from .products import pochhammer_inf_num, qq_inf, specialize, weight_eval
from .quadrature import integrate_1d, refined, tensor_grid
from .schemas import AskeyWilsonReport, GramReport, NumericParams

logger = logging.getLogger(__name__)

MAX_GRAM_DEGREE = 4
GRAM_TOLERANCE = 1e-6
REFINEMENT_TOLERANCE = 1e-8


def _norm_terms(m: int, n: int):
    """`(k, l, i, j)` with `i + k + l = m` and `j + k + l = n`, all nonnegative."""

    for k in range(min(m, n) + 1):
        for l in range(min(m, n) - k + 1):
            yield k, l, m - k - l, n - k - l


def cmn_exact(m: int, n: int) -> ParamScalar:
    """`c_{m,n} (q; q)_inf / (2 pi^2)` as an exact polynomial in `r`."""

    total = RatFuncV()
    top = qpoch_q(m) ** 2 * qpoch_q(n) ** 2
    for k, l, i, j in _norm_terms(m, n):
        num = vpow(k * (k - 1)) * top * (-1) ** k
        den = qpoch_q(i) * qpoch_q(j) * qpoch_q(k) * qpoch_q(l) ** 2
        total = total + RatFuncV(num, den)
    return R ** (m + n) * total


def _qq(n: int, q: float) -> float:
    return math.prod(1 - q ** k for k in range(1, n + 1))


def cmn_norm(m: int, n: int, params: NumericParams) -> float:
    """`c_{m,n} = 2 pi^2 / (q; q)_inf * sum (-1)^k q^{k(k-1)/2} (q;q)_m^2 (q;q)_n^2 r^{m+n} / ((q;q)_i (q;q)_j (q;q)_k (q;q)_l^2)`."""

    q, r = params.q, params.r
    top = _qq(m, q) ** 2 * _qq(n, q) ** 2 * r ** (m + n)
    total = sum(
        (-1) ** k * q ** (k * (k - 1) // 2) * top / (_qq(i, q) * _qq(j, q) * _qq(k, q) * _qq(l, q) ** 2)
        for k, l, i, j in _norm_terms(m, n)
    )
    return 2 * math.pi ** 2 / qq_inf(params) * total


def cmn_bridge(m: int, n: int, params: NumericParams) -> float:
    """`cmn_exact` specialized at `(q, r)`, with the prefactor restored."""

    value = cmn_exact(m, n).evaluate(math.sqrt(params.q), {'r': params.r})
    return 2 * math.pi ** 2 / qq_inf(params) * complex(value).real


def gram_matrix(maxdeg: int, params: NumericParams) -> GramReport:
    """Pairs `H_{m,n}(u, v)` with `H_{m',n'}(v, u)` for all `m, n, m', n' <= maxdeg`.

    Raises:
        `NumericParamsError`: If `maxdeg` is negative or above 4.
    """

    if not 0 <= maxdeg <= MAX_GRAM_DEGREE:
        raise NumericParamsError(f'maxdeg must lie in [0, {MAX_GRAM_DEGREE}], got {maxdeg}')
    indices = list(product(range(maxdeg + 1), repeat=2))
    coeffs = [specialize(bihermite_rec(m, n), params) for m, n in indices]

    def compute(grid: int) -> np.ndarray:
        theta, phi, weights = tensor_grid(params.quad_rule, grid, (0.0, math.pi, 0.0, math.pi))
        u, v = np.cos(theta + phi), np.cos(theta - phi)
        measure = weights * weight_eval(theta, params)
        left = np.array([polyval2d(u, v, c) for c in coeffs])
        right = np.array([polyval2d(v, u, c) for c in coeffs])
        return (left * measure) @ right.T

    entries, change = refined(compute, params.grid)
    diag = np.diag(entries)
    predicted = np.array([cmn_norm(m, n, params) for m, n in indices])
    scale = float(np.max(np.abs(diag)))
    offdiag = entries - np.diag(diag)
    max_offdiag = float(np.max(np.abs(offdiag), initial=0.0)) / scale
    max_rel_err = float(np.max(np.abs(diag - predicted) / np.abs(predicted)))
    logger.info('gram matrix maxdeg=%d: offdiag %.3e, diagonal error %.3e', maxdeg, max_offdiag, max_rel_err)
    return GramReport(
        params=params,
        indices=indices,
        entries=entries.tolist(),
        diag=diag.tolist(),
        predicted=predicted.tolist(),
        max_offdiag=max_offdiag,
        max_rel_err=max_rel_err,
        refinement_change=change,
        converged=change < REFINEMENT_TOLERANCE,
        tolerance=GRAM_TOLERANCE,
        holds=max_offdiag < GRAM_TOLERANCE and max_rel_err < GRAM_TOLERANCE,
    )


def _denominator(parameters, theta: np.ndarray, params: NumericParams) -> np.ndarray:
    z = np.exp(1j * theta)
    result = np.ones_like(theta)
    for a in parameters:
        if a:
            result = result * np.abs(pochhammer_inf_num(a * z, params.q, params.product_tol)) ** 2
    return result


def _pair_products(parameters, scale: float, params: NumericParams) -> float:
    a, b, c, d = parameters
    value = 1
    for x, y in ((a, b), (a, c), (a, d), (b, c), (b, d), (c, d)):
        value *= pochhammer_inf_num(x * y * scale, params.q, params.product_tol)
    return value


def _real(*parameters) -> tuple[float, ...]:
    """The `|(a e^{i theta}; q)_inf|^2` form of the integrand matches the closed forms only for real parameters.

    Raises:
        `NumericParamsError`: If a parameter has a nonzero imaginary part.
    """

    if any(complex(x).imag for x in parameters):
        raise NumericParamsError('Askey-Wilson parameters must be real')
    return tuple(float(complex(x).real) for x in parameters)


def _askey_wilson(parameters, r: float | None, params: NumericParams, tol: float) -> AskeyWilsonReport:
    scale = 1.0 if r is None else r
    shift = 1.0 if r is None else 1 / r
    a, b, c, d = parameters

    def compute(grid: int) -> float:
        return integrate_1d(
            lambda theta: np.abs(pochhammer_inf_num(np.exp(2j * theta) * shift, params.q, params.product_tol)) ** 2
            / _denominator(parameters, theta, params),
            -math.pi, math.pi, grid, params.quad_rule,
        )

    quadrature, _ = refined(compute, params.grid)
    closed = (
        4 * math.pi * pochhammer_inf_num(a * b * c * d * scale ** 2, params.q, params.product_tol)
        / (_pair_products(parameters, scale, params) * qq_inf(params))
    ).real
    rel_err = abs(float(quadrature) - closed) / abs(closed)
    return AskeyWilsonReport(
        parameters=parameters,
        r=r,
        quadrature=float(quadrature),
        closed_form=closed,
        rel_err=rel_err,
        holds=rel_err < tol,
    )


def askey_wilson_check(a, b, c, d, params: NumericParams, tol: float = 1e-7) -> AskeyWilsonReport:
    """The Askey-Wilson integral over `[-pi, pi]` against `4 pi (abcd; q)_inf / (ab, ac, ad, bc, bd, cd, q; q)_inf`.

    Raises:
        `NumericParamsError`: If some parameter has modulus 1 or more.
    """

    parameters = _real(a, b, c, d)
    if max(abs(x) for x in parameters) >= 1:
        raise NumericParamsError('Askey-Wilson parameters must lie inside the unit disc')
    return _askey_wilson(parameters, None, params, tol)


def askey_wilson_mod_check(a, b, c, d, params: NumericParams, tol: float = 1e-7) -> AskeyWilsonReport:
    """The integral with the weight `|(e^{2 i theta} / r; q)_inf|^2` against `4 pi (abcd r^2; q)_inf / (abr, ..., cdr, q; q)_inf`.

    Raises:
        `NumericParamsError`: Unless `r > max(|a|, |b|, |c|, |d|)^2`.
    """

    parameters = _real(a, b, c, d)
    if params.r <= max(abs(x) for x in parameters) ** 2:
        raise NumericParamsError(f'r={params.r} must exceed max(|a|, |b|, |c|, |d|)^2')
    if max(abs(x) for x in parameters) >= 1:
        raise NumericParamsError('Askey-Wilson parameters must lie inside the unit disc')
    return _askey_wilson(parameters, params.r, params, tol)


def positivity_check(maxdeg: int, params: NumericParams) -> bool:
    """`c_{m,n} > 0` for all `m, n <= maxdeg`."""

    return all(cmn_norm(m, n, params) > 0 for m, n in product(range(maxdeg + 1), repeat=2))
