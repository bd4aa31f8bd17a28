"""Infinite q-products, the orthogonality weight and numeric specialization of exact polynomials."""
from __future__ import annotations

import math

import numpy as np

from algebra.errors import NumericParamsError
from algebra.polynomials import XYPoly

from .schemas import NumericParams

MAX_FACTORS = 100_000


def _factor_count(scale: float, q: float, tol: float) -> int:
    """Smallest `N` with `scale * q^N < tol`."""

    if scale < tol:
        return 0
    count = math.ceil(math.log(tol / scale) / math.log(q)) + 1
    if count > MAX_FACTORS:
        raise NumericParamsError(f'(a; q)_inf needs more than {MAX_FACTORS} factors at q={q}')
    return count


def pochhammer_inf_num(a, q: float, product_tol: float = 1e-16):
    """`(a; q)_inf` truncated once the next factor is within `product_tol` of 1.

    Args:
        `a` (complex | np.ndarray): The argument, scalar or array.
        `q` (float): The base.
        `product_tol` (float, optional): Truncation tolerance. Defaults to 1e-16.

    Raises:
        `NumericParamsError`: If `|q| >= 1`.

    Returns:
        `complex | np.ndarray`: The product, with the shape of `a`.
    """

    if abs(q) >= 1:
        raise NumericParamsError(f'(a; q)_inf needs |q| < 1, got q={q}')
    a = np.asarray(a, dtype=complex)
    count = _factor_count(float(np.max(np.abs(a), initial=0.0)), abs(q), product_tol)
    powers = q ** np.arange(count)
    result = np.prod(1 - a[..., None] * powers, axis=-1)
    return result if result.ndim else complex(result)


def qq_inf(params: NumericParams) -> float:
    """`(q; q)_inf`."""

    return pochhammer_inf_num(params.q, params.q, params.product_tol).real


def weight_eval(theta, params: NumericParams):
    """`|(e^{2 i theta} / r; q)_inf|^2` on a scalar or an array of angles."""

    values = pochhammer_inf_num(np.exp(2j * np.asarray(theta)) / params.r, params.q, params.product_tol)
    return np.abs(values) ** 2


def weight_mean(params: NumericParams) -> float:
    """The mean of the weight over a period, `sum_n q^{n(n-1)} r^{-2n} / (q; q)_n^2`."""

    q, r = params.q, params.r
    total, n, qq_n = 0.0, 0, 1.0
    while True:
        term = q ** (n * (n - 1)) * r ** (-2 * n) / qq_n ** 2
        total += term
        if term < params.product_tol * total:
            return total
        n += 1
        qq_n *= 1 - q ** n


def specialize(poly: XYPoly, params: NumericParams) -> np.ndarray:
    """Coefficient matrix `c[i, j]` of `x^i y^j` at `v = q^{1/2}` and the numeric `r`.

    The matrix is laid out for `numpy.polynomial.polynomial.polyval2d`.
    """

    size = max(poly.degree, 0) + 1
    coeffs = np.zeros((size, size))
    v = math.sqrt(params.q)
    for (ex, ey), coeff in poly.terms.items():
        coeffs[ex, ey] = complex(coeff.evaluate(v, {'r': params.r})).real
    return coeffs
