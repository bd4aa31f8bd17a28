from typing import Optional

from fastapi import APIRouter, Body, Depends, Query

import services
from decorators import raise_422_on_domain_error
from dependencies import get_datum
from qsp.cartan import CartanDatum

router = APIRouter(prefix='/polynomials', tags=['polynomials'])


@router.get('/hermite/{n}')
@raise_422_on_domain_error
def get_hermite(n: int, fmt: services.OutputFormat = Query(services.OutputFormat.text, alias='format')) -> dict:
    """Returns `H_n(x; q)`.

    Args:
        `n` (int): Degree.
        `fmt` (services.OutputFormat, optional): `text`, `latex` or `json`. Defaults to `text`.

    Returns:
        `dict`: The rendered polynomial.
    """

    return services.poly_payload(services.univariate_poly(services.PolyKind.hermite, n), fmt)


@router.get('/bihermite/{m}/{n}')
@raise_422_on_domain_error
def get_bihermite(
        m: int,
        n: int,
        fmt: services.OutputFormat = Query(services.OutputFormat.text, alias='format')
) -> dict:
    """Returns `H_{m,n}(x, y; q, r)`."""

    return services.poly_payload(services.bivariate_poly(m, n), fmt)


@router.post('/w')
@raise_422_on_domain_error
def get_w(
        degree: int = Body(...),
        kind: services.PolyKind = Body(services.PolyKind.w),
        pair: Optional[list[str]] = Body(None),
        fmt: services.OutputFormat = Body(services.OutputFormat.text, alias='format'),
        datum: CartanDatum = Depends(get_datum)
) -> dict:
    """Returns `w_n` or `v_n` for the index `i` of `pair`, written with the combined constant `c`.

    Args:
        `degree` (int): Degree.
        `kind` (services.PolyKind, optional): `w` or `v`. Defaults to `w`.
        `pair` (Optional[list[str]], optional): The pair `(i, j)`. Defaults to the first two indices.
        `fmt` (services.OutputFormat, optional): Output format. Defaults to `text`.
        `datum` (CartanDatum, optional): The Cartan datum from the request body.

    Returns:
        `dict`: The rendered polynomial.
    """

    i, _ = services.resolve_pair(datum, pair)
    return services.poly_payload(services.univariate_poly(kind, degree, datum, i), fmt)


@router.post('/wmn')
@raise_422_on_domain_error
def get_wmn(
        m: int = Body(...),
        n: int = Body(...),
        pair: Optional[list[str]] = Body(None),
        fmt: services.OutputFormat = Body(services.OutputFormat.text, alias='format'),
        datum: CartanDatum = Depends(get_datum)
) -> dict:
    """Returns `w_{m,n}(x, y)` of a pair with `tau(i) = i`."""

    i, j = services.resolve_pair(datum, pair)
    return services.poly_payload(services.wmn(datum, i, j, m, n), fmt)
