import json
import logging
from enum import Enum
from pathlib import Path

from algebra.errors import ParameterError
from algebra.polynomials import XPoly, XYPoly
from hermite.bivariate import bihermite_rec, wmn_poly
from hermite.univariate import hermite_rec, vm_poly, wm_poly
from qsp.cartan import CartanDatum
from qsp.schemas import CartanDatumConfig

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    text = 'text'
    latex = 'latex'
    json = 'json'


class PolyKind(str, Enum):
    hermite = 'hermite'
    w = 'w'
    v = 'v'


def resolve_datum(
        cartan: str | Path | CartanDatumConfig | None = None,
        a_ij: int | None = None,
        tau: str = 'fixed',
) -> CartanDatum | None:
    """Returns the datum named by a file or a config, or the rank-two datum with entry `a_ij`.

    Args:
        `cartan` (str | Path | CartanDatumConfig | None, optional): A datum file or an already parsed config.
        `a_ij` (int | None, optional): Off-diagonal entry of a rank-two datum, used without `cartan`.
        `tau` (str, optional): `'fixed'` or `'swap'` for the rank-two datum. Defaults to `'fixed'`.

    Raises:
        `CartanDatumError`: If the datum is invalid.

    Returns:
        `CartanDatum | None`: `None` if neither `cartan` nor `a_ij` is given.
    """

    if isinstance(cartan, CartanDatumConfig):
        return CartanDatum.from_config(cartan)
    if cartan is not None:
        return CartanDatum.load(cartan)
    if a_ij is not None:
        return CartanDatum.rank_two(a_ij, tau)
    return None


def resolve_pair(datum: CartanDatum, pair: tuple[str, str] | list[str] | None) -> tuple[str, str]:
    """Checks `(i, j)` against the datum; without a pair the first two indices are used.

    Raises:
        `ParameterError`: If an index is unknown, `i = j`, or the datum has a single index.
    """

    if not pair:
        if len(datum.indices) < 2:
            raise ParameterError('the datum has a single index; a pair i != j is needed')
        pair = datum.indices[:2]
    i, j = (str(x) for x in pair)
    unknown = [x for x in (i, j) if x not in datum.indices]
    if unknown:
        raise ParameterError(f'indices {unknown} are not in I={list(datum.indices)}')
    if i == j:
        raise ParameterError(f'the pair needs i != j, got ({i}, {j})')
    return i, j


def univariate_poly(kind: PolyKind, n: int, datum: CartanDatum | None = None, i: str | None = None) -> XPoly:
    """`H_n(x; q)`, or `w_n`, `v_n` at `q_i` of the index `i`, with the combined constant `c`.

    Raises:
        `ParameterError`: If `n < 0`, or `w`/`v` is asked for without a datum and an index.
    """

    if n < 0:
        raise ParameterError(f'degree must be nonnegative, got {n}')
    kind = PolyKind(kind)
    if kind is PolyKind.hermite:
        return hermite_rec(n)
    if datum is None or i is None:
        raise ParameterError(f'{kind.value}_n needs a Cartan datum and a pair')
    family = wm_poly if kind is PolyKind.w else vm_poly
    return family(n, datum.d(i))


def bivariate_poly(m: int, n: int) -> XYPoly:
    if m < 0 or n < 0:
        raise ParameterError(f'degrees must be nonnegative, got ({m}, {n})')
    return bihermite_rec(m, n)


def wmn(datum: CartanDatum, i: str, j: str, m: int, n: int) -> XYPoly:
    if m < 0 or n < 0:
        raise ParameterError(f'degrees must be nonnegative, got ({m}, {n})')
    return wmn_poly(m, n, datum.d(i), datum.a(i, j))


def render(poly: XPoly | XYPoly, fmt: OutputFormat | str = OutputFormat.text) -> str:
    """Renders a polynomial as text, LaTeX or JSON with a stable term order."""

    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.latex:
        return poly.to_latex()
    if fmt is OutputFormat.json:
        return json.dumps(poly.to_json(), sort_keys=True)
    return poly.to_text()


def poly_payload(poly: XPoly | XYPoly, fmt: OutputFormat | str = OutputFormat.text) -> dict:
    """The HTTP form of `render`: JSON stays structured, text and LaTeX are strings."""

    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.json:
        return poly.to_json()
    return {'format': fmt.value, 'value': render(poly, fmt)}
