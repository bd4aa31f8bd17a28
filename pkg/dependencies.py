from fastapi import Body, HTTPException, status

from algebra.errors import CartanDatumError
from qsp.cartan import CartanDatum
from qsp.schemas import CartanDatumConfig
from services import resolve_datum


def get_datum(cartan: CartanDatumConfig = Body(..., embed=True)) -> CartanDatum:
    """Returns the `CartanDatum` described in the request body.

    Args:
        `cartan` (CartanDatumConfig): The datum as sent by the client.

    Raises:
        `HTTPException`: If the datum violates one of its invariants; every violation is listed.

    Returns:
        `CartanDatum`: A validated datum.
    """

    try:
        return resolve_datum(cartan)
    except CartanDatumError as error:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=error.violations
        )
