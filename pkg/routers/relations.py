from typing import Optional

from fastapi import APIRouter, Body, Depends

import services
from decorators import raise_422_on_domain_error
from dependencies import get_datum
from qsp.cartan import CartanDatum
from qsp.schemas import RelationTable
from qsp.serre import relation_table

router = APIRouter(prefix='/relations', tags=['relations'])


@router.post('', response_model=RelationTable)
@raise_422_on_domain_error
def get_relation(
        pair: Optional[list[str]] = Body(None),
        datum: CartanDatum = Depends(get_datum)
) -> RelationTable:
    """Returns the deformed Serre relation of a pair with `tau(i) = i` in the `B` generators.

    Args:
        `pair` (Optional[list[str]], optional): The pair `(i, j)`. Defaults to the first two indices.
        `datum` (CartanDatum, optional): The Cartan datum from the request body.

    Returns:
        `RelationTable`: The relation, and whether it matches its closed form.
    """

    i, j = services.resolve_pair(datum, pair)
    return relation_table(datum, i, j)
