from fastapi import APIRouter

from decorators import raise_422_on_domain_error
from numeric.orthogonality import gram_matrix
from numeric.schemas import GramReport, GramRequest, NumericParams

router = APIRouter(prefix='/numeric', tags=['numeric'])


@router.post('/gram', response_model=GramReport)
@raise_422_on_domain_error
def get_gram(request: GramRequest) -> GramReport:
    """Integrates the Gram matrix of the bivariate polynomials up to `maxdeg`."""

    params = NumericParams(**request.dict(exclude={'maxdeg'}))
    return gram_matrix(request.maxdeg, params)
