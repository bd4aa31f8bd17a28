from fastapi import APIRouter

from decorators import raise_400_if_unknown_suite, raise_422_on_domain_error
from verification.schemas import Report, SuiteBounds
from verification.suites import run_suite

router = APIRouter(prefix='/verify', tags=['verification'])


@router.post('/{suite}', response_model=Report)
@raise_400_if_unknown_suite
@raise_422_on_domain_error
def verify(suite: str, bounds: SuiteBounds, timings: bool = False) -> Report:
    """Runs a verification suite.

    Args:
        `suite` (str): One of `univariate`, `bivariate`, `starproduct`, `serre-tauii`, `serre-tauij`, `sums`, `all`.
        `bounds` (SuiteBounds): Degree bounds.
        `timings` (bool, optional): Include the wall time. Defaults to False.

    Returns:
        `Report`: Cases run and failures.
    """

    return run_suite(suite, bounds, timings=timings)
