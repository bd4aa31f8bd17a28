from functools import wraps

from fastapi import HTTPException, status
from pydantic import ValidationError

from algebra.errors import AlgebraError
from verification.schemas import Suite


def raise_422_on_domain_error(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (AlgebraError, ValidationError) as error:
            raise HTTPException(
                status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
                detail=str(error)
            )

    return wrapper


def raise_400_if_unknown_suite(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        if (suite := kwargs.get('suite')) not in {s.value for s in Suite}:
            raise HTTPException(
                status_code=status.HTTP_400_BAD_REQUEST,
                detail=f'Unknown suite {suite}.'
            )
        return func(*args, **kwargs)

    return wrapper
