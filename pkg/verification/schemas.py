from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class Suite(str, Enum):
    univariate = 'univariate'
    bivariate = 'bivariate'
    starproduct = 'starproduct'
    serre_tauii = 'serre-tauii'
    serre_tauij = 'serre-tauij'
    sums = 'sums'
    all = 'all'


class SuiteBounds(BaseModel):
    """Degree bounds for a suite run; `None` keeps each suite's own default."""

    max: Optional[int] = Field(None, ge=0, le=12)
    a: Optional[int] = Field(None, ge=-4, le=0)
    seed: int = 0


class Failure(BaseModel):
    case: str
    detail: str


class Report(BaseModel):
    suite: str
    cases_run: int = 0
    failures: list[Failure] = []
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.failures
