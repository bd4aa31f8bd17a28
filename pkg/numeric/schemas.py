from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, validator

from algebra.errors import NumericParamsError


class QuadRule(str, Enum):
    gauss_legendre = 'gauss-legendre'
    simpson = 'simpson'


class NumericParams(BaseModel):
    """Numeric specialization of `(q, r)` together with the quadrature settings."""

    q: float = 0.5
    r: float = 2.0
    product_tol: float = Field(1e-16, gt=0)
    grid: int = 256
    quad_rule: QuadRule = QuadRule.gauss_legendre

    @validator('q')
    def q_in_unit_interval(cls, value: float) -> float:
        if not 0 < value < 1:
            raise NumericParamsError(f'q must lie in (0, 1), got {value}')
        return value

    @validator('r')
    def r_above_one(cls, value: float) -> float:
        if value <= 1:
            raise NumericParamsError(f'r must exceed 1, got {value}')
        return value

    @validator('grid')
    def grid_large_enough(cls, value: int) -> int:
        if value < 64:
            raise NumericParamsError(f'grid must be at least 64 nodes per axis, got {value}')
        return value


class GramRequest(NumericParams):
    maxdeg: int = Field(2, ge=0, le=4)


class GramReport(BaseModel):
    """Quadrature of `H_{m,n}(u, v) H_{m',n'}(v, u)` against the weight over an index box.

    `max_offdiag` is relative to the largest diagonal entry, `max_rel_err`
    compares the diagonal with `c_{m,n}`. `holds` is set when both are below
    `tolerance`; `converged` when doubling the grid moved no entry by more than
    `REFINEMENT_TOLERANCE` relative.
    """

    params: NumericParams
    indices: list[tuple[int, int]]
    entries: list[list[float]]
    diag: list[float]
    predicted: list[float]
    max_offdiag: float
    max_rel_err: float
    refinement_change: float
    converged: bool
    tolerance: float
    holds: bool


class AskeyWilsonReport(BaseModel):
    parameters: tuple[float, float, float, float]
    r: Optional[float] = None
    quadrature: float
    closed_form: float
    rel_err: float
    holds: bool
