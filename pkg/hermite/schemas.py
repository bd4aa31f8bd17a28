from enum import Enum

from pydantic import BaseModel


class Axis(str, Enum):
    x = 'x'
    y = 'y'


class ExponentVariant(str, Enum):
    half = 'half'
    integer = 'integer'
    both = 'both'
    none = 'none'


class DqRelationReport(BaseModel):
    """Which normalisation of the `D_q` relation on `H_{m,n}` holds.

    `half` is the exponent `-(m-1)/2`, `integer` is `-(m-1)`; `m` is read along `axis`.
    """

    m: int
    n: int
    axis: Axis
    half_exponent_holds: bool
    integer_exponent_holds: bool

    @property
    def variant(self) -> ExponentVariant:
        if self.half_exponent_holds and self.integer_exponent_holds:
            return ExponentVariant.both
        if self.half_exponent_holds:
            return ExponentVariant.half
        if self.integer_exponent_holds:
            return ExponentVariant.integer
        return ExponentVariant.none

    @property
    def holds(self) -> bool:
        return self.half_exponent_holds or self.integer_exponent_holds
