from typing import Optional

from pydantic import BaseModel, Field


class CartanDatumConfig(BaseModel):
    """Shape of a Cartan datum file; the invariants are checked by `qsp.cartan.CartanDatum`."""

    I: list[str] = Field(..., min_items=1)
    a: list[list[int]]
    d: list[int]
    tau: Optional[dict[str, str]] = None


class NCTerm(BaseModel):
    coeff: list
    torus: dict[str, int] = {}
    word: list[str] = []


class RelationTable(BaseModel):
    """Right side of a deformed Serre relation, written in the `B` (star) basis."""

    pair: tuple[str, str]
    a_ij: int
    text: str
    terms: list[NCTerm]
    matches_closed_form: bool
