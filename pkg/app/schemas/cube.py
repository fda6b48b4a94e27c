from typing import List

from pydantic import BaseModel


class FaceLabelSchema(BaseModel):
    anchor: List[int]
    direction: List[int]
    label: int


class TileSchema(BaseModel):
    value: int
    bot: List[int]
    top: List[int]
    faces: List[FaceLabelSchema]


class TileSetResponse(BaseModel):
    """Every cube of T_n with all of its face labels."""
    prebasis: List[int]
    base: int
    tiles: List[TileSchema]
