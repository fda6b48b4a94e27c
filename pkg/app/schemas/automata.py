from typing import List, Literal

from pydantic import BaseModel, field_validator

from app.schemas.digits import DigitConfigSchema


class RunRequest(BaseModel):
    rule: str
    config: DigitConfigSchema
    steps: int

    @field_validator("steps")
    @classmethod
    def validate_steps(cls, v):
        if v < 0:
            raise ValueError("Steps must be nonnegative")
        return v


class RunResponse(BaseModel):
    rule: str
    rows: List[DigitConfigSchema]
    values: List[str]


class ConvertRequest(BaseModel):
    config: DigitConfigSchema
    target: int
    mode: Literal["conj", "fact"] = "conj"


class TraceRequest(BaseModel):
    rule: str
    width: int = 1
    horizon: int = 1

    @field_validator("width")
    @classmethod
    def validate_width(cls, v):
        if v < 1:
            raise ValueError("Width must be at least 1")
        return v

    @field_validator("horizon")
    @classmethod
    def validate_horizon(cls, v):
        if v < 0:
            raise ValueError("Horizon must be nonnegative")
        return v


class TraceResponse(BaseModel):
    rule: str
    width: int
    horizon: int
    count: int
    words: List[List[List[int]]]
