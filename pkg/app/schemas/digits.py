from typing import List, Literal

from pydantic import BaseModel, field_validator, model_validator

from app.models.digits import DigitConfig


class CoreSchema(BaseModel):
    start: int = 0
    digits: List[int] = []


class TailSchema(BaseModel):
    kind: Literal["zeros", "periodic"] = "zeros"
    word: List[int] = []

    @model_validator(mode="after")
    def validate_word(self):
        """Periodic tails need a word, zero tails must not carry one."""
        if self.kind == "periodic" and not self.word:
            raise ValueError("A periodic tail needs a nonempty word")
        if self.kind == "zeros" and self.word:
            raise ValueError("A zero tail has no word")
        return self


class DigitConfigSchema(BaseModel):
    """Wire format of a digit configuration."""
    base: int
    core: CoreSchema = CoreSchema()
    tail: TailSchema = TailSchema()

    @field_validator("base")
    @classmethod
    def validate_base(cls, v):
        if v < 1:
            raise ValueError("Base must be positive")
        return v

    @model_validator(mode="after")
    def validate_digits(self):
        for d in self.core.digits + self.tail.word:
            if not 0 <= d < self.base:
                raise ValueError(f"Digit {d} out of range for base {self.base}")
        return self

    def to_model(self) -> DigitConfig:
        return DigitConfig(
            base=self.base,
            start=self.core.start,
            digits=tuple(self.core.digits),
            tail=tuple(self.tail.word),
        )

    @classmethod
    def from_model(cls, x: DigitConfig) -> "DigitConfigSchema":
        return cls(
            base=x.base,
            core=CoreSchema(start=x.start, digits=list(x.digits)),
            tail=TailSchema(kind="periodic" if x.tail else "zeros", word=list(x.tail)),
        )
