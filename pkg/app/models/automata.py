from dataclasses import dataclass
from fractions import Fraction

from app.exceptions import InvalidBaseError, MulticubeError


@dataclass(frozen=True)
class MulRule:
    """Multiplication by p on base-N digit sequences, with q = N / p."""
    p: int
    base: int

    def __post_init__(self):
        if self.p < 1 or self.base < 1:
            raise InvalidBaseError(f"Rule needs positive p and N, got p={self.p}, N={self.base}")
        if self.base % self.p:
            raise InvalidBaseError(f"{self.p} does not divide {self.base}")

    @property
    def q(self) -> int:
        return self.base // self.p

    def __str__(self) -> str:
        return f"{self.p}@{self.base}"


@dataclass(frozen=True)
class RationalMultiplier:
    alpha: Fraction
    base: int

    def __post_init__(self):
        alpha = Fraction(self.alpha)
        if alpha <= 0:
            raise MulticubeError(f"Multiplier must be positive, got {alpha}")
        if self.base < 1:
            raise InvalidBaseError(f"Base must be positive, got {self.base}")
        object.__setattr__(self, "alpha", alpha)

    def __str__(self) -> str:
        return f"{self.alpha}@{self.base}"


@dataclass(frozen=True)
class TraceQuery:
    multiplier: RationalMultiplier
    width: int
    horizon: int

    def __post_init__(self):
        if self.width < 1:
            raise MulticubeError(f"Trace width must be at least 1, got {self.width}")
        if self.horizon < 0:
            raise MulticubeError(f"Trace horizon must be nonnegative, got {self.horizon}")
