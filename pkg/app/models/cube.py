from dataclasses import dataclass

from app.exceptions import DigitOutOfRangeError, DimensionMismatchError, InvalidFaceError
from app.models.lattice import Point, Prebasis, point


@dataclass(frozen=True)
class Face:
    """
    Face of the cube [-1, 0]^d anchored at corner p and spanning the axes
    where u is -1. Equivalent to the pair (v1, v2) = (p, p + u).
    """
    anchor: Point
    direction: Point

    def __post_init__(self):
        anchor = point(self.anchor)
        direction = point(self.direction)
        if len(anchor) != len(direction):
            raise DimensionMismatchError("Face anchor and direction differ in dimension")
        for p, u in zip(anchor, direction):
            if p not in (-1, 0) or u not in (-1, 0):
                raise InvalidFaceError(f"Face entries must be -1 or 0: {anchor}, {direction}")
            if p == u == -1:
                raise InvalidFaceError(f"Face anchor {anchor} and direction {direction} overlap")
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "direction", direction)

    @classmethod
    def from_pair(cls, v1: Point, v2: Point) -> "Face":
        if len(v1) != len(v2):
            raise DimensionMismatchError("Face pair differs in dimension")
        return cls(anchor=tuple(v1), direction=tuple(b - a for a, b in zip(v1, v2)))

    @classmethod
    def full(cls, d: int) -> "Face":
        return cls(anchor=(0,) * d, direction=(-1,) * d)

    @property
    def pair(self) -> tuple[Point, Point]:
        return self.anchor, tuple(p + u for p, u in zip(self.anchor, self.direction))

    @property
    def dim(self) -> int:
        return sum(1 for u in self.direction if u == -1)

    @property
    def spanned_axes(self) -> tuple[int, ...]:
        return tuple(i for i, u in enumerate(self.direction) if u == -1)


@dataclass(frozen=True)
class MulCube:
    """Base-N digit viewed as a d-cube with a label on every face."""
    prebasis: Prebasis
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.prebasis.base:
            raise DigitOutOfRangeError(
                f"Cube value {self.value} out of range for base {self.prebasis.base}"
            )

    @property
    def dim(self) -> int:
        return self.prebasis.dim


@dataclass(frozen=True)
class TileSet:
    prebasis: Prebasis
    cubes: tuple[MulCube, ...]

    def __len__(self) -> int:
        return len(self.cubes)
