from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from app.exceptions import (
    BaseMismatchError,
    DigitOutOfRangeError,
    DimensionMismatchError,
    InvalidPathError,
    MulticubeError,
)
from app.models.digits import DigitConfig
from app.models.lattice import Point, Prebasis, point


@dataclass(frozen=True)
class Tessellation:
    """The unique valid tiling over `prebasis` whose main diagonal is `diagonal`."""
    prebasis: Prebasis
    diagonal: DigitConfig

    def __post_init__(self):
        if self.diagonal.base != self.prebasis.base:
            raise BaseMismatchError(
                f"Diagonal base {self.diagonal.base} != prebasis product {self.prebasis.base}"
            )

    @property
    def dim(self) -> int:
        return self.prebasis.dim


@dataclass
class Patch:
    """Finite partial tiling; positions may leave holes."""
    prebasis: Prebasis
    cells: dict[Point, int] = field(default_factory=dict)

    def __post_init__(self):
        cells = {}
        for pos, value in self.cells.items():
            pos = point(pos)
            if len(pos) != self.prebasis.dim:
                raise DimensionMismatchError(f"Cell {pos} in a {self.prebasis.dim}-dimensional patch")
            if not 0 <= value < self.prebasis.base:
                raise DigitOutOfRangeError(f"Cell value {value} out of range at {pos}")
            cells[pos] = int(value)
        self.cells = cells

    @property
    def dim(self) -> int:
        return self.prebasis.dim

    def bounds(self) -> Optional[tuple[Point, Point]]:
        if not self.cells:
            return None
        d = self.dim
        lo = tuple(min(pos[i] for pos in self.cells) for i in range(d))
        hi = tuple(max(pos[i] for pos in self.cells) for i in range(d))
        return lo, hi


@dataclass(frozen=True)
class LatticePath:
    points: tuple[Point, ...]

    def __post_init__(self):
        points = tuple(point(p) for p in self.points)
        if not points:
            raise InvalidPathError("A path needs at least one point")
        d = len(points[0])
        for a, b in zip(points, points[1:]):
            if len(b) != d:
                raise DimensionMismatchError("Path mixes dimensions")
            if sum(abs(x - y) for x, y in zip(a, b)) != 1:
                raise InvalidPathError(f"Consecutive points {a} and {b} are not lattice neighbours")
        object.__setattr__(self, "points", points)

    @property
    def start(self) -> Point:
        return self.points[0]

    @property
    def end(self) -> Point:
        return self.points[-1]

    @property
    def is_closed(self) -> bool:
        return self.start == self.end

    def __len__(self) -> int:
        return len(self.points) - 1


@dataclass(frozen=True)
class ExtendedValue:
    """A nonnegative rational or +infinity."""
    value: Optional[Fraction] = None

    @classmethod
    def infinite(cls) -> "ExtendedValue":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


class RealParts(NamedTuple):
    fractional: Fraction
    integral: Fraction
    real: Fraction


@dataclass(frozen=True)
class MacroMatrix:
    """d x d' natural-number matrix, stored row-major."""
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in row) for row in self.entries)
        if not rows or not rows[0]:
            raise DimensionMismatchError("Matrix must have at least one row and one column")
        if any(len(row) != len(rows[0]) for row in rows):
            raise DimensionMismatchError("Matrix rows differ in length")
        if any(a < 0 for row in rows for a in row):
            raise MulticubeError("Matrix entries must be natural numbers")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, d: int) -> "MacroMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @classmethod
    def diagonal(cls, values: tuple[int, ...]) -> "MacroMatrix":
        d = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(d)) for i in range(d)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_invertible_class(self) -> bool:
        return all(any(a > 0 for a in row) for row in self.entries)

    def column(self, j: int) -> Point:
        return tuple(row[j] for row in self.entries)

    def apply(self, v: Point) -> Point:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"Matrix with {self.cols} columns applied to {v}")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.entries)

    def __matmul__(self, other: "MacroMatrix") -> "MacroMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("Matrix product dimensions disagree")
        return MacroMatrix(tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                  for j in range(other.cols))
            for i in range(self.rows)
        ))
