from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, field_validator, model_validator

from app.models.lattice import Prebasis
from app.models.tessellation import LatticePath, MacroMatrix, Patch
from app.schemas.digits import DigitConfigSchema


def _positive_entries(v: List[int]) -> List[int]:
    if not v:
        raise ValueError("Prebasis must not be empty")
    if any(x < 1 for x in v):
        raise ValueError("Prebasis entries must be positive")
    return v


class CellSchema(BaseModel):
    pos: List[int]
    value: int


class PatchSchema(BaseModel):
    """Sparse patch: explicit positions, holes are simply absent."""
    prebasis: List[int]
    cells: List[CellSchema] = []

    @field_validator("prebasis")
    @classmethod
    def validate_prebasis(cls, v):
        return _positive_entries(v)

    @model_validator(mode="after")
    def validate_cells(self):
        """Ensure every cell fits the prebasis."""
        d = len(self.prebasis)
        base = Prebasis(tuple(self.prebasis)).base
        seen = set()
        for cell in self.cells:
            if len(cell.pos) != d:
                raise ValueError(f"Cell {cell.pos} does not have dimension {d}")
            if not 0 <= cell.value < base:
                raise ValueError(f"Cell value {cell.value} out of range for base {base}")
            if tuple(cell.pos) in seen:
                raise ValueError(f"Duplicate cell position {cell.pos}")
            seen.add(tuple(cell.pos))
        return self

    def to_model(self) -> Patch:
        return Patch(
            prebasis=Prebasis(tuple(self.prebasis)),
            cells={tuple(c.pos): c.value for c in self.cells},
        )

    @classmethod
    def from_model(cls, patch: Patch) -> "PatchSchema":
        return cls(
            prebasis=list(patch.prebasis.n),
            cells=[CellSchema(pos=list(z), value=v) for z, v in sorted(patch.cells.items())],
        )


class PathSchema(BaseModel):
    points: List[List[int]]

    @field_validator("points")
    @classmethod
    def validate_points(cls, v):
        if not v:
            raise ValueError("A path needs at least one point")
        return v

    def to_model(self) -> LatticePath:
        return LatticePath(tuple(tuple(p) for p in self.points))

    @classmethod
    def from_model(cls, path: LatticePath) -> "PathSchema":
        return cls(points=[list(p) for p in path.points])


class MatrixSchema(BaseModel):
    """Row-major natural-number matrix with explicit shape."""
    rows: int
    cols: int
    entries: List[List[int]]

    @model_validator(mode="after")
    def validate_shape(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"Entries do not form a {self.rows}x{self.cols} matrix")
        if any(a < 0 for r in self.entries for a in r):
            raise ValueError("Matrix entries must be natural numbers")
        return self

    def to_model(self) -> MacroMatrix:
        return MacroMatrix(tuple(tuple(r) for r in self.entries))

    @classmethod
    def from_model(cls, A: MacroMatrix) -> "MatrixSchema":
        return cls(rows=A.rows, cols=A.cols, entries=[list(r) for r in A.entries])


class TessellationSource(BaseModel):
    """A tessellation given by a rational value or by its diagonal."""
    prebasis: List[int]
    rational: Optional[str] = None
    diagonal: Optional[DigitConfigSchema] = None

    @field_validator("prebasis")
    @classmethod
    def validate_prebasis(cls, v):
        return _positive_entries(v)

    @field_validator("rational")
    @classmethod
    def validate_rational(cls, v):
        """Ensure the rational parses and is nonnegative."""
        if v is None:
            return v
        try:
            value = Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Malformed rational '{v}'")
        if value < 0:
            raise ValueError("Rational must be nonnegative")
        return v

    @model_validator(mode="after")
    def validate_source(self):
        if (self.rational is None) == (self.diagonal is None):
            raise ValueError("Give exactly one of rational or diagonal")
        return self


class PatchRequest(TessellationSource):
    lo: List[int]
    hi: List[int]


class MacroRequest(PatchRequest):
    matrix: MatrixSchema


class LabelRequest(TessellationSource):
    start: List[int]
    end: List[int]


class RealPartsRequest(TessellationSource):
    point: List[int]
    direction: List[int]


class RealPartsResponse(BaseModel):
    fractional: str
    integral: str
    real: str


class LabelResponse(BaseModel):
    label: str


class IntegrateRequest(BaseModel):
    patch: PatchSchema
    path: PathSchema


class IntegralResponse(BaseModel):
    value: str
    closed: bool


class ViolationSchema(BaseModel):
    pos: List[int]
    axis: int


class ValidityResponse(BaseModel):
    valid: bool
    violations: List[ViolationSchema] = []

    class Config:
        from_attributes = True
