from itertools import product
from typing import Sequence

from app.exceptions import DimensionMismatchError, InvalidFaceError
from app.models.cube import Face, MulCube, TileSet
from app.models.lattice import Point, Prebasis, const, unit
from app.services.mixed_base import base_n_digits, embed


def cube(n: Prebasis, value: int) -> MulCube:
    return MulCube(prebasis=n, value=value)


def all_faces(d: int) -> list[Face]:
    """All 3^d faces; per axis a face is at the top, at the bottom or spans it."""
    faces = []
    for states in product(((0, 0), (-1, 0), (0, -1)), repeat=d):
        faces.append(Face(anchor=tuple(s[0] for s in states), direction=tuple(s[1] for s in states)))
    return faces


def cube_label(c: MulCube, s: Face) -> int:
    if len(s.anchor) != c.dim:
        raise DimensionMismatchError(f"Face of dimension {len(s.anchor)} on a {c.dim}-cube")
    v1, v2 = s.pair
    return base_n_digits(c.prebasis, c.value, (v1, v2))[1]


def pair_label(c: MulCube, v1: Point, v2: Point) -> int:
    return cube_label(c, Face.from_pair(v1, v2))


def face_labels(c: MulCube) -> dict[Face, int]:
    return {s: cube_label(c, s) for s in all_faces(c.dim)}


def _check_axis(c: MulCube, axis: int) -> None:
    if not 0 <= axis < c.dim:
        raise DimensionMismatchError(f"Axis {axis} outside dimension {c.dim}")


def bot(c: MulCube, axis: int) -> int:
    _check_axis(c, axis)
    return c.value // c.prebasis[axis]


def top(c: MulCube, axis: int) -> int:
    _check_axis(c, axis)
    return c.value % (c.prebasis.base // c.prebasis[axis])


def bottom_face(d: int, axis: int) -> Face:
    return Face.from_pair(tuple(-x for x in unit(d, axis)), const(d, -1))


def top_face(d: int, axis: int) -> Face:
    return Face.from_pair(const(d, 0), tuple(x - 1 for x in unit(d, axis)))


def val(c: MulCube) -> int:
    return c.value


def matches(c1: MulCube, c2: MulCube, axis: int) -> bool:
    """True iff c2 may sit at +e_axis from c1."""
    if c1.prebasis != c2.prebasis:
        raise DimensionMismatchError(f"Prebasis mismatch: {c1.prebasis} vs {c2.prebasis}")
    return top(c1, axis) == bot(c2, axis)


def sub_prebasis(n: Prebasis, iota: Sequence[int]) -> Prebasis:
    return Prebasis(tuple(n[j] for j in iota))


def embed_face(s: Face, iota: Sequence[int], sub: Face) -> Face:
    """Image of a face of the d'-cube on the face s of the d-cube."""
    return Face(
        anchor=embed(s.anchor, iota, sub.anchor),
        direction=embed(const(len(s.anchor), 0), iota, sub.direction),
    )


def face_restrict(c: MulCube, s: Face, iota: Sequence[int] | None = None) -> MulCube:
    """The lower-dimensional multiplication cube carried by the face s of c."""
    spanned = s.spanned_axes
    iota = tuple(spanned if iota is None else iota)
    if sorted(iota) != list(spanned) or len(set(iota)) != len(iota):
        raise InvalidFaceError(f"Axis map {iota} does not cover the spanned axes {spanned}")
    if not iota:
        raise InvalidFaceError("Cannot restrict to a vertex")
    return cube(sub_prebasis(c.prebasis, iota), cube_label(c, s))


def tileset(n: Prebasis) -> TileSet:
    return TileSet(prebasis=n, cubes=tuple(cube(n, a) for a in range(n.base)))
