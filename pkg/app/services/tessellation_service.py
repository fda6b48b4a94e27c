import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor, prod
from typing import Callable, Optional, Union

from app.config import settings
from app.exceptions import (
    EnumerationBoundError,
    InadmissibleDirectionError,
    InconsistentLabelError,
    OpenPathError,
    UnlabelableEdgeError,
)
from app.models.automata import MulRule
from app.models.cube import Face, MulCube
from app.models.digits import DigitConfig
from app.models.lattice import (
    Point,
    Prebasis,
    add,
    check_same_dim,
    const,
    leq,
    neg,
    pointwise_max,
    scale,
    sub,
    unit,
)
from app.models.tessellation import ExtendedValue, LatticePath, Patch, RealParts, Tessellation
from app.services.automata_service import cached_step
from app.services.cube_service import cube, cube_label, matches
from app.services.exact_arith import config_of_real, integral_value, real_of_config
from app.services.mixed_base import alpha, weight

logger = logging.getLogger(__name__)

CubeSource = Union[Tessellation, Patch]


def tessellation(n: Prebasis, diagonal: DigitConfig) -> Tessellation:
    return Tessellation(prebasis=n, diagonal=diagonal)


def from_rational(n: Prebasis, xi: Fraction) -> Tessellation:
    """Tessellation whose diagonal is the canonical expansion of xi."""
    if n.base == 1:
        return Tessellation(prebasis=n, diagonal=DigitConfig.zero(1))
    return Tessellation(prebasis=n, diagonal=config_of_real(Fraction(xi), n.base))


def _multiplied_diagonal(f: Tessellation, z: Point) -> DigitConfig:
    """Mul_{alpha(z,n),N}(diagonal), one prime-axis CA step at a time."""
    check_same_dim(f.prebasis.n, z)
    x = f.diagonal
    base = f.prebasis.base
    for axis, k in enumerate(z):
        nj = f.prebasis[axis]
        if k == 0 or nj == 1:
            continue
        rule = MulRule(nj, base)
        for _ in range(abs(k)):
            x = cached_step(rule, x, k > 0)
    return x


def cube_at(f: Tessellation, z: Point) -> MulCube:
    return cube(f.prebasis, _multiplied_diagonal(f, z).digit_at(0))


def oracle_cube_value(f: Tessellation, z: Point) -> int:
    """floor(alpha(z, n) * xi) mod N; agrees with cube_at on canonical diagonals."""
    xi = real_of_config(f.diagonal)
    return floor(alpha(z, f.prebasis) * xi) % f.prebasis.base


def box_points(lo: Point, hi: Point):
    check_same_dim(lo, hi)
    return product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def extract_patch(f: Tessellation, lo: Point, hi: Point) -> Patch:
    check_same_dim(f.prebasis.n, lo)
    size = prod(max(0, b - a + 1) for a, b in zip(lo, hi))
    if size > settings.PATCH_MAX_CELLS:
        raise EnumerationBoundError(
            f"Box holds {size} cells, limit is {settings.PATCH_MAX_CELLS}", size
        )
    cells = {z: cube_at(f, z).value for z in box_points(lo, hi)}
    logger.info(f"Extracted {len(cells)} cells over prebasis ({f.prebasis})")
    return Patch(prebasis=f.prebasis, cells=cells)


@dataclass
class ValidityReport:
    valid: bool
    violations: list[tuple[Point, int]] = field(default_factory=list)


def is_valid_patch(p: Patch) -> ValidityReport:
    """Check every adjacent present pair; holes are skipped."""
    violations = []
    for z in sorted(p.cells):
        c1 = cube(p.prebasis, p.cells[z])
        for axis in range(p.dim):
            neighbour = add(z, unit(p.dim, axis))
            if neighbour in p.cells and not matches(c1, cube(p.prebasis, p.cells[neighbour]), axis):
                violations.append((z, axis))
    return ValidityReport(valid=not violations, violations=violations)


def _lookup(source: CubeSource) -> Callable[[Point], Optional[MulCube]]:
    if isinstance(source, Tessellation):
        return lambda z: cube_at(source, z)
    return lambda z: cube(source.prebasis, source.cells[z]) if z in source.cells else None


def edge_label(source: CubeSource, z: Point, axis: int) -> int:
    """Label of the undirected edge {z - e_axis, z}."""
    d = source.prebasis.dim
    check_same_dim(source.prebasis.n, z)
    down = neg(unit(d, axis))
    if isinstance(source, Tessellation):
        return cube_label(cube_at(source, z), Face(anchor=const(d, 0), direction=down))

    lookup = _lookup(source)
    witnesses = []
    other_axes = [i for i in range(d) if i != axis]
    for choice in product((0, -1), repeat=len(other_axes)):
        anchor = [0] * d
        for i, x in zip(other_axes, choice):
            anchor[i] = x
        anchor = tuple(anchor)
        position = sub(z, anchor)
        c = lookup(position)
        if c is not None:
            witnesses.append((position, cube_label(c, Face(anchor=anchor, direction=down))))
    if not witnesses:
        raise UnlabelableEdgeError(f"No cube is incident to the edge at {z} along axis {axis}")
    labels = {label for _, label in witnesses}
    if len(labels) > 1:
        logger.warning(f"Inconsistent labels on edge at {z} along axis {axis}: {witnesses}")
        raise InconsistentLabelError(
            f"Incident cubes disagree on the edge at {z} along axis {axis}: {witnesses}",
            witnesses,
        )
    return labels.pop()


def edge_term(source: CubeSource, a: Point, b: Point) -> Fraction:
    """sign(b - a) * wgt(max(a, b)) * label of the edge."""
    delta = sub(b, a)
    axis = next(i for i, x in enumerate(delta) if x)
    top_point = pointwise_max(a, b)
    label = edge_label(source, top_point, axis)
    return delta[axis] * weight(source.prebasis, top_point) * label


def path_integral(source: CubeSource, path: LatticePath) -> Fraction:
    """Exact; weights of points with positive coordinates are fractions."""
    total = Fraction(0)
    for a, b in zip(path.points, path.points[1:]):
        total += edge_term(source, a, b)
    return total


def monotone_path(p: Point, q: Point) -> LatticePath:
    """Axis-by-axis path from p to q."""
    check_same_dim(p, q)
    points = [tuple(p)]
    current = list(p)
    for axis in range(len(p)):
        direction = 1 if q[axis] > current[axis] else -1
        while current[axis] != q[axis]:
            current[axis] += direction
            points.append(tuple(current))
    return LatticePath(tuple(points))


def abelianize(path: LatticePath) -> LatticePath:
    return monotone_path(path.start, path.end)


def reverse_path(path: LatticePath) -> LatticePath:
    return LatticePath(tuple(reversed(path.points)))


def concat_paths(first: LatticePath, second: LatticePath) -> LatticePath:
    if first.end != second.start:
        raise OpenPathError(f"Cannot join a path ending at {first.end} to one starting at {second.start}")
    return LatticePath(first.points + second.points[1:])


def translate_path(path: LatticePath, v: Point) -> LatticePath:
    return LatticePath(tuple(add(p, v) for p in path.points))


def label(f: CubeSource, p: Point, q: Point) -> Fraction:
    """lbl(f, (p, q)) = (p, q)f / wgt(q)."""
    return path_integral(f, monotone_path(p, q)) / weight(f.prebasis, q)


def cycle_defect(source: CubeSource, path: LatticePath) -> Fraction:
    """Integral around a cycle; nonzero means the enclosed region cannot be tiled."""
    if not path.is_closed:
        raise OpenPathError(f"Path from {path.start} to {path.end} is not closed")
    return path_integral(source, path)


def real_value(f: Tessellation) -> Fraction:
    return real_of_config(f.diagonal)


def _check_direction(n: Prebasis, v: Point) -> None:
    check_same_dim(n.n, v)
    if not leq(v, const(len(v), 0)) or weight(n, v) <= 1:
        raise InadmissibleDirectionError(f"Direction {v} must be <= 0 with weight above 1")


def real_parts(f: Tessellation, p: Point, v: Point) -> RealParts:
    """
    Split of real(f) at the point p for the ray through p along v.

    The integral part moves with p by the path integral from the origin;
    the total does not depend on (p, v).
    """
    _check_direction(f.prebasis, v)
    check_same_dim(f.prebasis.n, p)
    real = real_value(f)
    integral = integral_value(f.diagonal) + path_integral(f, monotone_path(const(f.dim, 0), p))
    return RealParts(fractional=real - integral, integral=integral, real=real)


def integral_limit(f: Tessellation, p: Point, v: Point) -> ExtendedValue:
    """
    Sum the terms (p + (i+1)v, p + iv)f directly.

    Once wgt(p + iv) exceeds real(f) every remaining label is zero.
    """
    _check_direction(f.prebasis, v)
    real = real_value(f)
    total = Fraction(0)
    i = 0
    while weight(f.prebasis, add(p, scale(i, v))) <= real:
        upper = add(p, scale(i, v))
        total += path_integral(f, monotone_path(add(upper, v), upper))
        i += 1
    logger.debug(f"Integral series at {p} along {v} vanished after {i} terms")
    return ExtendedValue(total)


def shift(f: Tessellation, v: Point) -> Tessellation:
    """sigma_v(f)[z] = f[z + v]; the value is multiplied by wgt(-v)."""
    return Tessellation(prebasis=f.prebasis, diagonal=_multiplied_diagonal(f, v))
