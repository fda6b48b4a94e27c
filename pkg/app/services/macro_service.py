import logging

from app.exceptions import BaseMismatchError, DimensionMismatchError, NotMicrotileableError
from app.models.digits import DigitConfig
from app.models.lattice import Point, Prebasis, const, neg, sub
from app.models.tessellation import MacroMatrix, Tessellation
from app.services.exact_arith import expansion_like, real_of_config
from app.services.mixed_base import base_n_digits, weight
from app.services.tessellation_service import label, shift

logger = logging.getLogger(__name__)


def _check_rows(n: Prebasis, A: MacroMatrix) -> None:
    if A.rows != n.dim:
        raise DimensionMismatchError(f"Matrix with {A.rows} rows used with a {n.dim}-dimensional prebasis")


def derived_prebasis(n: Prebasis, A: MacroMatrix) -> Prebasis:
    """n^A, entry i = m(n, -A e_i)."""
    _check_rows(n, A)
    return Prebasis(tuple(weight(n, neg(A.column(i))).numerator for i in range(A.cols)))


def _carry(diagonal: DigitConfig, target: Prebasis) -> DigitConfig:
    """
    Diagonal of the image tessellation over `target`.

    Both maps keep the represented value, and a diagonal that ends in a
    run of N-1 is carried to the expansion approached from below.
    """
    if target.base == 1:
        return DigitConfig.zero(1)
    return expansion_like(diagonal, real_of_config(diagonal), target.base)


def macrotile(f: Tessellation, A: MacroMatrix) -> Tessellation:
    target = derived_prebasis(f.prebasis, A)
    result = Tessellation(prebasis=target, diagonal=_carry(f.diagonal, target))
    logger.info(f"Macrotiled ({f.prebasis}) to ({target})")
    return result


def macro_cell(f: Tessellation, A: MacroMatrix, v: Point) -> int:
    """Value of macro_A(f) at v, read off lbl(f, (A(v - 1), Av))."""
    _check_rows(f.prebasis, A)
    upper = A.apply(v)
    lower = A.apply(sub(v, const(len(v), 1)))
    value = label(f, lower, upper)
    return value.numerator


def microtile(g: Tessellation, n: Prebasis, A: MacroMatrix) -> Tessellation:
    if not A.is_invertible_class:
        raise NotMicrotileableError("Every row of the matrix needs a positive entry")
    expected = derived_prebasis(n, A)
    if g.prebasis != expected:
        raise BaseMismatchError(f"Tessellation over ({g.prebasis}) is not over n^A = ({expected})")
    result = Tessellation(prebasis=n, diagonal=_carry(g.diagonal, n))
    logger.info(f"Microtiled ({g.prebasis}) to ({n})")
    return result


def micro_cell(g: Tessellation, n: Prebasis, A: MacroMatrix, x: Point) -> int:
    """
    Value of micro_A(g) at x from a label of g.

    With z1 >= z2 chosen so that Az1 >= x and Az2 <= x - 1, the label
    lbl(g, (z2, z1)) holds the fine cube at x as the middle digit of its
    expansion along (-v, -v - 1), v = Az1 - x.
    """
    if not A.is_invertible_class:
        raise NotMicrotileableError("Every row of the matrix needs a positive entry")
    _check_rows(n, A)
    row_sums = [sum(row) for row in A.entries]
    high = max([0] + [-(-xj // r) for xj, r in zip(x, row_sums)])
    low = min([high] + [(xj - 1) // r for xj, r in zip(x, row_sums)])
    z1 = const(A.cols, high)
    z2 = const(A.cols, low)
    v = sub(A.apply(z1), x)
    a = label(g, z2, z1).numerator
    return base_n_digits(n, a, (neg(v), tuple(-c - 1 for c in v)))[1]


def partial_shift(g: Tessellation, n: Prebasis, A: MacroMatrix, z: Point) -> Tessellation:
    """sigma_{A,z} = macro_A o sigma_z o micro_A."""
    return macrotile(shift(microtile(g, n, A), z), A)
