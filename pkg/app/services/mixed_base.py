from fractions import Fraction
from typing import Sequence, TypeVar

from app.exceptions import (
    DigitOutOfRangeError,
    IndexOutOfRangeError,
    InvalidInjectionError,
    InvalidMixedBaseError,
)
from app.models.lattice import (
    DirectiveSequence,
    MixedBase,
    Point,
    Prebasis,
    check_same_dim,
    neg,
)

T = TypeVar("T")


def _as_mixed_base(m: MixedBase | Sequence[int]) -> MixedBase:
    return m if isinstance(m, MixedBase) else MixedBase(tuple(m))


def _as_directive_sequence(seq: DirectiveSequence | Sequence[Point]) -> DirectiveSequence:
    return seq if isinstance(seq, DirectiveSequence) else DirectiveSequence(tuple(seq))


def mixed_digits(a: int, m: MixedBase | Sequence[int]) -> tuple[int, ...]:
    """
    Digits (a_0, ..., a_k) with a = sum a_i m[i], m[0] = 1,
    0 <= a_i < m[i+1]/m[i] for i < k and a_k unbounded.
    """
    if a < 0:
        raise DigitOutOfRangeError(f"Cannot expand negative value {a}")
    chain = _as_mixed_base(m).with_unit()
    digits = []
    rest = a
    for lo, hi in zip(chain, chain[1:]):
        rest, d = divmod(rest, hi // lo)
        digits.append(d)
    digits.append(rest)
    return tuple(digits)


def eval_digits(digits: Sequence[int], m: MixedBase | Sequence[int]) -> int:
    chain = _as_mixed_base(m).with_unit()
    if len(digits) != len(chain):
        raise InvalidMixedBaseError(
            f"Expected {len(chain)} digits for mixed base {chain[1:]}, got {len(digits)}"
        )
    for i, d in enumerate(digits):
        bound = chain[i + 1] // chain[i] if i + 1 < len(chain) else None
        if d < 0 or (bound is not None and d >= bound):
            raise DigitOutOfRangeError(f"Digit {d} at position {i} out of range")
    return sum(d * w for d, w in zip(digits, chain))


def weight(n: Prebasis, v: Point) -> Fraction:
    """m(n, v) = prod n[j]^(-v[j]); an integer whenever v <= 0."""
    check_same_dim(n.n, v)
    result = Fraction(1)
    for nj, vj in zip(n.n, v):
        result *= Fraction(nj) ** -vj
    return result


def alpha(z: Point, n: Prebasis) -> Fraction:
    """prod n[j]^z[j], the multiplier attached to the lattice position z."""
    return weight(n, neg(z))


def base_from_dirseq(n: Prebasis, seq: DirectiveSequence | Sequence[Point]) -> MixedBase:
    seq = _as_directive_sequence(seq)
    entries = []
    for v in seq:
        w = weight(n, v)
        entries.append(w.numerator)
    return MixedBase(tuple(entries))


def base_n_digits(n: Prebasis, a: int, seq: DirectiveSequence | Sequence[Point]) -> tuple[int, ...]:
    return mixed_digits(a, base_from_dirseq(n, seq))


def ins(x: Sequence[T], i: int, y: Sequence[T]) -> tuple[T, ...]:
    """Insert y after the first i entries of x."""
    if not 0 <= i <= len(x):
        raise IndexOutOfRangeError(f"Insertion index {i} outside 0..{len(x)}")
    return tuple(x[:i]) + tuple(y) + tuple(x[i:])


def insover(x: Sequence[T], i: int, y: Sequence[T]) -> tuple[T, ...]:
    """Replace the i-th entry of x (1-based) by the sequence y."""
    if not 1 <= i <= len(x):
        raise IndexOutOfRangeError(f"Overwrite index {i} outside 1..{len(x)}")
    return tuple(x[: i - 1]) + tuple(y) + tuple(x[i:])


def embed(p: Point, iota: Sequence[int], v: Point) -> Point:
    """
    Affine embedding of Z^d' into Z^d: p + sum v[i] e_iota(i).

    `iota` lists, for each axis of the small space, the axis of the large
    space it maps to (0-based).
    """
    iota = tuple(iota)
    if len(set(iota)) != len(iota):
        raise InvalidInjectionError(f"Axis map {iota} is not injective")
    if any(not 0 <= j < len(p) for j in iota):
        raise InvalidInjectionError(f"Axis map {iota} leaves dimension {len(p)}")
    check_same_dim(iota, v)
    result = list(p)
    for i, j in enumerate(iota):
        result[j] += v[i]
    return tuple(result)
