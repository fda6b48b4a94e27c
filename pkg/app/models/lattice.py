from dataclasses import dataclass
from math import prod
from typing import Sequence

from app.exceptions import (
    DimensionMismatchError,
    InvalidBaseError,
    InvalidDirectiveSequenceError,
    InvalidMixedBaseError,
)

Point = tuple[int, ...]


def point(coords: Sequence[int]) -> Point:
    return tuple(int(c) for c in coords)


def unit(d: int, axis: int) -> Point:
    """Standard basis vector e_axis of Z^d (axes are 0-based)."""
    if not 0 <= axis < d:
        raise DimensionMismatchError(f"Axis {axis} outside dimension {d}")
    return tuple(1 if i == axis else 0 for i in range(d))


def const(d: int, x: int) -> Point:
    return (x,) * d


def add(a: Point, b: Point) -> Point:
    check_same_dim(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Point, b: Point) -> Point:
    check_same_dim(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Point) -> Point:
    return tuple(k * x for x in a)


def neg(a: Point) -> Point:
    return tuple(-x for x in a)


def leq(a: Point, b: Point) -> bool:
    """Componentwise a <= b."""
    check_same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def pointwise_max(a: Point, b: Point) -> Point:
    check_same_dim(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def check_same_dim(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"Dimension mismatch: {len(a)} != {len(b)}")


@dataclass(frozen=True)
class Prebasis:
    """Vector n of positive integers; N = prod(n) is the digit base."""
    n: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.n)
        if not entries:
            raise DimensionMismatchError("Prebasis must have dimension at least 1")
        if any(x < 1 for x in entries):
            raise InvalidBaseError(f"Prebasis entries must be positive: {entries}")
        object.__setattr__(self, "n", entries)

    @property
    def dim(self) -> int:
        return len(self.n)

    @property
    def base(self) -> int:
        return prod(self.n)

    def __getitem__(self, axis: int) -> int:
        return self.n[axis]

    def __iter__(self):
        return iter(self.n)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.n)


@dataclass(frozen=True)
class MixedBase:
    """Divisibility chain m[1] | m[2] | ... | m[k]; may be empty."""
    m: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.m)
        if any(x < 1 for x in entries):
            raise InvalidMixedBaseError(f"Mixed base entries must be positive: {entries}")
        for lo, hi in zip((1,) + entries, entries):
            if hi % lo:
                raise InvalidMixedBaseError(f"{lo} does not divide {hi} in mixed base {entries}")
        object.__setattr__(self, "m", entries)

    def __len__(self) -> int:
        return len(self.m)

    def with_unit(self) -> tuple[int, ...]:
        """The chain with the conventional m[0] = 1 prepended."""
        return (1,) + self.m


@dataclass(frozen=True)
class DirectiveSequence:
    """Decreasing sequence 0 >= v_1 >= ... >= v_k of integer vectors."""
    vectors: tuple[Point, ...]

    def __post_init__(self):
        vectors = tuple(point(v) for v in self.vectors)
        if vectors:
            d = len(vectors[0])
            for v in vectors:
                if len(v) != d:
                    raise DimensionMismatchError("Directive sequence mixes dimensions")
            previous = const(d, 0)
            for v in vectors:
                if not leq(v, previous):
                    raise InvalidDirectiveSequenceError(
                        f"Directive sequence is not decreasing at {v} (after {previous})"
                    )
                previous = v
        object.__setattr__(self, "vectors", vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    @property
    def is_binary(self) -> bool:
        return all(x in (-1, 0) for v in self.vectors for x in v)
