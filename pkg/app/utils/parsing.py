import re
from fractions import Fraction

from app.exceptions import MulticubeError, ParseError
from app.models.automata import RationalMultiplier
from app.models.lattice import Point, Prebasis

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise ParseError(f"Expected comma-separated integers, got '{text}'") from e


def parse_prebasis(text: str) -> Prebasis:
    entries = parse_int_list(text)
    try:
        return Prebasis(entries)
    except MulticubeError as e:
        raise ParseError(str(e)) from e


def parse_rational(text: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"Malformed rational '{text}'") from e
    if value < 0:
        raise ParseError(f"Rational must be nonnegative, got '{text}'")
    return value


def parse_box(text: str) -> tuple[Point, Point]:
    """'x0..x1,y0..y1' -> ((x0, y0), (x1, y1))."""
    lo, hi = [], []
    for part in text.split(","):
        match = _RANGE.match(part)
        if not match:
            raise ParseError(f"Malformed box range '{part}' in '{text}'")
        lo.append(int(match.group(1)))
        hi.append(int(match.group(2)))
    return tuple(lo), tuple(hi)


def parse_multiplier(text: str) -> RationalMultiplier:
    """'p/q@N' or 'p@N'."""
    if "@" not in text:
        raise ParseError(f"Rule must look like 'p/q@N', got '{text}'")
    alpha_text, base_text = text.rsplit("@", 1)
    alpha = parse_rational(alpha_text)
    try:
        return RationalMultiplier(alpha=alpha, base=int(base_text))
    except ValueError as e:
        raise ParseError(f"Malformed rule '{text}': {e}") from e
