from fractions import Fraction
from math import floor

from app.exceptions import InvalidBaseError, MulticubeError
from app.models.digits import DigitConfig


def _require_base(base: int) -> None:
    if base < 2:
        raise InvalidBaseError(f"Base must be at least 2, got {base}")


def _require_nonnegative(xi: Fraction) -> Fraction:
    xi = Fraction(xi)
    if xi < 0:
        raise MulticubeError(f"Only nonnegative values are representable, got {xi}")
    return xi


def canonical_digit(xi: Fraction, base: int, i: int) -> int:
    """floor(base^i * xi) mod base."""
    _require_base(base)
    xi = _require_nonnegative(xi)
    return floor(Fraction(base) ** i * xi) % base


def digit_at(x: DigitConfig, i: int) -> int:
    return x.digit_at(i)


def real_of_config(x: DigitConfig) -> Fraction:
    """Exact value sum_i x[i] * N^-i; the periodic tail is a geometric series."""
    base = Fraction(x.base)
    value = Fraction(0)
    for offset, d in enumerate(x.digits):
        value += d * base ** -(x.start + offset)
    if x.tail:
        period = len(x.tail)
        block = sum(d * base ** -(x.tail_start + j) for j, d in enumerate(x.tail))
        value += block / (1 - base ** -period)
    return value


def integral_value(x: DigitConfig) -> Fraction:
    """Sum of x[i] * N^-i over i <= 0 (finite, the left tail is zero)."""
    base = Fraction(x.base)
    return sum((x.digit_at(i) * base ** -i for i in range(min(x.start, 1), 1)), Fraction(0))


def config_of_real(xi: Fraction, base: int) -> DigitConfig:
    """
    Canonical base-N expansion of xi >= 0.

    The integral part is written out directly; fractional digits come from
    long division, and the first repeated remainder marks the periodic tail.
    """
    _require_base(base)
    xi = _require_nonnegative(xi)
    whole = xi.numerator // xi.denominator
    remainder = xi.numerator % xi.denominator
    denominator = xi.denominator

    integral_digits = []
    while whole:
        whole, d = divmod(whole, base)
        integral_digits.append(d)
    integral_digits.reverse()
    start = 1 - len(integral_digits)

    fractional_digits = []
    seen_remainders = {}
    tail: tuple[int, ...] = ()
    while remainder:
        if remainder in seen_remainders:
            cycle_from = seen_remainders[remainder]
            tail = tuple(fractional_digits[cycle_from:])
            fractional_digits = fractional_digits[:cycle_from]
            break
        seen_remainders[remainder] = len(fractional_digits)
        d, remainder = divmod(remainder * base, denominator)
        fractional_digits.append(d)

    return DigitConfig(base=base, start=start, digits=tuple(integral_digits + fractional_digits), tail=tail)


def lower_config_of_real(xi: Fraction, base: int) -> DigitConfig:
    """
    Expansion of xi > 0 approached from below.

    Differs from config_of_real only when xi has a terminating expansion:
    the last nonzero digit is decremented and followed by N-1 forever.
    """
    canonical = config_of_real(xi, base)
    if canonical.is_zero or canonical.tail:
        return canonical
    digits = list(canonical.digits)
    digits[-1] -= 1
    return DigitConfig(base=base, start=canonical.start, digits=tuple(digits), tail=(base - 1,))


def expansion_like(reference: DigitConfig, xi: Fraction, base: int) -> DigitConfig:
    """Expansion of xi in the target base on the same side as `reference`."""
    if base == 1:
        return DigitConfig.zero(1)
    if reference.is_canonical:
        return config_of_real(xi, base)
    return lower_config_of_real(xi, base)


def prime_factors(n: int) -> dict[int, int]:
    """Trial division; n is a machine-scale base."""
    if n < 1:
        raise InvalidBaseError(f"Cannot factor {n}")
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def radical(n: int) -> int:
    result = 1
    for p in prime_factors(n):
        result *= p
    return result

