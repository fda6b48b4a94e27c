import logging
from functools import lru_cache, partial
from itertools import product
from typing import Callable

from app.config import settings
from app.exceptions import (
    BaseMismatchError,
    DigitOutOfRangeError,
    EnumerationBoundError,
    NotRepresentableError,
)
from app.models.automata import MulRule, RationalMultiplier, TraceQuery
from app.models.digits import DigitConfig
from app.services.exact_arith import prime_factors

logger = logging.getLogger(__name__)

TraceWord = tuple[tuple[int, ...], ...]


def _mul_pair(p: int, q: int, a: int, b: int) -> int:
    return (a % q) * p + b // q


def local_rule(rule: MulRule, a: int, b: int) -> int:
    """mul_{p,N}(a1*q + a0, b1*q + b0) = a0*p + b1."""
    if not (0 <= a < rule.base and 0 <= b < rule.base):
        raise DigitOutOfRangeError(f"Digits ({a}, {b}) out of range for base {rule.base}")
    return _mul_pair(rule.p, rule.q, a, b)


def _check_base(rule: MulRule, x: DigitConfig) -> None:
    if rule.base != x.base:
        raise BaseMismatchError(f"Rule {rule} applied to a base-{x.base} config")


def apply_pair_rule(x: DigitConfig, fn: Callable[[int, int], int]) -> DigitConfig:
    """
    Apply y[i] = fn(x[i], x[i+1]) to a whole config.

    fn(0, 0) must be 0. The core grows by one digit on the left and the
    periodic tail keeps its period length.
    """
    if x.is_zero:
        return x
    lo = x.start - 1
    core = tuple(fn(x.digit_at(i), x.digit_at(i + 1)) for i in range(lo, x.tail_start))
    size = len(x.tail)
    tail = tuple(fn(x.tail[j], x.tail[(j + 1) % size]) for j in range(size))
    return DigitConfig(base=x.base, start=lo, digits=core, tail=tail)


def step(rule: MulRule, x: DigitConfig) -> DigitConfig:
    _check_base(rule, x)
    return apply_pair_rule(x, partial(_mul_pair, rule.p, rule.q))


def shift_left(x: DigitConfig) -> DigitConfig:
    """sigma(x)[i] = x[i+1]; multiplies the value by N."""
    return x.shifted(1)


def shift_right(x: DigitConfig) -> DigitConfig:
    return x.shifted(-1)


def inverse_step(rule: MulRule, x: DigitConfig) -> DigitConfig:
    """Mul_p^-1 = sigma^-1 o Mul_{N/p}."""
    _check_base(rule, x)
    return shift_right(step(MulRule(rule.q, rule.base), x))


@lru_cache(maxsize=settings.CUBE_CACHE_SIZE)
def cached_step(rule: MulRule, x: DigitConfig, forward: bool) -> DigitConfig:
    return step(rule, x) if forward else inverse_step(rule, x)


def prime_steps(m: RationalMultiplier) -> tuple[list[MulRule], list[MulRule]]:
    """Prime rules for the numerator and the denominator of alpha."""
    base_primes = prime_factors(m.base) if m.base > 1 else {}
    forward: list[MulRule] = []
    backward: list[MulRule] = []
    for part, target in ((m.alpha.numerator, forward), (m.alpha.denominator, backward)):
        for prime, power in sorted(prime_factors(part).items()):
            if prime not in base_primes:
                raise NotRepresentableError(
                    f"Multiplier {m.alpha} has prime {prime} not dividing base {m.base}"
                )
            target.extend([MulRule(prime, m.base)] * power)
    return forward, backward


def mul_alpha(m: RationalMultiplier, x: DigitConfig, numerator_first: bool = True) -> DigitConfig:
    if m.base != x.base:
        raise BaseMismatchError(f"Multiplier {m} applied to a base-{x.base} config")
    forward, backward = prime_steps(m)
    moves = [(r, True) for r in forward]
    inverse_moves = [(r, False) for r in backward]
    moves = moves + inverse_moves if numerator_first else inverse_moves + moves
    for rule, is_forward in moves:
        x = cached_step(rule, x, is_forward)
    return x


def run(m: RationalMultiplier, x: DigitConfig, steps: int) -> list[DigitConfig]:
    """Orbit x, F(x), ..., F^steps(x) of F = Mul_{alpha,N}."""
    rows = [x]
    for _ in range(steps):
        rows.append(mul_alpha(m, rows[-1]))
    logger.info(f"Ran {m} for {steps} steps")
    return rows


def _step_word(rule: MulRule, word: list[int], forward: bool) -> list[int]:
    r = rule if forward else MulRule(rule.q, rule.base)
    return [_mul_pair(r.p, r.q, a, b) for a, b in zip(word, word[1:])]


def trace_window(query: TraceQuery) -> tuple[int, int]:
    """Index window whose digits determine every trace of the query."""
    forward, backward = prime_steps(query.multiplier)
    lo = -(query.width - 1) - query.horizon * len(backward)
    hi = query.horizon * len(forward)
    return lo, hi


def trace_words(query: TraceQuery) -> list[TraceWord]:
    """
    All width-k traces of length T+1, sorted.

    Forward steps read x[i..i+1] and inverse steps read x[i-1..i], so the
    digits on `trace_window(query)` fix the traces at [-(k-1), 0] up to T.
    """
    m = query.multiplier
    forward, backward = prime_steps(m)
    lo, hi = trace_window(query)
    length = hi - lo + 1
    estimate = m.base ** length
    if estimate > settings.TRACE_MAX_WINDOWS:
        logger.warning(f"Trace enumeration of {estimate} windows refused")
        raise EnumerationBoundError(
            f"Trace enumeration needs {estimate} windows, limit is {settings.TRACE_MAX_WINDOWS}",
            estimate,
        )

    first = -(query.width - 1)
    words: set[TraceWord] = set()
    for window in product(range(m.base), repeat=length):
        word = list(window)
        word_lo = lo
        frames = [tuple(word[first - word_lo: first - word_lo + query.width])]
        for _ in range(query.horizon):
            for rule in forward:
                word = _step_word(rule, word, True)
            for rule in backward:
                word = _step_word(rule, word, False)
                word_lo += 1
            frames.append(tuple(word[first - word_lo: first - word_lo + query.width]))
        words.add(tuple(frames))

    logger.info(f"Enumerated {len(words)} trace words for {m}, width {query.width}, horizon {query.horizon}")
    return sorted(words)
