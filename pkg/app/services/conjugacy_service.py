import logging
from typing import Sequence

from app.exceptions import BaseMismatchError, DigitOutOfRangeError, PrimeSetMismatchError
from app.models.digits import DigitConfig
from app.models.lattice import Prebasis
from app.models.tessellation import MacroMatrix, Tessellation
from app.services.exact_arith import prime_factors
from app.services.macro_service import macrotile, microtile

logger = logging.getLogger(__name__)


def tess_map(x: DigitConfig, n: Prebasis) -> Tessellation:
    if x.base != n.base:
        raise BaseMismatchError(f"Config in base {x.base} cannot back a tiling over ({n})")
    return Tessellation(prebasis=n, diagonal=x)


def diag_map(f: Tessellation) -> DigitConfig:
    return f.diagonal


def block_map(base: int, k: int, word: Sequence[int]) -> int:
    """Read k base-N digits as one base-N^k digit, last digit least significant."""
    if len(word) != k:
        raise DigitOutOfRangeError(f"Block of length {len(word)} where {k} digits were expected")
    value = 0
    for d in word:
        if not 0 <= d < base:
            raise DigitOutOfRangeError(f"Digit {d} out of range for base {base}")
        value = value * base + d
    return value


def _prime_split(base: int) -> tuple[Prebasis, Prebasis, MacroMatrix]:
    """Primes m, prime powers n and exponent matrix A_N with m^A_N = n."""
    if base < 2:
        raise PrimeSetMismatchError(f"Base must exceed 1, got {base}")
    factors = sorted(prime_factors(base).items())
    m = Prebasis(tuple(p for p, _ in factors))
    n = Prebasis(tuple(p ** k for p, k in factors))
    return m, n, MacroMatrix.diagonal(tuple(k for _, k in factors))


def to_radical(x: DigitConfig) -> DigitConfig:
    """conj_{N,M} with M the product of the primes of N."""
    m, n, A = _prime_split(x.base)
    return diag_map(microtile(tess_map(x, n), m, A))


def from_radical(y: DigitConfig, base: int) -> DigitConfig:
    """conj_{N,M}^-1."""
    m, n, A = _prime_split(base)
    if y.base != m.base:
        raise BaseMismatchError(f"Expected a base-{m.base} config, got base {y.base}")
    return diag_map(macrotile(tess_map(y, m), A))


def conj(x: DigitConfig, target: int) -> DigitConfig:
    """Base change between bases with the same prime divisors."""
    if x.base < 2 or target < 2 or set(prime_factors(x.base)) != set(prime_factors(target)):
        raise PrimeSetMismatchError(f"Bases {x.base} and {target} have different prime divisors")
    if x.base == target:
        return x
    result = from_radical(to_radical(x), target)
    logger.debug(f"Conjugated base {x.base} to base {target}")
    return result


def fact(x: DigitConfig, target: int) -> DigitConfig:
    """Factor map to a base whose primes all divide the source base."""
    if x.base < 2 or target < 2:
        raise PrimeSetMismatchError("Factor maps need bases above 1")
    source_primes = sorted(prime_factors(x.base))
    target_primes = sorted(prime_factors(target))
    if not set(target_primes) <= set(source_primes):
        raise PrimeSetMismatchError(f"Primes of {target} do not all divide {x.base}")
    if x.base == target:
        return x

    radical_config = to_radical(x)
    m = Prebasis(tuple(source_primes))
    select = MacroMatrix(tuple(
        tuple(int(p == q) for q in target_primes) for p in source_primes
    ))
    projected = diag_map(macrotile(tess_map(radical_config, m), select))
    result = from_radical(projected, target)
    logger.debug(f"Factored base {x.base} onto base {target}")
    return result
