from dataclasses import dataclass

from app.exceptions import DigitOutOfRangeError, InvalidBaseError


def _minimal_period(word: tuple[int, ...]) -> tuple[int, ...]:
    size = len(word)
    for period in range(1, size + 1):
        if size % period == 0 and word[:period] * (size // period) == word:
            return word[:period]
    return word


def _normalize(start: int, digits: tuple[int, ...], tail: tuple[int, ...]):
    if all(t == 0 for t in tail):
        tail = ()
    else:
        tail = _minimal_period(tail)

    core = list(digits)
    tail_start = start + len(core)
    # Move the tail start left while the preceding digit continues the period.
    while True:
        last = tail[-1] if tail else 0
        if core:
            if core[-1] != last:
                break
            core.pop()
        elif not (tail and last == 0):
            break
        tail_start -= 1
        if tail:
            tail = (tail[-1],) + tail[:-1]

    lead = 0
    while lead < len(core) and core[lead] == 0:
        lead += 1
    core = core[lead:]
    start = tail_start - len(core)
    if not core and not tail:
        start = 0
    return start, tuple(core), tail


@dataclass(frozen=True)
class DigitConfig:
    """
    Bi-infinite base-N digit sequence with index i weighted by N^-i.

    Digits left of `start` are 0, `digits` occupies [start, start+len(digits)),
    and from `tail_start` on the word `tail` repeats (an empty tail means zeros).
    Instances are normalized on construction, so equality is digitwise.
    """
    base: int
    start: int = 0
    digits: tuple[int, ...] = ()
    tail: tuple[int, ...] = ()

    def __post_init__(self):
        if self.base < 1:
            raise InvalidBaseError(f"Base must be positive, got {self.base}")
        digits = tuple(int(d) for d in self.digits)
        tail = tuple(int(d) for d in self.tail)
        for d in digits + tail:
            if not 0 <= d < self.base:
                raise DigitOutOfRangeError(f"Digit {d} out of range for base {self.base}")
        start, digits, tail = _normalize(int(self.start), digits, tail)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def zero(cls, base: int) -> "DigitConfig":
        return cls(base=base)

    @property
    def tail_start(self) -> int:
        return self.start + len(self.digits)

    @property
    def is_zero(self) -> bool:
        return not self.digits and not self.tail

    @property
    def is_canonical(self) -> bool:
        """False exactly when the expansion ends in an infinite run of N-1."""
        return self.tail != (self.base - 1,)

    def digit_at(self, i: int) -> int:
        if i < self.start:
            return 0
        if i < self.tail_start:
            return self.digits[i - self.start]
        if not self.tail:
            return 0
        return self.tail[(i - self.tail_start) % len(self.tail)]

    def window(self, lo: int, hi: int) -> tuple[int, ...]:
        """Digits at indices lo..hi inclusive."""
        return tuple(self.digit_at(i) for i in range(lo, hi + 1))

    def shifted(self, k: int) -> "DigitConfig":
        """The config y with y[i] = x[i + k]."""
        return DigitConfig(base=self.base, start=self.start - k, digits=self.digits, tail=self.tail)

    def __str__(self) -> str:
        core = "".join(f"[{d}]" if self.base > 10 else str(d) for d in self.digits)
        tail = "".join(f"[{d}]" if self.base > 10 else str(d) for d in self.tail)
        return f"{core}({tail or 0})@{self.start}_b{self.base}"
