"""Exceptions raised by the multicube services.

Everything derives from ValueError so callers that only care about bad
input can keep catching ValueError.
"""


class MulticubeError(ValueError):
    pass


class InvalidBaseError(MulticubeError):
    pass


class InvalidMixedBaseError(MulticubeError):
    pass


class InvalidDirectiveSequenceError(MulticubeError):
    pass


class DimensionMismatchError(MulticubeError):
    pass


class InvalidFaceError(MulticubeError):
    pass


class IndexOutOfRangeError(MulticubeError):
    pass


class DigitOutOfRangeError(MulticubeError):
    pass


class InvalidInjectionError(MulticubeError):
    pass


class InvalidPathError(MulticubeError):
    pass


class OpenPathError(MulticubeError):
    pass


class UnlabelableEdgeError(MulticubeError):
    pass


class InconsistentLabelError(MulticubeError):
    """Incident cubes of an edge disagree on its label."""

    def __init__(self, message: str, witnesses: list[tuple[tuple[int, ...], int]]):
        super().__init__(message)
        self.witnesses = witnesses


class InadmissibleDirectionError(MulticubeError):
    pass


class NotMicrotileableError(MulticubeError):
    pass


class BaseMismatchError(MulticubeError):
    pass


class NotRepresentableError(MulticubeError):
    pass


class PrimeSetMismatchError(MulticubeError):
    pass


class EnumerationBoundError(MulticubeError):
    """An enumeration would exceed the configured size bound."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


class ParseError(MulticubeError):
    pass
