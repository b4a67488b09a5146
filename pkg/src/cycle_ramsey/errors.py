"""Exception types shared across the toolkit."""


class CycleRamseyError(Exception):
    """Base class for every error raised by this package."""


class LoopEdge(CycleRamseyError):
    pass


class DuplicateEdge(CycleRamseyError):
    pass


class VertexOutOfRange(CycleRamseyError):
    pass


class CycleTooShort(CycleRamseyError):
    """Cycle lengths below 3 are meaningless for simple graphs."""


class ColorOutOfRange(CycleRamseyError):
    pass


class InvalidParams(CycleRamseyError):
    pass


class EvenCycleLength(CycleRamseyError):
    """Raised by odd-cycle-only certificate logic when given an even length."""


class OddCycleLength(CycleRamseyError):
    """Raised by the even-cycle engine when given an odd length."""


class TargetTooLarge(CycleRamseyError):
    pass


class ParamOutOfRange(CycleRamseyError):
    pass


class NotACounterexample(CycleRamseyError):
    pass


class FormatError(CycleRamseyError):
    """Malformed graph/coloring file or rational literal."""
