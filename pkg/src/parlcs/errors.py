class LcsError(Exception):
    """Base class for errors raised by parlcs."""


class CapacityError(LcsError, MemoryError):
    """The DP tables would exceed the configured memory budget."""


class ConfigError(LcsError, ValueError):
    pass


class AlphabetError(LcsError, ValueError):
    def __init__(self, symbol, offset):
        self.symbol = symbol
        self.offset = offset
        super().__init__(f"invalid symbol {chr(symbol)!r} at offset {offset} "
                         "(expected one of A, C, G, T)")


class FastaFormatError(LcsError, ValueError):
    pass


class ScheduleError(LcsError, RuntimeError):
    """A block was computed before its dependencies were final."""


class EquivalenceError(LcsError, AssertionError):
    """Serial and parallel fills disagreed."""
