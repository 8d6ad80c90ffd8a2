"""Exception types raised across the package."""


class Z22Error(Exception):
    """Base class for all package errors."""


class NonHomogeneousOperand(Z22Error, ValueError):
    """A graded bracket received a polynomial mixing several degrees."""


class CutoffTooSmall(Z22Error, ValueError):
    def __init__(self, cutoff: int, minimum: int):
        self.cutoff = cutoff
        self.minimum = minimum
        super().__init__(f"cutoff {cutoff} is too small (need >= {minimum})")


class ZeroImage(Z22Error):
    """The operator annihilates every safe state of the requested sector."""


class FixtureMismatch(Z22Error, AssertionError):
    def __init__(self, level: int, sector: str, expected, actual):
        self.level = level
        self.sector = sector
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"level {level}, sector {sector}: expected {sorted(expected)}, got {sorted(actual)}"
        )


class UnknownOperator(Z22Error, KeyError):
    pass
