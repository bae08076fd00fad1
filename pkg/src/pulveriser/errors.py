"""Exception hierarchy.

Every domain failure derives from :class:`PulveriserError`, so the CLI can
report ``type(exc).__name__`` and exit with the domain-error code.
"""


class PulveriserError(Exception):
    """Base class for every error raised by this package."""


class ZeroDenominator(PulveriserError, ZeroDivisionError):
    pass


class ZeroDivisor(PulveriserError, ZeroDivisionError):
    pass


class NonPositiveInput(PulveriserError, ValueError):
    pass


class InvalidGenerators(PulveriserError, ValueError):
    pass


class NegativeExponent(PulveriserError, ValueError):
    pass


class LengthOutOfRange(PulveriserError, ValueError):
    pass


class IndexOutOfRange(PulveriserError, ValueError):
    pass


class NegativeCadence(PulveriserError, ValueError):
    pass


class CadenceOutOfRange(PulveriserError, ValueError):
    pass


class NegativeRow(PulveriserError, ValueError):
    pass


class InvalidWins(PulveriserError, ValueError):
    pass


class NegativeRadicand(PulveriserError, ValueError):
    pass


class InvalidBase(PulveriserError, ValueError):
    pass


class NotSolvable(PulveriserError, ValueError):
    pass


class DegenerateInput(PulveriserError, ValueError):
    pass


class PerfectSquare(PulveriserError, ValueError):
    pass


class InvalidModulus(PulveriserError, ValueError):
    pass


class OutOfRange(PulveriserError, ValueError):
    pass


class NotPrimeInput(PulveriserError, ValueError):
    pass


class SinkClosed(PulveriserError, RuntimeError):
    """Raised when an event is emitted into a sink that was already closed."""
