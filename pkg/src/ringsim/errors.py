"""Exception types shared across the package."""


class RingError(Exception):
    """Base class for all errors raised by ringsim."""


class ParameterError(RingError, ValueError):
    """A physical parameter is outside its allowed domain."""


class ZeroFieldError(RingError, ValueError):
    """The cancellation rotation is undefined at zero magnetic field."""


class TruncationError(RingError, RuntimeError):
    """The level window grew past the hard cap without certifying truncation."""


class SolverError(RingError, RuntimeError):
    """The chemical-potential solve could not place the requested electrons."""


class WindowMismatchError(RingError, ValueError):
    """An occupation state was paired with a spectrum it was not built on."""


class ConfigError(RingError, ValueError):
    """A sweep configuration file is invalid.

    ``line`` is the 1-based line number the problem was detected on, or
    None for file-level problems (e.g. a missing required key).
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
