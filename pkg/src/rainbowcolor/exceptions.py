"""Exception hierarchy shared by every module of the package."""


class RainbowError(Exception):
    """Base class for all errors raised by :mod:`rainbowcolor`."""


class GraphParseError(RainbowError, ValueError):
    """Raised when an edge-list document cannot be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnectedError(RainbowError, ValueError):
    """Raised when an operation needs a connected graph."""


class NotTwoConnectedError(RainbowError, ValueError):
    """Raised when an operation needs a 2-connected graph."""


class ParameterError(RainbowError, ValueError):
    """Raised for invalid generator or strategy parameters."""


class SizeLimitError(RainbowError, ValueError):
    """Raised when an exhaustive search is asked to handle an oversize input."""


class ColoringMismatchError(RainbowError, ValueError):
    """Raised when a coloring does not cover exactly the edges of a graph."""


class ConstructionError(RainbowError, RuntimeError):
    """Raised when a construction breaks one of its own guarantees.

    Reaching this means a bug, not bad input.
    """
