"""Exception types shared across the package."""


class SimpairError(Exception):
    """Base class for all errors raised by this package."""


class NotAPartition(SimpairError):
    """Blocks fail to be disjoint, nonempty, and covering."""


class NotNested(SimpairError):
    """The fine relation does not refine the coarse one."""


class ElementOutOfRange(SimpairError):
    """An element or map value lies outside the ground set."""


class ClassIndexOutOfRange(SimpairError):
    """A class index does not name an existing class."""


class ParseError(SimpairError):
    """Malformed textual input.  Carries a best-effort position."""

    def __init__(self, message, line=0, column=0):
        super().__init__(message)
        self.line = line
        self.column = column


class NotInSc(SimpairError):
    """A sequence is not a realizable local coarse shape."""


class NotRealizable(SimpairError):
    """No class can realize the given shape."""


class ShapeMismatch(SimpairError):
    """A target class cannot accommodate a source class."""


class CapExceeded(SimpairError):
    """A search space is larger than the configured cap."""

    def __init__(self, size, cap=None):
        msg = f"search space of size {size} exceeds cap"
        if cap is not None:
            msg += f" {cap}"
        super().__init__(msg)
        self.size = size
        self.cap = cap


class InfiniteShape(SimpairError):
    """A shape requires infinitely many points to realize."""


class NotAPermutation(SimpairError):
    """Input does not describe a permutation of the ground set."""


class NotSubset(SimpairError):
    """The fine generator list is not contained in the coarse one."""
