"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates a documented precondition."""


class LabelParseError(ValueError):
    """A textual vertex label failed to parse.

    Carries the 0-based offset of the offending character in ``position``
    (or the expected length when the length itself is wrong).
    """

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class ResourceCapError(RuntimeError):
    """The request exceeds a hard materialization cap."""
