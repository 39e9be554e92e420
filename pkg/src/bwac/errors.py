"""Exception hierarchy shared by the codec stages and the container reader."""


class BwacError(Exception):
    """Base class for every error raised deliberately by this package."""


class GuardError(BwacError, ValueError):
    """The dense follower bitmap would exceed the configured size guard."""


class CorruptionError(BwacError, ValueError):
    """Compressed data is malformed.

    ``block`` is filled in by the pipeline when the failure can be pinned to
    a block of a container.
    """

    def __init__(self, message: str, block: int | None = None):
        super().__init__(message)
        self.message = message
        self.block = block

    def __str__(self) -> str:
        if self.block is None:
            return self.message
        return f"block {self.block}: {self.message}"


class TruncatedError(CorruptionError):
    pass


class BadMagicError(CorruptionError):
    pass


class VersionError(CorruptionError):
    pass


class InconsistentError(CorruptionError):
    """Fields that must agree with each other (counts, popcounts, padding) do not."""
