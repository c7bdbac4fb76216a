"""Exception types shared across the package."""


class MeobeamError(Exception):
    """Base class for all package errors."""


class ScenarioError(MeobeamError):
    """Scenario file is missing, malformed, or violates an invariant.

    ``field`` carries the dotted path of the offending entry when known.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class CoverageError(MeobeamError):
    """A user is never visible from any satellite in the window."""


class CapacityError(MeobeamError):
    """An assigned load exceeds a hard capacity."""


class SizeError(MeobeamError):
    """Problem instance too large for the requested exact method."""
