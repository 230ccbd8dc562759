"""Exception classes raised across wallchamber."""


class NotEuclidean(ValueError):
    """The quiver is not of Euclidean (tame hereditary) type."""


class MissingTubeTable(ValueError):
    """A non-Ã Euclidean quiver was given without an external tube table."""


class InvariantViolation(RuntimeError):
    """A mathematical invariant that should always hold has failed."""


class VerificationFailure(RuntimeError):
    """A verification report was marked failed where a hard failure was requested."""
