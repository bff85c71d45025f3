"""Exception hierarchy shared by all fmchow modules."""


class FmchowError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(FmchowError):
    """Structurally incompatible objects (mismatched variable tables, name collisions)."""


class DegreeError(FmchowError):
    """A polynomial is inhomogeneous, or has the wrong degree, where homogeneity is required."""


class WalkOrderError(FmchowError):
    """A wall-crossing order violates the superset-first constraint."""


class MapError(FmchowError):
    """A variable substitution does not define a ring map (a relation does not map to zero)."""

    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = offending


class SizeCapError(FmchowError):
    """A computation was refused because it exceeds a configured size cap."""
