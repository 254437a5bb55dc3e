"""Exception types shared across the package."""


class FormatError(ValueError):
    """Malformed textual input (edge list, family descriptor, 3DM file)."""


class NotConnectedError(ValueError):
    """Operation requires a connected graph."""


class SizeCapError(ValueError):
    """Requested instance exceeds the configured size cap."""


class InfeasibleCoverError(ValueError):
    """A cover instance has a row no column can satisfy."""
