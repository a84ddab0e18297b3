"""Exception types shared across the package."""


class CapacityError(Exception):
    """Raised when an input exceeds a size cap instead of silently truncating."""
