"""Exception types raised across the package."""


class TreeError(ValueError):
    """Base class for all library errors."""


class InvalidStructureError(TreeError):
    """A tree, forest or record failed construction-time validation."""


class InvalidVertexError(TreeError):
    """A vertex label is not part of the structure it was used with."""


class DomainError(TreeError):
    """An operation was applied outside the set it is defined on."""


class MembershipError(DomainError):
    """Input to a map does not satisfy the map's domain predicate."""

    def __init__(self, predicate: str, message: str | None = None):
        self.predicate = predicate
        super().__init__(message or f"input fails membership predicate {predicate}")


class UnsupportedFamilyError(TreeError):
    pass


class CeilingExceededError(TreeError):
    """Exhaustive generation refused because the output would be too large."""


class DegenerateExponentError(TreeError):
    pass


class OrderMismatchError(TreeError):
    pass
