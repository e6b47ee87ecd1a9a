"""Exception hierarchy shared by every module of the package."""


class DomainError(ValueError):
    """An input violates a mathematical precondition of an operation."""


class GuardExceeded(DomainError):
    """A configurable size guard was exceeded before work started."""


class NoInsideCorner(DomainError):
    pass


class UnsupportedShape(DomainError):
    pass


class WrongRegime(DomainError):
    """The operation is only meaningful for a different genus regime."""


class ComparisonUndefined(DomainError):
    pass


class EmptyStaircase(DomainError):
    pass
