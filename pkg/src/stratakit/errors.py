"""Exception hierarchy.  Every error raised on purpose derives from StratakitError."""


class StratakitError(ValueError):
    pass


class PresentationError(StratakitError):
    """A quiver presentation violates one of its structural invariants."""


class DuplicateLabel(PresentationError):
    pass


class DanglingVertex(PresentationError):
    pass


class NonComposableRelation(PresentationError):
    pass


class DuplicateRelation(PresentationError):
    pass


class InfiniteDimensional(StratakitError):
    pass


class GradedInput(StratakitError):
    pass


class InfiniteDual(StratakitError):
    pass


class SizeLimit(StratakitError):
    pass


class DomainError(StratakitError):
    pass


class Degenerate(StratakitError):
    pass


class InfiniteGlobalDimension(StratakitError):
    pass


class WrongSimpleCount(StratakitError):
    pass


class MoreThanTwoVertices(StratakitError):
    pass
