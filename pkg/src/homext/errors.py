"""Exception types shared across the library."""


class HomextError(Exception):
    """Base class for library errors."""


class DegreeMismatchError(HomextError, ValueError):
    """Operands act on different numbers of points."""


class NotASubgroupError(HomextError, ValueError):
    """A claimed subgroup relation failed a membership check."""


class BoundExceededError(HomextError, RuntimeError):
    """An index or resource bound was exceeded during a search."""


class PartialMapError(HomextError, ValueError):
    """A partial map on generators does not define a homomorphism.

    ``relator_index`` identifies the first relator whose evaluation on the
    proposed images was not the identity, when known.
    """

    def __init__(self, message, relator_index=None):
        super().__init__(message)
        self.relator_index = relator_index


class InconsistentSolutionError(HomextError, ValueError):
    """A claimed subset-sum solution does not satisfy the defining equation."""


class TriangularStructureError(HomextError, ValueError):
    """Instance lacks the structure required by the triangular pipeline."""
