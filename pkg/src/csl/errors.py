"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`CSLError`.
Structural errors (bad input shape, violated preconditions) also derive from
:class:`StructuralError`, which the command line maps to exit status 3.
"""


class CSLError(Exception):
    """Base class for all package errors."""


class StructuralError(CSLError):
    """A structural precondition on an input graph or specification failed."""


# plane graphs

class InconsistentRotation(StructuralError):
    """Neighbour lists disagree (u lists v but v does not list u, loops, ...)."""


class NonPlanarEmbedding(StructuralError):
    """The rotation system does not describe a genus 0 embedding."""

    def __init__(self, genus, message=None):
        self.genus = genus
        super().__init__(message or f"rotation system has genus {genus}, expected 0")


class NonContiguousBlocks(StructuralError):
    """A vertex split was asked for with blocks that are not intervals of the rotation."""


class DegreeTooSmall(StructuralError):
    """A vertex split would leave a vertex of degree below three."""


class OverlappingTriangles(StructuralError):
    """Triangles handed to a contraction share a vertex."""


class BareCycle(StructuralError):
    """The graph is a cycle: it has no vertex of degree three."""


class AllDegreeTwo(BareCycle):
    """Suppression was asked for on a graph whose vertices all have degree two."""


class NotSubcubic(StructuralError):
    pass


class Not2Connected(StructuralError):
    pass


class Not3Connected(StructuralError):
    pass


class NotCubic(StructuralError):
    pass


# cycle search

class BudgetExceeded(CSLError):
    """A bounded search ran out of budget.

    Attributes:
        partial: lengths found before the budget ran out (a
            :class:`~csl.spectrum.CycleLengthSet` with ``exhaustive=False``).
    """

    def __init__(self, partial, message="search budget exceeded"):
        self.partial = partial
        super().__init__(message)


class TooLarge(CSLError):
    """The exact oracle refuses graphs above its size limit."""


class CircumferenceTooSmall(StructuralError):
    pass


class Forest(StructuralError):
    """The graph has no cycle."""


# constructions

class InvalidProfile(StructuralError):
    pass


class MatchingNotPerfect(StructuralError):
    pass


class IncompatibleK(StructuralError):
    pass


class StubMismatch(StructuralError):
    pass


class MissingAssignment(StructuralError):
    pass


class NoneFound(CSLError):
    """An exhaustive fragment search came back empty."""


# reduction

class NoLongFace(StructuralError):
    pass


class NoAdjacentShortPair(CSLError):
    """No two short faces share an edge: the elimination has reached its fixpoint."""


class FaceNotShort(StructuralError):
    pass


class IdentityViolation(CSLError):
    """An identity that holds for every plane graph failed. Always a bug."""


# serialization

class BadHeader(StructuralError):
    pass


class TruncatedRecord(StructuralError):
    pass


class RotationInconsistent(InconsistentRotation):
    pass
