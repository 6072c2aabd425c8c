"""Exception hierarchy.

Every error raised on bad input derives from :class:`BierError`, which is a
``ValueError`` so generic callers can catch it without importing this module.
"""


class BierError(ValueError):
    pass


# posets
class NotBounded(BierError):
    pass


class CyclicCovers(BierError):
    pass


class BadParameter(BierError):
    pass


class NotGraded(BierError):
    pass


class NotALattice(BierError):
    pass


class ImproperIdeal(BierError):
    pass


class BoundaryElement(BierError):
    pass


# complexes
class VertexOutOfUniverse(BierError):
    pass


class VoidComplex(BierError):
    pass


class LengthMismatch(BierError):
    pass


class ImproperComplex(BierError):
    pass


class GroundSetMismatch(BierError):
    pass


class FaceNotPresent(BierError):
    pass


class LabelCollision(BierError):
    pass


class LinkNotSimplexBoundary(BierError):
    pass


class BAlreadyPresent(BierError):
    pass


class NotPure(BierError):
    pass


class NotAPermutation(BierError):
    pass


class TooLarge(BierError):
    pass


class NotAKSequence(BierError):
    pass


# boolean Bier spheres
class NotAnInterval(BierError):
    pass


class IndexTooLarge(BierError):
    pass


class IndexOutOfRange(BierError):
    pass


class NotAddable(BierError):
    pass


class InvalidChoice(BierError):
    pass
