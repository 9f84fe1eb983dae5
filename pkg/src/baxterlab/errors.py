"""Exception hierarchy shared by all modules."""


class BaxterLabError(Exception):
    """Base class for all errors raised by baxterlab."""


class InvalidMap(BaxterLabError):
    """The rotation system does not describe a connected plane map."""


class NonQuadFace(InvalidMap):
    pass


class NotBipartite(InvalidMap):
    pass


class NotSimple(InvalidMap):
    pass


class PolesInvalid(InvalidMap):
    pass


class NotTriangulation(InvalidMap):
    pass


class InvalidOrientation(BaxterLabError):
    """An orientation or coloring violates its defining local rules."""


class InternalContradiction(BaxterLabError):
    """A condition proven impossible on valid input was observed.

    Raised defensively; seeing it means there is a bug, not bad input.
    """


class CycleDetected(InternalContradiction):
    pass


class StraightPathCycle(InternalContradiction):
    pass


class IntersectionDetected(InternalContradiction):
    pass


class MalformedFingerprint(BaxterLabError):
    pass


class LengthMismatch(BaxterLabError):
    pass


class DominanceViolated(BaxterLabError):
    pass


class CountMismatch(BaxterLabError):
    pass


class NotAlternating(BaxterLabError):
    pass


class NotTwins(BaxterLabError):
    pass


class NotBaxter(BaxterLabError):
    pass


class NotAlternatingFingerprint(BaxterLabError):
    pass


class InvalidRectangulation(BaxterLabError):
    pass


class CyclicOrientation(InvalidOrientation):
    pass


class WrongPoles(InvalidOrientation):
    pass


class FactVViolated(InvalidOrientation):
    pass


class FactFViolated(InvalidOrientation):
    pass


class StarViolated(InvalidOrientation):
    pass


class DomainError(BaxterLabError, ValueError):
    pass


class SingularConfig(BaxterLabError, ValueError):
    pass


class BoundExceeded(BaxterLabError, ValueError):
    pass


class ParseError(BaxterLabError, ValueError):
    pass


class NotConvertible(BaxterLabError):
    pass


class NotRenderable(BaxterLabError):
    pass


class UnknownFamily(BaxterLabError, KeyError):
    pass


class InvariantViolated(BaxterLabError):
    """A converted object failed a defining invariant; the message names it."""
