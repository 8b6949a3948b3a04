"""Exception types raised across coplab."""


class CoplabError(Exception):
    """Base class for every error raised by this package."""


class EdgeListError(CoplabError, ValueError):
    pass


class InvalidGraph(CoplabError, ValueError):
    pass


class SizeExceeded(CoplabError):
    pass


class BudgetExceeded(CoplabError):
    pass


class Disconnected(CoplabError, ValueError):
    pass


# constructions
class NotAPrimePower(CoplabError, ValueError):
    pass


class NotFactorizable(CoplabError, ValueError):
    pass


class IndexOutOfRange(CoplabError, ValueError):
    pass


class VectorOutOfRange(CoplabError, ValueError):
    pass


class NotC4Free(CoplabError, ValueError):
    pass


class ModeHypothesisViolated(CoplabError, ValueError):
    pass


class DegenerateDegree(CoplabError, ValueError):
    pass


class BadVectorLength(CoplabError, ValueError):
    pass


class EvenOrder(CoplabError, ValueError):
    pass


class CycleTooShort(CoplabError, ValueError):
    pass


class DisconnectedSplit(CoplabError):
    """The chosen line split produced a disconnected BF graph; try another seed."""


# certificates
class NotK2TFree(CoplabError, ValueError):
    pass


class NoValidThreshold(CoplabError, ValueError):
    pass


class GirthTooSmall(CoplabError, ValueError):
    pass


class EmptyFamily(CoplabError, ValueError):
    pass


# game engine
class ExceedsKmax(CoplabError):
    """No k <= kmax cops win; evidence that the cop number exceeds kmax."""

    def __init__(self, kmax):
        super().__init__(f"cop number exceeds kmax={kmax}")
        self.kmax = kmax


class IllegalMove(CoplabError):
    pass


class HypothesisViolated(CoplabError):
    pass


class NotNonBipartite(CoplabError, ValueError):
    pass


# hypergraph covers
class IsolatedVertex(CoplabError, ValueError):
    pass


class NotRegular(CoplabError, ValueError):
    pass


class EmptyEdge(CoplabError, ValueError):
    pass


class InvariantViolation(CoplabError, AssertionError):
    """A post-build structural check failed; indicates a bug, not bad input."""
