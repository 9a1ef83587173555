"""Exception types shared across posetlab."""


class PosetlabError(Exception):
    """Base class for all posetlab errors."""


class CycleDetected(PosetlabError):
    """The given cover relation contains a directed cycle."""


class UnknownElement(PosetlabError):
    """A referenced element is not part of the poset."""


class NotAnUpsetExtension(PosetlabError):
    """The supplied order violates the poset restricted to the upset."""


class OrderTooSmall(PosetlabError):
    """A family generator was asked for an order below its minimum."""


class IndexOutOfRange(PosetlabError):
    """A cyclic-interval index is outside [1, N]."""


class BudgetExceeded(PosetlabError):
    """A search hit its node or wall-clock cap; the result is unknown."""


class EdgeDoesNotEnter(PosetlabError):
    """The reference edge of a (u, e)-ordering does not enter u."""


class MissingEInfinity(PosetlabError):
    """The embedding has no anchor half-edge at the minimum."""


class PathNotAnchored(PosetlabError):
    """A path-based query requires a path starting at the anchored minimum."""


class NotAnchored(PathNotAnchored):
    """Path comparison requires both paths to start at the anchor."""


class PathsIntersect(PosetlabError):
    """Two boundary paths share an interior vertex."""


class NoPeak(PosetlabError):
    """No element of the boundary witnessing path lies above the source."""


class PreconditionViolated(PosetlabError):
    """The arguments violate a documented precondition."""


class MalformedCertificate(PosetlabError):
    """An interval certificate is structurally broken."""


class EmbeddingConstraintUnsatisfied(PosetlabError):
    """No computed embedding places the minimum on the outer face."""
