"""Errors raised by the positroid toolkit.

Every library error derives from :class:`PositroidError`. The management
commands map :class:`SizeLimitError` to exit status 3 and every other
:class:`PositroidError` to exit status 2.
"""


class PositroidError(Exception):
    """Base class for all toolkit errors."""


class MalformedInputError(PositroidError):
    """A JSON document or argument does not have the expected shape."""


class OutOfRangeError(PositroidError):
    """An element lies outside the ground set [n]."""


class DegeneratePairError(PositroidError):
    """A pair {i, i} was given."""


class OverlapError(PositroidError):
    """Two vertex sets that must be disjoint share an element."""


class NotAComponentError(PositroidError):
    """The vertex set is not a connected component of G_D."""


class SizeLimitError(PositroidError):
    """The ground set is too large for an exhaustive enumeration."""


class EmptyBasesError(PositroidError):
    """A bases family is empty."""


class BoxOutsideShapeError(PositroidError):
    """A prescribed Le-diagram box does not lie inside the shape."""


class NotLeError(PositroidError):
    """A filling violates the Le condition."""


class NotAMatroidError(PositroidError):
    """The dependent set does not have complete components."""


class NotNiceError(PositroidError):
    """The dependent set is not nice, so its complement is not a positroid."""


class RankDeficientError(PositroidError):
    """The positroid has rank below 2 (fewer than two components)."""


class DimensionMismatchError(PositroidError):
    """Objects on different ground sets were combined."""


class InvariantError(AssertionError):
    """An internal cross-check failed; this signals a bug, not bad input."""
