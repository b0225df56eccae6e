"""Exception hierarchy shared across the package.

Everything derives from RankCalcError so callers (notably the CLI) can map
domain failures to a single exit code while letting programming errors
propagate as ordinary ValueError/AssertionError.
"""


class RankCalcError(Exception):
    """Base class for domain errors raised by rankcalc operations."""


class ParseError(RankCalcError):
    """A text form did not match its documented grammar."""


class ShapeTooLarge(RankCalcError):
    """A partition or diagram does not fit in the required rectangle."""


class SizeMismatch(RankCalcError):
    """Two partitions were required to have equal size but do not."""


class NotHomogeneous(RankCalcError):
    """An expansion was required to be homogeneous but mixes degrees."""


class InvalidRankSet(RankCalcError):
    """Interval data violates the rank set invariants."""


class NotBounded(RankCalcError):
    """An affine permutation is not bounded (i <= f(i) <= i + n)."""


class NotRankSetShaped(RankCalcError):
    """A bounded affine permutation whose in-window small entries are not
    increasing, so it corresponds to no rank set."""


class EmptyRankSet(RankCalcError):
    """The operation requires a nonempty rank set."""


class ContextMismatch(RankCalcError):
    """Arithmetic attempted between classes of different Grassmannians."""


class UnsupportedDiagram(RankCalcError):
    """No decomposition rule is available for the given diagram."""


class NegativeMultiplicity(RankCalcError):
    """An expansion that must be a genuine module decomposition has a
    negative coefficient."""


class TooLarge(RankCalcError):
    """Input exceeds the documented size bound for a brute-force routine."""
